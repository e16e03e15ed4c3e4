"""Allow `python -m figemit ...` as an alternative to the console script."""

from .cli import console_main

if __name__ == "__main__":
    console_main()
