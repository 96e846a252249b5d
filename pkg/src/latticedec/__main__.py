"""Module entry point: ``python -m latticedec``."""

import sys

from latticedec.cli import main

if __name__ == "__main__":
    sys.exit(main())
