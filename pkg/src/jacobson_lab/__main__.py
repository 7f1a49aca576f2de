"""
Entry point for running the package as a module.

Usage:
    python -m jacobson_lab classify "Z3 x Z3"
    python -m jacobson_lab verify "Z2 x Z5"
"""

import sys

from jacobson_lab.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
