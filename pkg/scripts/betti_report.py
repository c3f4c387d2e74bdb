#!/usr/bin/env python3
"""Print the minimalized Betti table for the builtin small presentation.

Usage: python scripts/betti_report.py [--l 3] [--D 16] [--json]
"""

import sys

from anickres.cli import main

if __name__ == "__main__":
    args = sys.argv[1:]
    if "--l" not in args:
        args += ["--l", "3"]
    if "--D" not in args:
        args += ["--D", "16"]
    sys.exit(main(["betti", "--builtin", "small", *args]))
