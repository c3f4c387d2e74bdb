#!/usr/bin/env python3
"""Run the bounded conjecture scans and print a verdict-or-witness report.

Usage: python scripts/conjecture_scan.py [--json]
"""

import sys

from anickres.cli import main

if __name__ == "__main__":
    sys.exit(main(["conjectures", *sys.argv[1:]]))
