#!/usr/bin/env python3
"""Run all acceptance criteria and print one PASS/FAIL/INFO line per criterion.

Exit status is 0 iff every gating criterion passes.

Usage: python scripts/acceptance.py
"""

import sys

from anickres.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify", *sys.argv[1:]]))
