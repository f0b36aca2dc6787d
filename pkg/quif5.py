#!/usr/bin/env python3
"""
quif5 launcher

Usage: python quif5.py <command> <file.qv> [--json] [--oracle-check]
"""

import sys

from src.main import main

if __name__ == '__main__':
    sys.exit(main())
