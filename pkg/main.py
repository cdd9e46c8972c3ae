#!/usr/bin/env python3
"""
Kummer Hasse-Witt Toolkit - command line entry point

    python main.py analyze --p 13 --n 11 --f "x^2*(x+1)"
"""

import sys
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent
sys.path.insert(0, str(BASE_DIR))

from app.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
