"""
Entry point for running rook_orbits as a module.

Usage: python -m rook_orbits [args]
"""

import sys
from rook_orbits.cli import main

if __name__ == '__main__':
    sys.exit(main())
