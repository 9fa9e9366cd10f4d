#!/usr/bin/env python3
"""
Main entry point for the wso-rk command-line tool.

Usage: python src/main.py {list,verify,export,construct,converge,gark-check} ...
"""

import sys
from pathlib import Path

# Add the src directory to Python path for imports
src_dir = Path(__file__).parent
sys.path.insert(0, str(src_dir))

from cli import run


def main():
    """Run the CLI and exit with its status."""
    try:
        sys.exit(run(sys.argv[1:]))
    except KeyboardInterrupt:
        sys.exit(130)


if __name__ == "__main__":
    main()
