#!/usr/bin/env python3
"""
Run the command line interface with `python -m QuarterWalkComp`.
"""
import sys
from .cli import main

if __name__ == "__main__":
	sys.exit(main())
