"""Entry point for running diamgraph as a module."""
import sys
from diamgraph.cli.cli import main

if __name__ == '__main__':
    sys.exit(main())
