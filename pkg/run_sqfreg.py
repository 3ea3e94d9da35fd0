# ANCHOR: wrapper (thin entry point; all logic lives in sqfreg.cli)
import sys

from sqfreg.cli import main

if __name__ == "__main__":
    sys.exit(main())
