import sys

from simt.cli import main

sys.exit(main())
