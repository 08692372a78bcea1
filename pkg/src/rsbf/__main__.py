import sys

from rsbf.cli import main

sys.exit(main())
