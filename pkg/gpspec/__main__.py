import sys

from gpspec.cli import main

sys.exit(main())
