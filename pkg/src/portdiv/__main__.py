import sys

from portdiv.cli import main

sys.exit(main())
