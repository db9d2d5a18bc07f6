import sys

from gael.cli import main

sys.exit(main())
