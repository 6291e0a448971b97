import sys

from su2walk.cli import main

sys.exit(main())
