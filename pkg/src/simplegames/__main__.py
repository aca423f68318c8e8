import sys

from simplegames.cli import main

sys.exit(main())
