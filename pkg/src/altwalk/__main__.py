import sys

from altwalk.cli import main

sys.exit(main())
