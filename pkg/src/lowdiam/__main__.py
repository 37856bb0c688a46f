import sys

from lowdiam.cli import main

sys.exit(main())
