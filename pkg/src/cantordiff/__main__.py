import sys

from cantordiff.cli import main

sys.exit(main())
