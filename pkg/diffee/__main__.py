import sys

from diffee.cli import main

sys.exit(main())
