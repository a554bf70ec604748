import sys

from .certify import main

sys.exit(main())
