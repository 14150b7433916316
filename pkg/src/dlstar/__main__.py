"""Allow `python -m dlstar`."""

import sys

from .cli import main

sys.exit(main())
