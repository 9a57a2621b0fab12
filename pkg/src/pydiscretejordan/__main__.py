"""Allow ``python -m pydiscretejordan``."""

import sys

from .cli import main

sys.exit(main())
