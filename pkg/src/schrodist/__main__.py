"""Allow ``python -m schrodist``."""

import sys

from .cli import main

sys.exit(main())
