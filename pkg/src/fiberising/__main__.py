"""Allow ``python -m fiberising``."""
import sys

from .cli import main

sys.exit(main())
