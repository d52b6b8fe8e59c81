"""Allow ``python -m kstlab ...`` to behave like the ``kstlab`` script."""

import sys

from .cli import main

sys.exit(main())
