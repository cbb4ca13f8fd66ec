"""Entry point for ``python -m treenorm``."""
import sys

from treenorm.cli import main

sys.exit(main())
