"""Entry point for ``python -m polylink``."""

from .cli import main

raise SystemExit(main())
