"""Shared test configuration.

Keeps the suite runnable from a plain checkout by putting ``src`` on the
path before the installed copy.
"""

from __future__ import annotations

import sys
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))
