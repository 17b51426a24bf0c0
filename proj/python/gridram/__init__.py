"""Grid Ramsey workbench.

Grids and 3-graphs are passed around as JSON text, in the same format the
``gridram`` command line uses. ``load`` and ``dump`` convert to and from
plain Python dictionaries.
"""

import json

from ._gridram import *  # noqa: F401,F403
from ._gridram import CapExceeded, Error, InvalidArgument, ParseError

__all__ = ["load", "dump", "Error", "InvalidArgument", "CapExceeded", "ParseError"]


def load(text):
    """Parse grid or 3-graph JSON into a dictionary."""
    return json.loads(text)


def dump(obj):
    """Compact JSON for a grid or 3-graph dictionary."""
    return json.dumps(obj, separators=(",", ":"))
