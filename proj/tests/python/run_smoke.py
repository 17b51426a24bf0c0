"""ctest entry point: runs the pytest smoke tests, or exits 77 (skip) when
the gridram package is not installed."""

import importlib.util
import os
import sys

if importlib.util.find_spec("gridram") is None:
    print("gridram python package not installed; skipping")
    sys.exit(77)

import pytest  # noqa: E402

sys.exit(pytest.main(["-q", "-p", "no:cacheprovider", os.path.dirname(os.path.abspath(__file__))]))
