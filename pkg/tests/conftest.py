import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from piclass.catalog import build, census, parse_name


@pytest.fixture(scope="session")
def named():
    """Build-on-demand cache of catalog groups by census name."""
    groups = {}

    def get(name):
        if name not in groups:
            groups[name] = build(parse_name(name))
        return groups[name]

    return get


@pytest.fixture(scope="session")
def census_entries():
    """The full default census, shared (and memoized) across the session."""
    return list(census())
