"""Bundled truth matrices.

``uk2010`` is the 10x10 correlation fragment of the 2010 UK market truth
used throughout the docs and tests.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

FIXTURE_IDS = ("uk2010",)


def is_fixture_id(name: str) -> bool:
    return name in FIXTURE_IDS


def fixture_path(fixture_id: str) -> Path:
    """Filesystem path of a bundled matrix CSV."""
    if not is_fixture_id(fixture_id):
        known = ", ".join(FIXTURE_IDS)
        raise KeyError(f"unknown fixture {fixture_id!r} (known: {known})")
    return Path(str(resources.files("netstab.data") / f"{fixture_id}.csv"))
