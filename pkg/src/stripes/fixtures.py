"""Canonical example atlases shipped as package data.

========== =======================================================
name       surface
========== =======================================================
PLANE      one strip, no boundary intervals (the plane)
HALFPLANE  one strip, one free interval (the half plane)
CYL        one strip glued to itself increasingly (open cylinder)
MOEB       one strip glued to itself decreasingly (open Moebius band)
SAMESIDE   two intervals of one side glued to each other
PUNCTURED  two strips glued along two seams (the punctured plane)
LADDER     two strips stacked along one full-side seam
========== =======================================================
"""

from __future__ import annotations

from importlib import resources

from .atlas import StripedAtlas, parse_atlas

FIXTURE_NAMES = (
    "PLANE",
    "HALFPLANE",
    "CYL",
    "MOEB",
    "SAMESIDE",
    "PUNCTURED",
    "LADDER",
)


def fixture_text(name: str) -> str:
    """Raw atlas text of a named fixture."""
    if name.upper() not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}")
    path = resources.files("stripes.data").joinpath(f"{name.lower()}.atlas")
    return path.read_text(encoding="utf-8")


def fixture_atlas(name: str) -> StripedAtlas:
    """Parsed atlas of a named fixture."""
    return parse_atlas(fixture_text(name))


def all_fixtures() -> dict[str, StripedAtlas]:
    return {name: fixture_atlas(name) for name in FIXTURE_NAMES}
