"""Reduction of atlases by merging strips across regular seams.

A seam both of whose intervals fill their sides bounds a trivially
foliated collar, so the two strips it joins can be replaced by a single
strip.  Repeating until no regular seam remains either produces a reduced
atlas (every surviving seam is singular) or ends in a single strip whose
two full sides are glued to each other, in which case the connected
surface is an open cylinder (increasing gluing) or an open Moebius band
(decreasing gluing) and has no reduced atlas at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from random import Random

from .atlas import Gluing, Parity, Strip, StripedAtlas, component_atlases
from .leafspace import LeafClass, LeafPoint, classify_leaf


class SurfaceKind(Enum):
    PROPER = "proper"
    OPEN_CYLINDER = "cylinder"
    OPEN_MOEBIUS_BAND = "moebius"


@dataclass(frozen=True)
class SurfaceClass:
    """Outcome of reducing one connected component.

    ``atlas`` carries the reduced atlas for PROPER and is None for the two
    exceptional kinds.
    """

    kind: SurfaceKind
    atlas: StripedAtlas | None = None


def canonical_exceptional_atlas(kind: SurfaceKind) -> StripedAtlas:
    """The one-strip atlas of an exceptional surface kind."""
    if kind is SurfaceKind.OPEN_CYLINDER:
        parity = Parity.INCREASING
    elif kind is SurfaceKind.OPEN_MOEBIUS_BAND:
        parity = Parity.DECREASING
    else:
        raise ValueError("no canonical atlas for the proper kind")
    return StripedAtlas(
        (Strip("S", ("a",), ("b",)),), (Gluing("a", "b", parity),)
    )


def regular_seams(atlas: StripedAtlas) -> tuple[Gluing, ...]:
    return tuple(
        g
        for g in atlas.gluings
        if classify_leaf(atlas, LeafPoint((g.a, g.b))) is LeafClass.REGULAR
    )


def is_reduced(atlas: StripedAtlas) -> bool:
    """True when no seam is regular (free intervals are always boundary)."""
    return not regular_seams(atlas)


def _merge_regular_seam(
    atlas: StripedAtlas, seam: Gluing
) -> StripedAtlas | SurfaceClass:
    """Merge the strips of one regular seam, or report an exceptional surface.

    When the gluing parity is decreasing, the strip that is second in id
    order is mirrored first: both of its side orders are reversed and the
    parity of every gluing flips once per endpoint on that strip.  The
    surviving strip keeps the first strip's id; its side 0 is the first
    strip's outer side and its side 1 the second strip's.
    """
    strip_a = atlas.location(seam.a)[0]
    strip_b = atlas.location(seam.b)[0]

    if strip_a == strip_b:
        # A regular seam on a single side would glue one full side to
        # itself, which validation forbids; only the opposite-sides case
        # can reach this point, and it pins down the whole component.
        if atlas.location(seam.a)[1] == atlas.location(seam.b)[1]:
            raise RuntimeError("regular seam joining a side to itself")
        kind = (
            SurfaceKind.OPEN_CYLINDER
            if seam.parity is Parity.INCREASING
            else SurfaceKind.OPEN_MOEBIUS_BAND
        )
        return SurfaceClass(kind)

    first, second = sorted((strip_a, strip_b))
    sides: dict[str, list[tuple[str, ...]]] = {
        s.id: [s.side0, s.side1] for s in atlas.strips
    }

    def endpoints_on(gluing: Gluing, strip_id: str) -> int:
        return sum(
            1
            for name in (gluing.a, gluing.b)
            if atlas.location(name)[0] == strip_id
        )

    parity_now: dict[Gluing, Parity] = {g: g.parity for g in atlas.gluings}
    if seam.parity is Parity.DECREASING:
        sides[second] = [sides[second][0][::-1], sides[second][1][::-1]]
        for g in atlas.gluings:
            parity_now[g] = parity_now[g].xor(endpoints_on(g, second))

    assert parity_now[seam] is Parity.INCREASING

    seam_first = seam.a if atlas.location(seam.a)[0] == first else seam.b
    seam_second = seam.other(seam_first)

    # Stack the first strip below the second: its seam side must face up
    # (side 1) and the second strip's seam side must face down (side 0).
    # Swapping a strip's sides leaves every gluing parity unchanged.
    if seam_first in sides[first][0]:
        sides[first].reverse()
    if seam_second in sides[second][1]:
        sides[second].reverse()
    assert sides[first][1] == (seam_first,)
    assert sides[second][0] == (seam_second,)

    merged = Strip(first, sides[first][0], sides[second][1])
    new_strips = tuple(
        merged if s.id == first else Strip(s.id, *sides[s.id])
        for s in atlas.strips
        if s.id != second
    )
    new_gluings = tuple(
        Gluing(g.a, g.b, parity_now[g]) for g in atlas.gluings if g != seam
    )
    return StripedAtlas(new_strips, new_gluings)


def reduce_component(atlas: StripedAtlas, rng: Random | None = None) -> SurfaceClass:
    """Reduce one connected atlas to a SurfaceClass.

    Merge order is deterministic (first regular seam in gluing order)
    unless ``rng`` is given; any order yields an isomorphic result.
    """
    current = atlas
    while True:
        seams = regular_seams(current)
        if not seams:
            return SurfaceClass(SurfaceKind.PROPER, current)
        seam = seams[0] if rng is None else seams[rng.randrange(len(seams))]
        outcome = _merge_regular_seam(current, seam)
        if isinstance(outcome, SurfaceClass):
            return outcome
        # Every merge removes exactly one strip and one seam, so the
        # strip/seam difference of the gluing graph is preserved.
        assert len(outcome.strips) == len(current.strips) - 1
        assert len(outcome.gluings) == len(current.gluings) - 1
        current = outcome


def reduce_atlas(
    atlas: StripedAtlas, rng: Random | None = None
) -> tuple[SurfaceClass, ...]:
    """Reduce every connected component, in order of first appearance."""
    return tuple(reduce_component(sub, rng) for sub in component_atlases(atlas))
