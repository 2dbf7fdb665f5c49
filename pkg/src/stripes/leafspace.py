"""Combinatorial model of the leaf space of a glued strip surface.

Collapsing every leaf of the glued surface to a point yields a T1 but
generally non-Hausdorff one-dimensional space.  Its combinatorial model
consists of

* one open *arc* per strip (the interior leaves, ordered by the strip's
  second coordinate, so end 0 faces side 0 and end 1 faces side 1), and
* one *leaf point* per gluing (a seam) or free interval (a boundary leaf),
  attached to the arc ends where its constituent intervals sit.

Two leaf points cannot be separated by open sets exactly when they attach
to a common arc end: any saturated neighbourhood of one sweeps interior
leaves whose closure meets every interval on that end.  That rule is what
:func:`hcl_point` implements; :func:`hcl_bruteforce` recomputes Hausdorff
closures from first principles on a finite discretisation so the rule is
validated rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from .atlas import StripedAtlas


@dataclass(frozen=True, order=True)
class ArcEnd:
    """One end of an arc: ``side`` 0 or 1 of the strip the arc came from."""

    strip: str
    side: int

    def label(self) -> str:
        return f"{self.strip}.{self.side}"


@dataclass(frozen=True, order=True)
class Attachment:
    """A slot where a leaf point meets an arc end, at a position in the side."""

    end: ArcEnd
    index: int

    def label(self) -> str:
        return f"{self.end.label()}[{self.index}]"


@dataclass(frozen=True, order=True)
class LeafPoint:
    """A boundary leaf: a seam (two intervals) or a free interval (one)."""

    intervals: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple(sorted(self.intervals)))

    @property
    def is_seam(self) -> bool:
        return len(self.intervals) == 2

    @property
    def kind(self) -> str:
        return "seam" if self.is_seam else "free"

    def label(self) -> str:
        return "{" + ",".join(self.intervals) + "}"


class LeafClass(Enum):
    """How a boundary leaf sits in the surface.

    REGULAR leaves have a trivially foliated closed collar.  Among the
    non-regular ones, SPECIAL leaves are those whose Hausdorff closure is
    larger than the leaf itself; SINGULAR_NON_SPECIAL is the remaining
    case of two intervals filling one side, which is Hausdorff-separated
    but sits on the leaf-space boundary.
    """

    REGULAR = "Regular"
    SINGULAR_NON_SPECIAL = "SingularNonSpecial"
    SPECIAL = "Special"


@dataclass
class LeafSpaceModel:
    """Arcs, leaf points, and their ordered end attachments.

    ``end_points`` lists, for every arc end, the leaf point of each interval
    of that side in side order; a seam with both intervals on one end
    appears there twice.  Treated as immutable after construction.
    """

    arcs: tuple[str, ...]
    points: tuple[LeafPoint, ...]
    attachments: dict[LeafPoint, tuple[Attachment, ...]]
    end_points: dict[ArcEnd, tuple[LeafPoint, ...]]
    point_of: dict[str, LeafPoint] = field(repr=False)

    def ends_of(self, point: LeafPoint) -> tuple[ArcEnd, ...]:
        """Distinct arc ends a point attaches to, in attachment order."""
        seen: list[ArcEnd] = []
        for attachment in self.attachments[point]:
            if attachment.end not in seen:
                seen.append(attachment.end)
        return tuple(seen)


def build_leaf_space(atlas: StripedAtlas) -> LeafSpaceModel:
    """Quotient model of a valid atlas.

    Arcs biject with strips; points biject with gluings plus free
    intervals; attachment order is inherited from side order.
    """
    point_of: dict[str, LeafPoint] = {}
    for g in atlas.gluings:
        point = LeafPoint((g.a, g.b))
        point_of[g.a] = point
        point_of[g.b] = point
    for name in atlas.free_intervals:
        point_of[name] = LeafPoint((name,))

    points = tuple(sorted(set(point_of.values())))

    attachments: dict[LeafPoint, tuple[Attachment, ...]] = {}
    for point in points:
        slots = []
        for name in point.intervals:
            strip_id, side, index = atlas.location(name)
            slots.append(Attachment(ArcEnd(strip_id, side), index))
        attachments[point] = tuple(slots)

    end_points: dict[ArcEnd, tuple[LeafPoint, ...]] = {}
    for s in atlas.strips:
        for side in (0, 1):
            end = ArcEnd(s.id, side)
            end_points[end] = tuple(point_of[name] for name in s.side(side))

    return LeafSpaceModel(
        arcs=tuple(s.id for s in atlas.strips),
        points=points,
        attachments=attachments,
        end_points=end_points,
        point_of=point_of,
    )


def hcl_point(model: LeafSpaceModel, point: LeafPoint) -> frozenset[LeafPoint]:
    """Hausdorff closure of a leaf point, restricted to leaf points.

    Everything attached to an arc end that ``point`` attaches to; always
    contains the point itself.
    """
    out: set[LeafPoint] = {point}
    for end in model.ends_of(point):
        out.update(model.end_points[end])
    return frozenset(out)


def special_points(model: LeafSpaceModel) -> frozenset[LeafPoint]:
    """Points whose Hausdorff closure is larger than themselves."""
    return frozenset(p for p in model.points if hcl_point(model, p) != {p})


def boundary_points(model: LeafSpaceModel) -> frozenset[LeafPoint]:
    """Points approached from one arc end only (local model ``[0,1)``).

    Free intervals and same-end seams qualify; a seam attached to two
    distinct ends is an interior point of the leaf space.
    """
    return frozenset(p for p in model.points if len(model.ends_of(p)) == 1)


def classify_leaf(atlas: StripedAtlas, point: LeafPoint) -> LeafClass:
    """Classify a boundary leaf from the side patterns of its intervals.

    A seam is REGULAR when each of its intervals fills its whole side,
    SINGULAR_NON_SPECIAL when its two intervals together fill one single
    side, and SPECIAL otherwise.  A free interval is REGULAR when it fills
    its side and SPECIAL otherwise; it is never SINGULAR_NON_SPECIAL.
    """
    if point.is_seam:
        a, b = point.intervals
        strip_a, side_a, _ = atlas.location(a)
        strip_b, side_b, _ = atlas.location(b)
        full_a = atlas.strip(strip_a).side(side_a) == (a,)
        full_b = atlas.strip(strip_b).side(side_b) == (b,)
        if full_a and full_b:
            return LeafClass.REGULAR
        if strip_a == strip_b and side_a == side_b:
            if set(atlas.strip(strip_a).side(side_a)) == {a, b}:
                return LeafClass.SINGULAR_NON_SPECIAL
        return LeafClass.SPECIAL

    (name,) = point.intervals
    strip_id, side, _ = atlas.location(name)
    if atlas.strip(strip_id).side(side) == (name,):
        return LeafClass.REGULAR
    return LeafClass.SPECIAL


# ---------------------------------------------------------------------------
# Finite discretisation and the first-principles Hausdorff-closure oracle


@dataclass(frozen=True, order=True)
class Sample:
    """An interior sample near an arc end; depth k is closest to the end."""

    strip: str
    side: int
    depth: int

    def label(self) -> str:
        return f"y({self.strip}.{self.side}.{self.depth})"


@dataclass
class FiniteBasisSpace:
    """A finite topological space presented by a basis of open sets."""

    ground: frozenset
    basis: tuple[frozenset, ...]

    def __post_init__(self):
        neighbourhoods: dict = {x: [] for x in self.ground}
        for basic in self.basis:
            for x in basic:
                neighbourhoods[x].append(basic)
        self._neighbourhoods = {x: tuple(vs) for x, vs in neighbourhoods.items()}

    def neighbourhoods(self, x) -> tuple[frozenset, ...]:
        """All basic open sets containing ``x``."""
        return self._neighbourhoods[x]

    def closure(self, subset: frozenset) -> frozenset:
        """Points every basic neighbourhood of which meets ``subset``."""
        return frozenset(
            x
            for x in self.ground
            if all(not basic.isdisjoint(subset) for basic in self._neighbourhoods[x])
        )


def sampled_space(model: LeafSpaceModel, k: int) -> FiniteBasisSpace:
    """Discretise a leaf-space model with ``k`` interior samples per end region.

    Ground set: the leaf points plus, for every arc end, samples at depths
    1..k (depth k closest to the end).  Basis: every sample is open as a
    singleton; a leaf point ``p`` gets, for each depth ``j``, the set of
    ``p`` together with the depth >= j tails of **all** its attached ends.
    Tails are shared between points on a common end, which is what makes
    the discretised closures reproduce :func:`hcl_point` on leaf points.
    """
    if k < 1:
        raise ValueError("sample count k must be >= 1")

    samples = {
        (end.strip, end.side): tuple(
            Sample(end.strip, end.side, depth) for depth in range(1, k + 1)
        )
        for end in model.end_points
    }

    ground: set = set(model.points)
    basis: list[frozenset] = []
    for per_end in samples.values():
        ground.update(per_end)
        basis.extend(frozenset((sample,)) for sample in per_end)

    for point in model.points:
        ends = model.ends_of(point)
        for j in range(1, k + 1):
            tail: set = {point}
            for end in ends:
                tail.update(samples[(end.strip, end.side)][j - 1 :])
            basis.append(frozenset(tail))

    return FiniteBasisSpace(frozenset(ground), tuple(basis))


def hcl_bruteforce(space: FiniteBasisSpace, x) -> frozenset:
    """Hausdorff closure from the definition: meet of closures of all
    basic neighbourhoods of ``x``."""
    neighbourhoods = space.neighbourhoods(x)
    if not neighbourhoods:
        raise ValueError(f"{x!r} has no basic neighbourhood")
    result: frozenset | None = None
    for basic in neighbourhoods:
        closed = space.closure(basic)
        result = closed if result is None else result & closed
    assert result is not None
    return result
