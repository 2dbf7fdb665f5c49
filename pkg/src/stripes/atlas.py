"""Finite combinatorial atlases of surfaces glued from strips.

A strip is a copy of the open band R x (0,1) together with two ordered,
finite lists of named open boundary intervals, one list per boundary side.
An atlas is a finite set of strips plus a set of gluings, each gluing
identifying two distinct intervals by a monotone homeomorphism.  Only the
combinatorics is retained: interval order along each side, and the
monotonicity class (parity) of every gluing.  Endpoint coordinates are
deliberately not modelled; the homeomorphism type of the glued surface
depends only on this data.

The text format understood by :func:`parse_atlas` is line oriented::

    strip <name>
    side0 <interval> <interval> ...   # optional, left-to-right order
    side1 <interval> ...              # optional
    glue <interval> <interval> +|-    # + increasing, - decreasing

``side0``/``side1`` lines bind to the most recent ``strip`` line.  A ``#``
starts a comment.  Any interval not named in a ``glue`` line is free.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator


class AtlasError(ValueError):
    """Malformed atlas text or an operation on an unusable atlas."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class Parity(Enum):
    """Monotonicity class of a gluing homeomorphism.

    A monotone map and its inverse share the class, so the parity belongs
    to the unordered interval pair rather than to a direction of gluing.
    """

    INCREASING = "+"
    DECREASING = "-"

    @property
    def symbol(self) -> str:
        return self.value

    def flipped(self) -> "Parity":
        return Parity.DECREASING if self is Parity.INCREASING else Parity.INCREASING

    def xor(self, bit: int) -> "Parity":
        """Parity after conjugating by ``bit`` many order reversals."""
        return self.flipped() if bit & 1 else self

    @staticmethod
    def from_symbol(token: str) -> "Parity":
        for parity in Parity:
            if parity.value == token:
                return parity
        raise ValueError(f"parity must be '+' or '-', got {token!r}")


@dataclass(frozen=True)
class Strip:
    """One strip: an id and two ordered interval lists.

    ``side0``/``side1`` list interval names in increasing coordinate order
    along the respective boundary line.  Either list may be empty.
    """

    id: str
    side0: tuple[str, ...] = ()
    side1: tuple[str, ...] = ()

    def side(self, which: int) -> tuple[str, ...]:
        if which == 0:
            return self.side0
        if which == 1:
            return self.side1
        raise ValueError(f"side index must be 0 or 1, got {which}")

    @property
    def intervals(self) -> tuple[str, ...]:
        return self.side0 + self.side1


@dataclass(frozen=True)
class Gluing:
    """Identification of two distinct intervals, as an unordered pair.

    The pair is normalised so that ``a <= b``; equality and hashing then
    agree with the unordered-pair semantics.
    """

    a: str
    b: str
    parity: Parity

    def __post_init__(self):
        if self.b < self.a:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def pair(self) -> frozenset[str]:
        return frozenset((self.a, self.b))

    def other(self, interval: str) -> str:
        if interval == self.a:
            return self.b
        if interval == self.b:
            return self.a
        raise KeyError(f"interval {interval!r} is not an endpoint of this gluing")


@dataclass(frozen=True, eq=False)
class StripedAtlas:
    """A finite set of strips plus gluings between their intervals.

    Values are immutable after construction and all operations on them are
    pure, so atlases may be shared freely between workers.  Construction
    performs no validation; see :func:`validate`.
    """

    strips: tuple[Strip, ...]
    gluings: tuple[Gluing, ...]

    def __post_init__(self):
        object.__setattr__(self, "strips", tuple(self.strips))
        object.__setattr__(self, "gluings", tuple(self.gluings))

    # Two atlases are equal when they have the same strips and the same
    # gluings; the order in which either was listed is irrelevant.
    def __eq__(self, other):
        if not isinstance(other, StripedAtlas):
            return NotImplemented
        return (
            frozenset(self.strips) == frozenset(other.strips)
            and frozenset(self.gluings) == frozenset(other.gluings)
        )

    def __hash__(self):
        return hash((frozenset(self.strips), frozenset(self.gluings)))

    @cached_property
    def _strips_by_id(self) -> dict[str, Strip]:
        return {s.id: s for s in self.strips}

    @property
    def strip_ids(self) -> tuple[str, ...]:
        return tuple(s.id for s in self.strips)

    def strip(self, strip_id: str) -> Strip:
        return self._strips_by_id[strip_id]

    @cached_property
    def _locations(self) -> dict[str, tuple[str, int, int]]:
        # Interval name -> (strip id, side, index in side); first occurrence
        # wins, which only matters for invalid (duplicate-name) atlases.
        out: dict[str, tuple[str, int, int]] = {}
        for s in self.strips:
            for which in (0, 1):
                for index, name in enumerate(s.side(which)):
                    out.setdefault(name, (s.id, which, index))
        return out

    def location(self, interval: str) -> tuple[str, int, int]:
        """Return ``(strip id, side, index in side)`` of an interval."""
        return self._locations[interval]

    def intervals(self) -> tuple[str, ...]:
        return tuple(
            name for s in self.strips for which in (0, 1) for name in s.side(which)
        )

    @cached_property
    def gluing_of(self) -> dict[str, Gluing]:
        out: dict[str, Gluing] = {}
        for g in self.gluings:
            out.setdefault(g.a, g)
            out.setdefault(g.b, g)
        return out

    @cached_property
    def free_intervals(self) -> tuple[str, ...]:
        glued = self.gluing_of
        return tuple(name for name in self.intervals() if name not in glued)

    def is_free(self, interval: str) -> bool:
        return interval not in self.gluing_of


def validate(atlas: StripedAtlas) -> list[str]:
    """Return all invariant violations of an atlas; empty means valid.

    Never raises: the point is to report on hand-built or adversarial
    values.  Checked invariants: unique strip ids, globally unique interval
    names, gluing endpoints exist, no interval glued to itself, no interval
    in more than one gluing.
    """
    problems: list[str] = []

    seen_strips: set[str] = set()
    for s in atlas.strips:
        if s.id in seen_strips:
            problems.append(f"duplicate strip id {s.id!r}")
        seen_strips.add(s.id)

    seen_intervals: set[str] = set()
    for s in atlas.strips:
        for which in (0, 1):
            for name in s.side(which):
                if name in seen_intervals:
                    problems.append(f"interval {name!r} appears more than once")
                seen_intervals.add(name)

    uses: dict[str, int] = {}
    for g in atlas.gluings:
        if g.a == g.b:
            problems.append(f"interval {g.a!r} glued to itself")
        for name in (g.a, g.b):
            if name not in seen_intervals:
                problems.append(f"gluing references unknown interval {name!r}")
            uses[name] = uses.get(name, 0) + 1
    for name, count in uses.items():
        if count > 1:
            problems.append(f"interval {name!r} multiply glued")

    return problems


def is_valid(atlas: StripedAtlas) -> bool:
    return not validate(atlas)


def connected_components(atlas: StripedAtlas) -> tuple[frozenset[str], ...]:
    """Partition strip ids into gluing-connected classes.

    Two strips are linked when some gluing has one endpoint on each;
    components are returned in order of first appearance in the atlas.
    """
    neighbours: dict[str, set[str]] = {s.id: set() for s in atlas.strips}
    for g in atlas.gluings:
        sa = atlas.location(g.a)[0]
        sb = atlas.location(g.b)[0]
        neighbours[sa].add(sb)
        neighbours[sb].add(sa)

    seen: set[str] = set()
    components: list[frozenset[str]] = []
    for s in atlas.strips:
        if s.id in seen:
            continue
        stack = [s.id]
        component: set[str] = set()
        while stack:
            current = stack.pop()
            if current in component:
                continue
            component.add(current)
            stack.extend(neighbours[current] - component)
        seen |= component
        components.append(frozenset(component))
    return tuple(components)


def is_connected(atlas: StripedAtlas) -> bool:
    return len(connected_components(atlas)) == 1


def component_atlases(atlas: StripedAtlas) -> tuple[StripedAtlas, ...]:
    """Split an atlas into the sub-atlases of its connected components."""
    out = []
    for component in connected_components(atlas):
        strips = tuple(s for s in atlas.strips if s.id in component)
        gluings = tuple(
            g for g in atlas.gluings if atlas.location(g.a)[0] in component
        )
        out.append(StripedAtlas(strips, gluings))
    return tuple(out)


# ---------------------------------------------------------------------------
# Text format


def parse_atlas(text: str) -> StripedAtlas:
    """Parse atlas text; raise :class:`AtlasError` with a line number on bad input.

    Identifiers are preserved verbatim.  Gluings may reference intervals
    declared on any line, earlier or later.
    """
    strips: list[tuple[str, list[tuple[str, ...] | None]]] = []
    strip_names: set[str] = set()
    interval_lines: dict[str, int] = {}
    glue_requests: list[tuple[int, str, str, Parity]] = []
    glued: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        keyword, args = tokens[0], tokens[1:]

        if keyword == "strip":
            if len(args) != 1:
                raise AtlasError("expected: strip <name>", lineno)
            if args[0] in strip_names:
                raise AtlasError(f"duplicate strip id {args[0]!r}", lineno)
            strip_names.add(args[0])
            strips.append((args[0], [None, None]))

        elif keyword in ("side0", "side1"):
            if not strips:
                raise AtlasError(f"{keyword} before any strip", lineno)
            which = 0 if keyword == "side0" else 1
            name, sides = strips[-1]
            if sides[which] is not None:
                raise AtlasError(f"{keyword} given twice for strip {name!r}", lineno)
            for interval in args:
                if interval in interval_lines:
                    raise AtlasError(f"duplicate interval id {interval!r}", lineno)
                interval_lines[interval] = lineno
            sides[which] = tuple(args)

        elif keyword == "glue":
            if len(args) != 3:
                raise AtlasError("expected: glue <interval> <interval> +|-", lineno)
            a, b, parity_token = args
            try:
                parity = Parity.from_symbol(parity_token)
            except ValueError as exc:
                raise AtlasError(str(exc), lineno) from None
            if a == b:
                raise AtlasError(f"interval {a!r} glued to itself", lineno)
            for name in (a, b):
                if name in glued:
                    raise AtlasError(f"interval {name!r} glued twice", lineno)
                glued.add(name)
            glue_requests.append((lineno, a, b, parity))

        else:
            raise AtlasError(f"unknown directive {keyword!r}", lineno)

    for lineno, a, b, _ in glue_requests:
        for name in (a, b):
            if name not in interval_lines:
                raise AtlasError(f"glue references unknown interval {name!r}", lineno)

    return StripedAtlas(
        strips=tuple(
            Strip(name, sides[0] or (), sides[1] or ()) for name, sides in strips
        ),
        gluings=tuple(Gluing(a, b, parity) for _, a, b, parity in glue_requests),
    )


def serialize_atlas(atlas: StripedAtlas) -> str:
    """Render an atlas in the text format; ``parse_atlas`` inverts this."""
    lines: list[str] = []
    for s in atlas.strips:
        lines.append(f"strip {s.id}")
        if s.side0:
            lines.append("side0 " + " ".join(s.side0))
        if s.side1:
            lines.append("side1 " + " ".join(s.side1))
    for g in atlas.gluings:
        lines.append(f"glue {g.a} {g.b} {g.parity.symbol}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Structure-preserving witnesses between atlases
#
# A witness (strip_map, side_flip, reversal) sends strip L to strip
# strip_map[L], its side e to side e ^ side_flip[L], preserving interval
# order when reversal[L] == 0 and reversing it when reversal[L] == 1.
# Conjugating a monotone gluing map by one order reversal flips its
# monotonicity class, hence a gluing of parity p must land on a gluing of
# parity p ^ reversal[strip of a] ^ reversal[strip of b].


def witness_interval_map(
    src: StripedAtlas,
    dst: StripedAtlas,
    strip_map: dict[str, str],
    side_flip: dict[str, int],
    reversal: dict[str, int],
) -> dict[str, str] | None:
    """Interval bijection induced by a witness, or None on side-size clash."""
    mapping: dict[str, str] = {}
    for s in src.strips:
        target = dst.strip(strip_map[s.id])
        for which in (0, 1):
            source_side = s.side(which)
            target_side = target.side(which ^ side_flip[s.id])
            if len(source_side) != len(target_side):
                return None
            if reversal[s.id]:
                target_side = target_side[::-1]
            mapping.update(zip(source_side, target_side))
    return mapping


def is_valid_witness(
    src: StripedAtlas,
    dst: StripedAtlas,
    strip_map: dict[str, str],
    side_flip: dict[str, int],
    reversal: dict[str, int],
) -> bool:
    """Check the witness validity rules between two valid atlases."""
    if sorted(strip_map) != sorted(src.strip_ids):
        return False
    if sorted(strip_map.values()) != sorted(dst.strip_ids):
        return False
    mapping = witness_interval_map(src, dst, strip_map, side_flip, reversal)
    if mapping is None:
        return False

    target_parities = {g.pair: g.parity for g in dst.gluings}
    for g in src.gluings:
        bits = reversal[src.location(g.a)[0]] ^ reversal[src.location(g.b)[0]]
        expected = g.parity.xor(bits)
        image = frozenset((mapping[g.a], mapping[g.b]))
        if target_parities.get(image) != expected:
            return False

    target_glued = set(dst.gluing_of)
    for name in src.free_intervals:
        if mapping[name] in target_glued:
            return False
    return True


def _shape(strip: Strip) -> tuple[int, int]:
    # Unordered side-size pair; a side flip may exchange the two sides.
    return tuple(sorted((len(strip.side0), len(strip.side1))))  # type: ignore[return-value]


def iter_witnesses(
    src: StripedAtlas, dst: StripedAtlas, prune: bool = True
) -> Iterator[tuple[dict[str, str], dict[str, int], dict[str, int]]]:
    """Yield every valid witness from ``src`` to ``dst``.

    With ``prune`` the candidate strip assignments are filtered by side-size
    shape before validation; the yielded set is identical either way.
    """
    src_ids = src.strip_ids
    dst_ids = dst.strip_ids
    if len(src_ids) != len(dst_ids) or len(src.gluings) != len(dst.gluings):
        return

    if prune:
        candidates = {
            sid: [
                tid for tid in dst_ids if _shape(dst.strip(tid)) == _shape(src.strip(sid))
            ]
            for sid in src_ids
        }
    else:
        candidates = {sid: list(dst_ids) for sid in src_ids}

    for assignment in itertools.permutations(dst_ids):
        strip_map = dict(zip(src_ids, assignment))
        if any(strip_map[sid] not in candidates[sid] for sid in src_ids):
            continue
        flip_options: list[tuple[int, ...]] = []
        for sid in src_ids:
            source = src.strip(sid)
            target = dst.strip(strip_map[sid])
            options = tuple(
                flip
                for flip in (0, 1)
                if len(source.side0) == len(target.side(flip))
                and len(source.side1) == len(target.side(1 ^ flip))
            )
            flip_options.append(options if prune else (0, 1))
        for flips in itertools.product(*flip_options):
            side_flip = dict(zip(src_ids, flips))
            for bits in itertools.product((0, 1), repeat=len(src_ids)):
                reversal = dict(zip(src_ids, bits))
                if is_valid_witness(src, dst, strip_map, side_flip, reversal):
                    yield strip_map, side_flip, reversal


def isomorphic(
    a: StripedAtlas, b: StripedAtlas
) -> tuple[dict[str, str], dict[str, int], dict[str, int]] | None:
    """Return some structure-preserving witness from ``a`` to ``b``, or None."""
    return next(iter_witnesses(a, b), None)


def relabelled(
    atlas: StripedAtlas,
    order: tuple[Strip, ...],
    names: tuple[str, ...],
    flips: tuple[int, ...],
    bits: tuple[int, ...],
) -> StripedAtlas:
    """Apply a witness-shaped relabelling and rename intervals positionally."""
    new_name = dict(zip((s.id for s in order), names))
    flip = dict(zip((s.id for s in order), flips))
    reverse = dict(zip((s.id for s in order), bits))

    interval_names: dict[str, str] = {}
    new_strips = []
    for s in order:
        sides = []
        for which in (0, 1):
            side = s.side(which ^ flip[s.id])
            if reverse[s.id]:
                side = side[::-1]
            renamed = tuple(
                f"{new_name[s.id]}.{which}.{i}" for i in range(len(side))
            )
            interval_names.update(zip(side, renamed))
            sides.append(renamed)
        new_strips.append(Strip(new_name[s.id], sides[0], sides[1]))

    new_gluings = []
    for g in atlas.gluings:
        change = reverse[atlas.location(g.a)[0]] ^ reverse[atlas.location(g.b)[0]]
        new_gluings.append(
            Gluing(interval_names[g.a], interval_names[g.b], g.parity.xor(change))
        )
    new_gluings.sort(key=lambda g: (g.a, g.b, g.parity.symbol))
    return StripedAtlas(tuple(new_strips), tuple(new_gluings))


def canonical_form(atlas: StripedAtlas) -> str:
    """Canonical text form: minimum over all relabellings.

    Two valid atlases are isomorphic exactly when their canonical forms are
    equal, because a witness is determined by a strip assignment, a side
    flip and an order reversal per strip, interval names being positional.
    """
    count = len(atlas.strips)
    names = tuple(f"T{i}" for i in range(1, count + 1))
    best: str | None = None
    for order in itertools.permutations(atlas.strips):
        for flips in itertools.product((0, 1), repeat=count):
            for bits in itertools.product((0, 1), repeat=count):
                text = serialize_atlas(relabelled(atlas, order, names, flips, bits))
                if best is None or text < best:
                    best = text
    assert best is not None
    return best
