"""Combinatorial automorphisms of an atlas and their leaf-space action.

An isotopy class of foliated self-homeomorphisms of a glued strip surface
is captured combinatorially by a triple per strip: where the strip goes
(``strip_map``), whether its two sides are exchanged (``side_flip``), and
whether its leaves are traversed in reversed order (``reversal``).  The
side flip reverses the transverse direction of the strip and hence the
orientation of the corresponding arc of the leaf space; the reversal bit
reverses every leaf inside the strip and is invisible on the leaf space
except through the induced permutation of boundary leaves.

For a reduced atlas these triples realise the group of isotopy classes.
On a non-reduced atlas the enumerated group is merely combinatorial: a
rotation of a two-strip cylinder chain is a nontrivial triple although the
underlying homeomorphism is isotopic to the identity.  Operations that
carry isotopy meaning therefore insist on reduced input.

The kernel computation rests on two facts checked instance by instance by
the test suite: an automorphism acting trivially on the leaf space must
keep every strip and side in place with all leaf points fixed, and its
reversal bits must then agree across every gluing, hence be constant on a
connected atlas.  So besides the identity at most one such automorphism
exists, the all-ones reversal, and the kernel is trivial or of order two.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial

from .atlas import (
    StripedAtlas,
    connected_components,
    is_valid_witness,
    iter_witnesses,
    witness_interval_map,
)
from .leafspace import LeafPoint, LeafSpaceModel, build_leaf_space
from .reduction import (
    SurfaceKind,
    canonical_exceptional_atlas,
    is_reduced,
    reduce_component,
)


class DisconnectedAtlasError(ValueError):
    """Raised by operations that are only defined on connected atlases."""


class NotReducedError(ValueError):
    """Raised by isotopy-level tests applied to a non-reduced atlas."""


@dataclass(frozen=True, eq=False)
class AtlasAutomorphism:
    """A strip permutation with a side flip bit and a reversal bit per strip."""

    strip_map: dict[str, str]
    side_flip: dict[str, int]
    reversal: dict[str, int]

    def key(self):
        return (
            tuple(sorted(self.strip_map.items())),
            tuple(sorted(self.side_flip.items())),
            tuple(sorted(self.reversal.items())),
        )

    def __eq__(self, other):
        if not isinstance(other, AtlasAutomorphism):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"AtlasAutomorphism({self.format()})"

    @property
    def is_identity(self) -> bool:
        return (
            all(s == t for s, t in self.strip_map.items())
            and not any(self.side_flip.values())
            and not any(self.reversal.values())
        )

    def compose(self, other: "AtlasAutomorphism") -> "AtlasAutomorphism":
        """``self`` after ``other``: apply ``other`` first."""
        return AtlasAutomorphism(
            strip_map={
                s: self.strip_map[other.strip_map[s]] for s in other.strip_map
            },
            side_flip={
                s: other.side_flip[s] ^ self.side_flip[other.strip_map[s]]
                for s in other.strip_map
            },
            reversal={
                s: other.reversal[s] ^ self.reversal[other.strip_map[s]]
                for s in other.strip_map
            },
        )

    def inverse(self) -> "AtlasAutomorphism":
        backwards = {t: s for s, t in self.strip_map.items()}
        return AtlasAutomorphism(
            strip_map=backwards,
            side_flip={t: self.side_flip[s] for t, s in backwards.items()},
            reversal={t: self.reversal[s] for t, s in backwards.items()},
        )

    def interval_map(self, atlas: StripedAtlas) -> dict[str, str]:
        mapping = witness_interval_map(
            atlas, atlas, self.strip_map, self.side_flip, self.reversal
        )
        if mapping is None:
            raise ValueError("automorphism does not fit the atlas")
        return mapping

    def format(self) -> str:
        """One-line rendering, strips in sorted order."""
        strips = sorted(self.strip_map)
        return " ".join(
            (
                "sigma: " + ",".join(f"{s}->{self.strip_map[s]}" for s in strips),
                "m: " + ",".join(f"{s}={self.side_flip[s]}" for s in strips),
                "r: " + ",".join(f"{s}={self.reversal[s]}" for s in strips),
            )
        )


def identity_automorphism(atlas: StripedAtlas) -> AtlasAutomorphism:
    ids = atlas.strip_ids
    return AtlasAutomorphism(
        strip_map={s: s for s in ids},
        side_flip={s: 0 for s in ids},
        reversal={s: 0 for s in ids},
    )


def all_leaf_reversal(atlas: StripedAtlas) -> AtlasAutomorphism:
    """The candidate that keeps every strip and side but reverses all leaves."""
    ids = atlas.strip_ids
    return AtlasAutomorphism(
        strip_map={s: s for s in ids},
        side_flip={s: 0 for s in ids},
        reversal={s: 1 for s in ids},
    )


def is_valid_automorphism(
    atlas: StripedAtlas,
    strip_map: dict[str, str],
    side_flip: dict[str, int],
    reversal: dict[str, int],
) -> bool:
    """Validity of a candidate triple on one atlas.

    Side sizes must match under the flip, the induced positional interval
    bijection must carry every gluing of parity p to a gluing of parity
    p ^ reversal[strip of a] ^ reversal[strip of b], and free intervals
    must stay free.
    """
    return is_valid_witness(atlas, atlas, strip_map, side_flip, reversal)


def enumerate_automorphisms(
    atlas: StripedAtlas, prune: bool = True, threads: int = 0
) -> tuple[AtlasAutomorphism, ...]:
    """Every valid automorphism, canonically sorted.

    ``prune`` filters strip assignments by side-size shape before
    validation; the result is the same as the unpruned brute force.
    ``threads`` > 1 splits the search by strip assignment; candidate
    validation is pure, and the sorted result is order independent.
    """
    if threads and threads > 1:
        assignments = list(itertools.permutations(atlas.strip_ids))

        def chunk(assignment):
            found = []
            sub = _witnesses_for_assignment(atlas, assignment, prune)
            for strip_map, side_flip, reversal in sub:
                found.append(AtlasAutomorphism(strip_map, side_flip, reversal))
            return found

        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(chunk, assignments))
        elements = [aut for part in parts for aut in part]
    else:
        elements = [
            AtlasAutomorphism(strip_map, side_flip, reversal)
            for strip_map, side_flip, reversal in iter_witnesses(atlas, atlas, prune)
        ]
    return tuple(sorted(elements, key=AtlasAutomorphism.key))


def composition_table(
    group: tuple[AtlasAutomorphism, ...]
) -> dict[tuple[int, int], int]:
    """Index table of a closed element list: ``(i, j) -> k`` with
    ``group[i].compose(group[j]) == group[k]``."""
    index = {aut: i for i, aut in enumerate(group)}
    table = {}
    for i, a in enumerate(group):
        for j, b in enumerate(group):
            product = a.compose(b)
            if product not in index:
                raise ValueError("element list is not closed under composition")
            table[(i, j)] = index[product]
    return table


def _witnesses_for_assignment(atlas: StripedAtlas, assignment, prune: bool):
    # Same search as atlas.iter_witnesses restricted to one strip assignment.
    ids = atlas.strip_ids
    strip_map = dict(zip(ids, assignment))
    flip_options = []
    for sid in ids:
        source = atlas.strip(sid)
        target = atlas.strip(strip_map[sid])
        if prune:
            options = tuple(
                flip
                for flip in (0, 1)
                if len(source.side0) == len(target.side(flip))
                and len(source.side1) == len(target.side(1 ^ flip))
            )
        else:
            options = (0, 1)
        flip_options.append(options)
    for flips in itertools.product(*flip_options):
        side_flip = dict(zip(ids, flips))
        for bits in itertools.product((0, 1), repeat=len(ids)):
            reversal = dict(zip(ids, bits))
            if is_valid_witness(atlas, atlas, strip_map, side_flip, reversal):
                yield strip_map, side_flip, reversal


# ---------------------------------------------------------------------------
# Induced action on the leaf space


@dataclass(frozen=True, eq=False)
class LeafMap:
    """Action of an automorphism on the leaf-space model.

    Arc ``a`` goes to ``arc_map[a]`` with orientation reversed exactly when
    the automorphism flips the sides of the underlying strip.
    """

    point_map: dict[LeafPoint, LeafPoint]
    arc_map: dict[str, str]
    arc_reversed: dict[str, int]

    def key(self):
        return (
            tuple(sorted(self.point_map.items())),
            tuple(sorted(self.arc_map.items())),
            tuple(sorted(self.arc_reversed.items())),
        )

    def __eq__(self, other):
        if not isinstance(other, LeafMap):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    @property
    def is_identity(self) -> bool:
        return (
            all(p == q for p, q in self.point_map.items())
            and all(a == b for a, b in self.arc_map.items())
            and not any(self.arc_reversed.values())
        )

    def compose(self, other: "LeafMap") -> "LeafMap":
        """``self`` after ``other``."""
        return LeafMap(
            point_map={p: self.point_map[other.point_map[p]] for p in other.point_map},
            arc_map={a: self.arc_map[other.arc_map[a]] for a in other.arc_map},
            arc_reversed={
                a: other.arc_reversed[a] ^ self.arc_reversed[other.arc_map[a]]
                for a in other.arc_map
            },
        )


def induced_leaf_map(atlas: StripedAtlas, aut: AtlasAutomorphism) -> LeafMap:
    """Push an automorphism down to the leaf-space model."""
    model = build_leaf_space(atlas)
    return _induced_leaf_map(model, atlas, aut)


def _induced_leaf_map(
    model: LeafSpaceModel, atlas: StripedAtlas, aut: AtlasAutomorphism
) -> LeafMap:
    interval_map = aut.interval_map(atlas)
    point_map: dict[LeafPoint, LeafPoint] = {}
    for point in model.points:
        image = LeafPoint(tuple(interval_map[name] for name in point.intervals))
        assert image in model.attachments, "interval bijection must permute points"
        point_map[point] = image
    return LeafMap(
        point_map=point_map,
        arc_map=dict(aut.strip_map),
        arc_reversed=dict(aut.side_flip),
    )


# ---------------------------------------------------------------------------
# Isotopy triviality on both sides, kernel, and reports


def _require_reduced(atlas: StripedAtlas) -> None:
    if not is_reduced(atlas):
        raise NotReducedError("operation requires a reduced atlas")


def is_isotopically_trivial_on_surface(
    atlas: StripedAtlas, aut: AtlasAutomorphism
) -> bool:
    """Whether the automorphism is isotopic to the identity on the surface.

    On a reduced atlas that holds exactly for the identity triple: each
    strip kept, sides kept (transverse direction increasing) and leaves
    kept with orientation (reversal bit zero).
    """
    _require_reduced(atlas)
    return aut.is_identity


def is_isotopically_trivial_on_leaf_space(
    atlas: StripedAtlas, aut: AtlasAutomorphism
) -> bool:
    """Whether the induced leaf-space map is isotopic to the identity.

    On a reduced atlas every leaf point is either a boundary point or a
    branch point, and the complement of those is the disjoint union of the
    open arcs.  The induced map is trivially isotopic exactly when it
    fixes every leaf point and maps every arc to itself preserving
    orientation; the reversal bits are invisible on the leaf space.
    """
    _require_reduced(atlas)
    if any(s != t for s, t in aut.strip_map.items()):
        return False
    if any(aut.side_flip.values()):
        return False
    model = build_leaf_space(atlas)
    leaf_map = _induced_leaf_map(model, atlas, aut)
    return all(p == q for p, q in leaf_map.point_map.items())


def kernel_members(atlas: StripedAtlas) -> tuple[AtlasAutomorphism, ...]:
    """Automorphisms of a reduced connected atlas acting trivially on the
    leaf space.  Their classes form the kernel of the induced action."""
    if len(connected_components(atlas)) != 1:
        raise DisconnectedAtlasError("atlas disconnected - apply per component")
    _require_reduced(atlas)
    return tuple(
        aut
        for aut in enumerate_automorphisms(atlas)
        if is_isotopically_trivial_on_leaf_space(atlas, aut)
    )


@dataclass(frozen=True)
class KernelResult:
    """Trivial kernel (witness None) or order two with its witness."""

    witness: AtlasAutomorphism | None

    @property
    def is_trivial(self) -> bool:
        return self.witness is None

    @property
    def order(self) -> int:
        return 1 if self.witness is None else 2

    def label(self) -> str:
        return "TRIVIAL" if self.witness is None else "Z2"


def reversal_witness(atlas: StripedAtlas) -> AtlasAutomorphism | None:
    """The all-leaf reversal fixing every leaf point, if the atlas admits one.

    Checks the single candidate with identity strip map, no side flips and
    all reversal bits set.  Gluing parities never obstruct it (each parity
    is conjugated by two reversals); the only obstruction is a leaf point
    moved by reversing side orders.
    """
    if len(connected_components(atlas)) != 1:
        raise DisconnectedAtlasError("atlas disconnected - apply per component")
    candidate = all_leaf_reversal(atlas)
    if not is_valid_automorphism(
        atlas, candidate.strip_map, candidate.side_flip, candidate.reversal
    ):
        return None
    model = build_leaf_space(atlas)
    leaf_map = _induced_leaf_map(model, atlas, candidate)
    if all(p == q for p, q in leaf_map.point_map.items()):
        return candidate
    return None


def leaf_action_kernel(atlas: StripedAtlas) -> KernelResult:
    """Kernel of the map from surface isotopy classes to leaf-space ones.

    Requires a connected atlas.  Exceptional components (open cylinder or
    Moebius band) always carry the fibrewise reversal, which preserves
    every leaf and acts trivially on the base circle, so their kernel has
    order two; otherwise the reduced atlas is enumerated and the kernel is
    read off the automorphisms acting trivially on the leaf space.
    """
    if len(connected_components(atlas)) != 1:
        raise DisconnectedAtlasError("atlas disconnected - apply per component")
    outcome = reduce_component(atlas)
    if outcome.kind is not SurfaceKind.PROPER:
        witness = reversal_witness(atlas)
        if witness is None:
            raise RuntimeError("exceptional component without a reversal")
        return KernelResult(witness)

    members = kernel_members(outcome.atlas)
    for member in members:
        if len(set(member.reversal.values())) > 1:
            raise RuntimeError("kernel member with non-constant reversal bits")
    nontrivial = [aut for aut in members if not aut.is_identity]
    if not nontrivial:
        return KernelResult(None)
    if len(nontrivial) > 1:
        raise RuntimeError("kernel larger than order two")
    return KernelResult(nontrivial[0])


def component_kernels(
    atlas: StripedAtlas,
) -> tuple[tuple[frozenset[str], KernelResult], ...]:
    """Kernels of all connected components, for disconnected atlases."""
    from .atlas import component_atlases

    return tuple(
        (frozenset(sub.strip_ids), leaf_action_kernel(sub))
        for sub in component_atlases(atlas)
    )


@dataclass(frozen=True)
class HomeotopyReport:
    """Group sizes around the induced leaf-space action.

    ``leaf_model_aut_order`` counts incidence-preserving symmetries of the
    leaf-space model alone; it bounds ``image_order`` from above but is not
    claimed to equal the full symmetry group of the leaf space.
    """

    aut_order: int
    kernel: KernelResult
    image_order: int
    leaf_model_aut_order: int


def homeotopy_report(atlas: StripedAtlas) -> HomeotopyReport:
    """Order of the automorphism group, the kernel, and the image.

    Works on the reduced atlas; an exceptional component is replaced by
    its canonical one-strip atlas, to which it is foliated homeomorphic.
    """
    kernel = leaf_action_kernel(atlas)
    outcome = reduce_component(atlas)
    if outcome.kind is SurfaceKind.PROPER:
        working = outcome.atlas
    else:
        working = canonical_exceptional_atlas(outcome.kind)
    group = enumerate_automorphisms(working)
    model = build_leaf_space(working)
    return HomeotopyReport(
        aut_order=len(group),
        kernel=kernel,
        image_order=len(group) // kernel.order,
        leaf_model_aut_order=leaf_model_automorphism_count(model),
    )


def leaf_model_automorphism_count(model: LeafSpaceModel) -> int:
    """Count incidence-preserving symmetries of a leaf-space model.

    A symmetry permutes arcs with an orientation bit each and permutes
    points so that attachment multisets correspond; side order inside an
    end is deliberately ignored.  Counts triples, the identity included.
    """
    arcs = model.arcs

    def incidence(point: LeafPoint) -> tuple[tuple[str, int], ...]:
        return tuple(
            sorted((att.end.strip, att.end.side) for att in model.attachments[point])
        )

    target: dict[tuple, int] = {}
    for point in model.points:
        key = incidence(point)
        target[key] = target.get(key, 0) + 1

    total = 0
    for assignment in itertools.permutations(arcs):
        arc_map = dict(zip(arcs, assignment))
        for bits in itertools.product((0, 1), repeat=len(arcs)):
            flip = dict(zip(arcs, bits))
            mapped: dict[tuple, int] = {}
            for point in model.points:
                key = tuple(
                    sorted(
                        (arc_map[strip], side ^ flip[strip])
                        for strip, side in incidence(point)
                    )
                )
                mapped[key] = mapped.get(key, 0) + 1
            if mapped == target:
                count = 1
                for size in mapped.values():
                    count *= factorial(size)
                total += count
    return total
