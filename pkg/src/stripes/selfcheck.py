"""Cross-validation of the library's invariants on a single atlas.

Runs, per connected component, every dual-route check the package offers:
the closure rule against the brute-force oracle, closure symmetry,
classification consistency, group laws of the automorphism group,
functoriality of the induced leaf-space action, the kernel dichotomy with
its witness cross-check, and the reduction invariants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from .atlas import StripedAtlas, component_atlases, isomorphic, validate
from .dualgraph import build_dual_graph, euler_invariant
from .leafspace import (
    LeafClass,
    LeafPoint,
    boundary_points,
    build_leaf_space,
    classify_leaf,
    hcl_bruteforce,
    hcl_point,
    sampled_space,
    special_points,
)
from .reduction import SurfaceKind, is_reduced, reduce_component
from .symmetry import (
    enumerate_automorphisms,
    identity_automorphism,
    induced_leaf_map,
    kernel_members,
    leaf_action_kernel,
    reversal_witness,
)


@dataclass
class CheckResult:
    component: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        suffix = f" ({self.detail})" if self.detail and not self.ok else ""
        return f"{status} {self.component}:{self.name}{suffix}"


@dataclass
class SelfCheckReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]


def selfcheck(atlas: StripedAtlas, k: int = 2) -> SelfCheckReport:
    """Run all invariant checks; ``k`` is the oracle sampling depth."""
    report = SelfCheckReport()
    problems = validate(atlas)
    report.results.append(
        CheckResult("*", "valid-atlas", not problems, "; ".join(problems))
    )
    if problems:
        return report
    for sub in component_atlases(atlas):
        label = min(sub.strip_ids)
        _check_component(report, sub, label, k)
    return report


def _check_component(
    report: SelfCheckReport, atlas: StripedAtlas, label: str, k: int
) -> None:
    model = build_leaf_space(atlas)
    add = lambda name, ok, detail="": report.results.append(
        CheckResult(label, name, ok, detail)
    )

    # Interval bookkeeping: every interval in exactly one point.
    counted = sorted(
        name for point in model.points for name in point.intervals
    )
    add(
        "interval-partition",
        counted == sorted(atlas.intervals())
        and len(model.points) == len(atlas.gluings) + len(atlas.free_intervals),
    )

    # Closure rule against the brute-force oracle, for depths 1..k.
    ok = True
    detail = ""
    for depth in range(1, k + 1):
        space = sampled_space(model, depth)
        for point in model.points:
            brute = frozenset(
                q for q in hcl_bruteforce(space, point) if isinstance(q, LeafPoint)
            )
            if brute != hcl_point(model, point):
                ok = False
                detail = f"depth {depth}, point {point.label()}"
                break
        if not ok:
            break
    add("hcl-oracle-agreement", ok, detail)

    # Closure symmetry.
    add(
        "hcl-symmetry",
        all(
            (q in hcl_point(model, p)) == (p in hcl_point(model, q))
            for p in model.points
            for q in model.points
        ),
    )

    # Classification against the closure-derived point sets.
    special = special_points(model)
    boundary = boundary_points(model)
    ok = True
    for point in model.points:
        leaf_class = classify_leaf(atlas, point)
        if (leaf_class is LeafClass.SPECIAL) != (point in special):
            ok = False
        if leaf_class is LeafClass.SINGULAR_NON_SPECIAL and (
            point not in boundary or point in special
        ):
            ok = False
    add("classification-consistency", ok)

    # Group laws of the enumerated automorphisms.
    group = enumerate_automorphisms(atlas)
    members = set(group)
    ok = identity_automorphism(atlas) in members
    ok = ok and all(aut.inverse() in members for aut in group)
    ok = ok and all(a.compose(b) in members for a in group for b in group)
    add("group-laws", ok)

    # Functoriality of the induced leaf-space action.
    leaf_maps = {aut: induced_leaf_map(atlas, aut) for aut in group}
    ok = all(
        leaf_maps[a.compose(b)] == leaf_maps[a].compose(leaf_maps[b])
        for a in group
        for b in group
    )
    add("psi-functoriality", ok)

    # Kernel dichotomy and the independent witness route.
    outcome = reduce_component(atlas)
    kernel = leaf_action_kernel(atlas)
    if outcome.kind is SurfaceKind.PROPER:
        trivial_count = len(kernel_members(outcome.atlas))
        witness = reversal_witness(outcome.atlas)
        add("kernel-dichotomy", trivial_count in (1, 2))
        add(
            "witness-crosscheck",
            (trivial_count == 2) == (witness is not None)
            and (kernel.order == trivial_count)
            and ((reversal_witness(atlas) is not None) == (witness is not None)),
        )
    else:
        add("kernel-dichotomy", kernel.order == 2)
        add("witness-crosscheck", reversal_witness(atlas) is not None)

    # Reduction invariants.
    ok = True
    detail = ""
    euler_before = euler_invariant(build_dual_graph(atlas))
    if outcome.kind is SurfaceKind.PROPER:
        reduced = outcome.atlas
        if not is_reduced(reduced):
            ok, detail = False, "result not reduced"
        if euler_invariant(build_dual_graph(reduced)) != euler_before:
            ok, detail = False, "euler drift"
        before, after = model, build_leaf_space(reduced)
        if len(special_points(before)) != len(special_points(after)) or len(
            boundary_points(before)
        ) != len(boundary_points(after)):
            ok, detail = False, "point count drift"
        surviving = set(after.points)
        if not surviving <= set(before.points):
            ok, detail = False, "points renamed"
        else:
            for p in surviving:
                kept = hcl_point(before, p) & surviving
                if kept != hcl_point(after, p):
                    ok, detail = False, "hcl drift"
        again = reduce_component(reduced)
        if again.kind is not SurfaceKind.PROPER or again.atlas != reduced:
            ok, detail = False, "not idempotent"
    # Any merge order must give an isomorphic outcome.
    for seed in (0, 1):
        other = reduce_component(atlas, Random(seed))
        if other.kind is not outcome.kind:
            ok, detail = False, "merge order changed the kind"
        elif outcome.kind is SurfaceKind.PROPER and not (
            other.atlas == outcome.atlas or isomorphic(other.atlas, outcome.atlas)
        ):
            ok, detail = False, "merge order changed the class"
    add("reduction-invariants", ok, detail)
