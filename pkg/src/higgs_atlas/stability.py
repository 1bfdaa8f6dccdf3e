"""Exact slope stability for summand-generated subobjects.

Every summand has a well-defined integer degree, so for the objects built
here (total degree zero) the slope comparisons reduce to signs of degree
sums over arrow-closed subsets of summand indices.  The scan is exhaustive
over the subset lattice, which is the definition rather than a heuristic;
its cost is the reason for the budget guard.

A subset is arrow-closed when every matrix entry and every extension term
with source inside the subset also has its target inside.  Closed subsets
correspond to the subobjects generated by summands; for the families
produced by the builders these detect all destabilizing subobjects, which
is why ``check_polystability`` refuses unrecognized shapes unless the
caller explicitly asserts that summand-generated subobjects suffice.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import BudgetError, UnrecognizedShapeError, UnsupportedGroupError
from .higgsmodel import GradedHiggsBundle, GroupTag, gauge_orbit_key

STATUS_STABLE = "stable"
STATUS_POLYSTABLE = "polystable"
STATUS_UNSTABLE = "unstable"

DEFAULT_BUDGET = 2 ** 24


def subset_budget() -> int:
    raw = os.environ.get("HIGGS_ATLAS_BUDGET", "")
    try:
        return int(raw) if raw else DEFAULT_BUDGET
    except ValueError:
        return DEFAULT_BUDGET


@dataclass(frozen=True)
class InvariantSubobject:
    indices: tuple[int, ...]
    degree: int

    @property
    def size(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class StabilityVerdict:
    status: str
    witness: InvariantSubobject | None = None
    decomposition: tuple[tuple[int, ...], ...] | None = None
    note: str = ""

    @property
    def is_polystable(self) -> bool:
        return self.status in (STATUS_STABLE, STATUS_POLYSTABLE)

    @property
    def is_stable(self) -> bool:
        return self.status == STATUS_STABLE

    def to_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.witness is not None:
            out["witness"] = {
                "indices": list(self.witness.indices),
                "degree": self.witness.degree,
            }
        if self.decomposition is not None:
            out["decomposition"] = [list(part) for part in self.decomposition]
        if self.note:
            out["note"] = self.note
        return out


def _arrows(h: GradedHiggsBundle) -> list[tuple[int, int]]:
    pairs = {(e.source, e.target) for e in h.higgs}
    pairs |= {(t.source, t.target) for t in h.dolbeault}
    return sorted(pairs)


def _is_closed(mask: int, arrows: list[tuple[int, int]]) -> bool:
    for src, tgt in arrows:
        if mask >> src & 1 and not mask >> tgt & 1:
            return False
    return True


def enumerate_invariant_subobjects(h: GradedHiggsBundle) -> list[InvariantSubobject]:
    """All arrow-closed index subsets, the empty and full ones included,
    sorted by size then lexicographically."""
    n = len(h.summands)
    budget = subset_budget()
    if 1 << n > budget:
        raise BudgetError(
            f"subset scan over {n} summands exceeds the budget {budget}",
            n=n,
            budget=budget,
        )
    arrows = _arrows(h)
    degrees = h.degrees()
    out = []
    for mask in range(1 << n):
        if not _is_closed(mask, arrows):
            continue
        indices = tuple(i for i in range(n) if mask >> i & 1)
        out.append(InvariantSubobject(indices, sum(degrees[i] for i in indices)))
    out.sort(key=lambda s: (s.size, s.indices))
    return out


def components(h: GradedHiggsBundle) -> tuple[tuple[int, ...], ...]:
    """Connected components of the summand graph, arrows taken undirected."""
    n = len(h.summands)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for src, tgt in _arrows(h):
        ra, rb = find(src), find(tgt)
        if ra != rb:
            parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


def _best_witness(cands: list[InvariantSubobject]) -> InvariantSubobject:
    return min(cands, key=lambda s: (-s.degree, s.size, s.indices))


def check_polystability(
    h: GradedHiggsBundle, assume_summand_generated: bool = False
) -> StabilityVerdict:
    """Trichotomy verdict for an object of total degree zero.

    stable:      every proper nonzero closed subset has negative degree.
    polystable:  the closed subsets of degree zero are exactly unions of
                 graph components, each component stable on its own.
    unstable:    a closed subset of positive degree exists, or a closed
                 degree-zero subset cuts through a component (the object
                 is then an extension that does not split off its
                 destabilizing subobject, so it is not polystable).

    Higher-rank block summands are treated as atomic indices; they enter
    with their recorded degree and are taken internally stable, which is
    part of what the builders guarantee.
    """
    if not (assume_summand_generated or "family" in h.meta_map):
        raise UnrecognizedShapeError(
            "object was not produced by a recognized builder; pass "
            "assume_summand_generated=True to scan summand-generated "
            "subobjects anyway"
        )
    subs = enumerate_invariant_subobjects(h)
    n = len(h.summands)
    proper = [s for s in subs if 0 < s.size < n]
    positive = [s for s in proper if s.degree > 0]
    if positive:
        return StabilityVerdict(
            STATUS_UNSTABLE,
            witness=_best_witness(positive),
            note="destabilizing subobject of positive degree",
        )
    zero = [s for s in proper if s.degree == 0]
    if not zero:
        return StabilityVerdict(STATUS_STABLE, decomposition=(tuple(range(n)),))
    comps = components(h)
    cutting = [
        s for s in zero
        if any(set(s.indices) & set(part) and not set(part) <= set(s.indices) for part in comps)
    ]
    if cutting:
        return StabilityVerdict(
            STATUS_UNSTABLE,
            witness=_best_witness(cutting),
            note="degree-zero subobject that does not split off; "
            "semistable but not polystable",
        )
    return StabilityVerdict(
        STATUS_POLYSTABLE,
        decomposition=comps,
        note=f"direct sum of {len(comps)} stable factors of degree zero",
    )


def milnor_wood_bound(group: GroupTag, genus: int) -> int:
    """Largest allowed value of the integer component label."""
    g = genus
    fam, params = group.family, group.params
    if fam in ("sl", "sp") and params == (2,):
        return g - 1
    if fam == "psl" and params == (2,):
        return 2 * g - 2
    if fam == "sp" and params[0] % 2 == 0:
        return (params[0] // 2) * (g - 1)
    if fam == "so" and params == (1, 2):
        return 2 * g - 2
    if fam == "so0" and params == (1, 2):
        return 2 * g - 2
    if fam == "so0" and len(params) == 2 and params[1] == params[0] + 1:
        return params[0] * (2 * g - 2)
    if fam == "so0" and params[0] == 2 and params[1] >= 4:
        return 2 * g - 2
    raise UnsupportedGroupError(f"no bound recorded for {group}")


def gauge_equivalent(a: GradedHiggsBundle, b: GradedHiggsBundle) -> bool:
    """Equality up to summand reordering and the switching move."""
    if a.group != b.group or a.genus != b.genus:
        return False
    return gauge_orbit_key(a) == gauge_orbit_key(b)


__all__ = [
    "STATUS_STABLE",
    "STATUS_POLYSTABLE",
    "STATUS_UNSTABLE",
    "DEFAULT_BUDGET",
    "subset_budget",
    "InvariantSubobject",
    "StabilityVerdict",
    "enumerate_invariant_subobjects",
    "components",
    "check_polystability",
    "milnor_wood_bound",
    "gauge_equivalent",
]
