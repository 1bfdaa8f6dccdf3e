"""Graded one-parameter degenerations of decorated objects.

A gauge weight vector assigns an integer to every summand, compatible with
the pairing (paired summands carry opposite weights, so self-paired ones
carry zero).  Rescaling the summands by t^w and the field by t multiplies
the matrix entry from summand s to summand t by t^(scale + w_t - w_s) and
an extension term by t^(w_t - w_s); the limits at 0 and infinity therefore
exist exactly when every exponent, with the sign flipped for the limit at
infinity, is nonnegative, and the limit object keeps the exponent-zero
entries and drops the positive ones.

Everything here is integer bookkeeping over those exponents; no analysis
enters.  The destabilizing-branch construction reproduces, as a fixture,
the degeneration used to connect the extension-deformed object to the
split locus when the deformed object fails to be stable.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, replace

from .curve import Curve
from .errors import (
    BoundError,
    BudgetError,
    ContradictionError,
    DimensionMismatchError,
    ParityViolationError,
    PreconditionError,
    WrongGroupError,
)
from .higgsmodel import (
    FORM_ORTHOGONAL,
    SIDE_V,
    SIDE_W,
    GradedHiggsBundle,
    GroupTag,
    Summand,
    canonical_json,
    make_bundle,
    named_section,
    unit_section,
)
from .linebundle import K_power, trivial, variable
from .stability import DEFAULT_BUDGET, StabilityVerdict, check_polystability

DIRECTION_TO_ZERO = "to-zero"
DIRECTION_TO_INFINITY = "to-infinity"


@dataclass(frozen=True)
class WeightAssignment:
    weights: tuple[int, ...]
    higgs_scale: int = 1

    def validate_against(self, h: GradedHiggsBundle) -> None:
        if len(self.weights) != len(h.summands):
            raise DimensionMismatchError(
                f"{len(self.weights)} weights for {len(h.summands)} summands"
            )
        for i, j in enumerate(h.sigma):
            if self.weights[i] != -self.weights[j]:
                raise PreconditionError(
                    f"weights are not pairing-compatible at ({i},{j}): "
                    f"{self.weights[i]} vs {self.weights[j]}"
                )


@dataclass(frozen=True)
class ExponentRow:
    kind: str
    target: int
    source: int
    name: str
    exponent: int


@dataclass(frozen=True)
class ExponentTable:
    rows: tuple[ExponentRow, ...]

    @property
    def all_nonnegative(self) -> bool:
        return all(r.exponent >= 0 for r in self.rows)

    @property
    def min_exponent(self) -> int | None:
        return min((r.exponent for r in self.rows), default=None)

    def to_dict(self) -> dict:
        return {
            "rows": [
                {
                    "kind": r.kind,
                    "to": r.target,
                    "from": r.source,
                    "name": r.name,
                    "exponent": r.exponent,
                }
                for r in self.rows
            ]
        }


@dataclass(frozen=True)
class LimitResult:
    exists: bool
    direction: str
    weights: WeightAssignment
    table: ExponentTable
    limit: GradedHiggsBundle | None
    source: GradedHiggsBundle
    limit_stability: StabilityVerdict | None = None

    def to_dict(self) -> dict:
        from .higgsmodel import bundle_to_dict

        out: dict = {
            "exists": self.exists,
            "direction": self.direction,
            "weights": list(self.weights.weights),
            "scale": self.weights.higgs_scale,
            "exponents": self.table.to_dict()["rows"],
        }
        if self.limit is not None:
            out["limit"] = bundle_to_dict(self.limit)
        if self.limit_stability is not None:
            out["limit_stability"] = self.limit_stability.to_dict()
        return out


def exponent_table(
    h: GradedHiggsBundle, w: WeightAssignment, direction: str = DIRECTION_TO_ZERO
) -> ExponentTable:
    w.validate_against(h)
    if direction not in (DIRECTION_TO_ZERO, DIRECTION_TO_INFINITY):
        raise PreconditionError(f"unknown direction {direction!r}")
    flip = -1 if direction == DIRECTION_TO_INFINITY else 1
    rows = []
    for e in h.higgs:
        exp = w.higgs_scale + w.weights[e.target] - w.weights[e.source]
        rows.append(ExponentRow("higgs", e.target, e.source, e.symbol.name, flip * exp))
    for t in h.dolbeault:
        exp = w.weights[t.target] - w.weights[t.source]
        rows.append(ExponentRow("dolbeault", t.target, t.source, t.name, flip * exp))
    return ExponentTable(tuple(rows))


def graded_limit(
    h: GradedHiggsBundle,
    w: WeightAssignment,
    direction: str = DIRECTION_TO_ZERO,
    with_stability: bool = False,
) -> LimitResult:
    """Limit of the rescaled family, when every exponent is nonnegative.

    The limit keeps exactly the exponent-zero entries; pairing symmetry of
    the weights makes the kept set transpose-closed, so the limit is again
    a valid object of the same group.
    """
    table = exponent_table(h, w, direction)
    if not table.all_nonnegative:
        return LimitResult(False, direction, w, table, None, h)
    kept = {
        (r.kind, r.target, r.source)
        for r in table.rows
        if r.exponent == 0
    }
    limit = replace(
        h,
        higgs=tuple(
            e for e in h.higgs if ("higgs", e.target, e.source) in kept
        ),
        dolbeault=tuple(
            t for t in h.dolbeault if ("dolbeault", t.target, t.source) in kept
        ),
    )
    verdict = check_polystability(limit) if with_stability else None
    return LimitResult(True, direction, w, table, limit, h, verdict)


def zero_weights(h: GradedHiggsBundle, higgs_scale: int = 1) -> WeightAssignment:
    return WeightAssignment((0,) * len(h.summands), higgs_scale)


def compose_weights(a: WeightAssignment, b: WeightAssignment) -> WeightAssignment:
    if len(a.weights) != len(b.weights):
        raise DimensionMismatchError("weight vectors have different lengths")
    return WeightAssignment(
        tuple(x + y for x, y in zip(a.weights, b.weights)),
        a.higgs_scale + b.higgs_scale,
    )


# -- the worked degeneration fixtures -----------------------------------------

DEFORMED_SO35_RETRACTION = WeightAssignment((2, 0, -2, 3, 1, -1, -3, 0))
DEFORMED_SO35_STABLE_BRANCH = WeightAssignment((2, 0, -2, 0, 1, -1, 0, 0))


@dataclass(frozen=True)
class NDescriptor:
    """Destabilizing line datum for the deformed signature-(3,5) object:
    a line subbundle of the rank-2 part, of positive degree matching the
    parity of the component label, with its upper connecting section
    alpha necessarily nonzero."""

    degree: int
    alpha_nonzero: bool = True


def limit_destabilized_branch(
    h: GradedHiggsBundle, line: NDescriptor
) -> LimitResult:
    """Degeneration used when the extension-deformed object is unstable.

    Swaps the split rank-2 part for the destabilizing line and its dual,
    rewires the connecting sections (beta up, alpha down, gamma through
    the extension summand, plus the delta extension term), and takes the
    limit at zero under the fixed pairing-compatible weights.
    """
    meta = h.meta_map
    if meta.get("family") != "deformed-exotic-so35":
        raise WrongGroupError(
            "the destabilized branch is defined for the extension-deformed "
            "signature-(3,5) family only"
        )
    d = int(str(meta["d"]))
    if not line.alpha_nonzero:
        raise ContradictionError(
            "a destabilizing line with alpha = 0 would leave the rank-2 part "
            "split, contradicting instability of the deformed object"
        )
    g = h.genus
    if line.degree <= 0:
        raise BoundError(f"the destabilizing line needs positive degree, got {line.degree}")
    if line.degree > 3 * (2 * g - 2):
        raise BoundError(
            f"alpha lives in a bundle of degree {3 * (2 * g - 2) - line.degree} < 0"
        )
    if (line.degree - d) % 2:
        raise ParityViolationError(
            f"deg N = {line.degree} must match the parity of d = {d}"
        )
    curve = Curve(g)
    summands = [
        Summand(SIDE_V, K_power(2)),
        Summand(SIDE_V, trivial()),
        Summand(SIDE_V, K_power(-2)),
        Summand(SIDE_W, variable("N")),
        Summand(SIDE_W, K_power(1)),
        Summand(SIDE_W, K_power(-1)),
        Summand(SIDE_W, variable("N", -1)),
        Summand(SIDE_W, trivial()),
    ]
    sigma = [2, 1, 0, 6, 5, 4, 3, 7]
    alpha = named_section("alpha")
    beta = named_section("beta")
    gamma = named_section("gamma")
    entries = [
        (4, 0, unit_section()),
        (5, 1, unit_section()),
        (1, 4, unit_section()),
        (2, 5, unit_section()),
        (3, 2, beta),
        (0, 6, beta),
        (6, 2, alpha),
        (0, 3, alpha),
        (7, 2, gamma),
        (0, 7, gamma),
    ]
    dol = [(3, 7, "delta"), (7, 6, "delta")]
    branch = make_bundle(
        GroupTag("so0", (3, 5)),
        curve,
        summands,
        sigma,
        FORM_ORTHOGONAL,
        entries,
        dolbeault=dol,
        declared={"N": line.degree},
        meta={
            "family": "destabilized-branch-so35",
            "d": d,
            "line_degree": line.degree,
        },
    )
    return graded_limit(branch, DEFORMED_SO35_RETRACTION, DIRECTION_TO_ZERO)


# -- weight search -------------------------------------------------------------

def _budget() -> int:
    raw = os.environ.get("HIGGS_ATLAS_BUDGET", "")
    try:
        return int(raw) if raw else DEFAULT_BUDGET
    except ValueError:
        return DEFAULT_BUDGET


def search_admissible_weights(
    h: GradedHiggsBundle,
    bound: int,
    direction: str = DIRECTION_TO_ZERO,
    higgs_scale: int = 1,
) -> tuple[tuple[WeightAssignment, LimitResult], ...]:
    """All pairing-compatible weight vectors with entries in [-bound, bound]
    whose limit exists, one representative per distinct limit object (the
    lexicographically smallest weight vector), sorted by weight vector."""
    if bound < 0 or bound > 6:
        raise BoundError("the search bound must lie in [0, 6]")
    n = len(h.summands)
    if n > 10:
        raise BudgetError(f"weight search over {n} summands is not supported")
    free = [i for i, j in enumerate(h.sigma) if i < j]
    count = (2 * bound + 1) ** len(free)
    if count > _budget():
        raise BudgetError(
            f"weight search of size {count} exceeds the budget {_budget()}",
            size=count,
        )
    found: dict[str, tuple[WeightAssignment, LimitResult]] = {}
    for combo in itertools.product(range(-bound, bound + 1), repeat=len(free)):
        weights = [0] * n
        for val, i in zip(combo, free):
            weights[i] = val
            weights[h.sigma[i]] = -val
        w = WeightAssignment(tuple(weights), higgs_scale)
        res = graded_limit(h, w, direction)
        if not res.exists:
            continue
        key = canonical_json(res.limit)
        if key not in found:
            found[key] = (w, res)
    return tuple(sorted(found.values(), key=lambda pair: pair[0].weights))


__all__ = [
    "DIRECTION_TO_ZERO",
    "DIRECTION_TO_INFINITY",
    "WeightAssignment",
    "ExponentRow",
    "ExponentTable",
    "LimitResult",
    "exponent_table",
    "graded_limit",
    "zero_weights",
    "compose_weights",
    "NDescriptor",
    "limit_destabilized_branch",
    "DEFORMED_SO35_RETRACTION",
    "DEFORMED_SO35_STABLE_BRANCH",
    "search_admissible_weights",
]
