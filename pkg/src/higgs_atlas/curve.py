"""Base curve and exact section counting.

A compact Riemann surface of genus g >= 2 is the only geometric input the
whole package needs; everything downstream is formal algebra over it.  The
key operation is ``h0``: an integer count of independent holomorphic
sections of a formal line bundle, split into the cases where the count is
an exact theorem of Riemann-Roch / Serre duality and the cases where it is
only the generic expectation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnresolvedDegreeError

EXACT = "exact"
GENERIC = "generic-assumption"


@dataclass(frozen=True)
class Curve:
    """Genus marker for the base surface.  genus >= 2 throughout."""

    genus: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 2:
            raise ValueError(f"genus must be an integer >= 2, got {self.genus!r}")

    @property
    def canonical_degree(self) -> int:
        return 2 * self.genus - 2


@dataclass(frozen=True)
class SectionCount:
    """h^0 value together with its epistemic status.

    ``exactness`` is EXACT when the value is forced for every bundle of the
    given shape, GENERIC when it is the count for a generic bundle of that
    degree (special bundles may have more sections).
    """

    value: int
    exactness: str

    def __post_init__(self):
        if self.exactness not in (EXACT, GENERIC):
            raise ValueError(f"bad exactness tag {self.exactness!r}")
        if self.value < 0:
            raise ValueError("section count cannot be negative")


def riemann_roch_chi(curve: Curve, degree: int) -> int:
    """Euler characteristic chi(L) = deg L - g + 1 of a line bundle."""
    return degree - curve.genus + 1


def h0(curve: Curve, bundle, declared=None) -> SectionCount:
    """Count sections of a formal line bundle expression.

    Decision table, first match wins:
      negative degree          -> 0, exact
      the trivial bundle       -> 1, exact
      the canonical bundle     -> g, exact
      degree above 2g-2        -> deg - g + 1, exact (Riemann-Roch, h^1 = 0)
      anything else            -> max(0, deg - g + 1), generic assumption

    Triviality / canonicity is recognized syntactically: only a bare power
    of K qualifies.  A degree-0 expression that is not literally the
    trivial bundle falls through to the generic row.

    ``declared`` supplies integer degrees for named symbols, either as a
    mapping or as any object with a ``declared_map`` attribute.  A symbol
    without a declared degree raises UnresolvedDegreeError.
    """
    degrees = _declared_map(declared)
    deg = bundle.resolved_degree(curve.genus, degrees)
    g = curve.genus
    if deg < 0:
        return SectionCount(0, EXACT)
    power = bundle.canonical_power()
    if power == 0:
        return SectionCount(1, EXACT)
    if power == 1:
        return SectionCount(g, EXACT)
    if deg > 2 * g - 2:
        return SectionCount(deg - g + 1, EXACT)
    return SectionCount(max(0, deg - g + 1), GENERIC)


def _declared_map(declared) -> dict:
    if declared is None:
        return {}
    if hasattr(declared, "declared_map"):
        return dict(declared.declared_map)
    return dict(declared)


__all__ = [
    "Curve",
    "SectionCount",
    "EXACT",
    "GENERIC",
    "riemann_roch_chi",
    "h0",
    "UnresolvedDegreeError",
]
