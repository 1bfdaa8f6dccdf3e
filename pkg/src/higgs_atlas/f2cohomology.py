"""Mod-2 cohomology of the base surface and Stiefel-Whitney arithmetic.

H^1(S; F_2) is modelled as F_2^(2g) in a fixed symplectic basis
a_1, b_1, ..., a_g, b_g; coordinates are stored in that interleaved
order, so coords[2i] is the a_(i+1) coefficient and coords[2i+1] the
b_(i+1) coefficient.  The cup product pairs a_i with b_i:

    cup(x, y) = sum_i x[2i] y[2i+1] + x[2i+1] y[2i]   (mod 2)

which is alternating (cup(x, x) = 0) and nondegenerate.  H^2 is F_2.

For a direct sum of 2-torsion line bundles the total Stiefel-Whitney
class expands to

    sw_1 = sum of the classes,   sw_2 = sum over pairs j < k of cup products.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .curve import Curve
from .errors import DimensionMismatchError, UnresolvedActionError
from .linebundle import DegreeContext, LineBundleExpr, trivial


@dataclass(frozen=True)
class F2Class:
    """An element of H^1(S; F_2) = F_2^(2g)."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) % 2 or len(self.coords) < 4:
            raise ValueError("coordinate length must be 2g with g >= 2")
        if any(c not in (0, 1) for c in self.coords):
            raise ValueError("coordinates must be bits")

    @property
    def genus(self) -> int:
        return len(self.coords) // 2

    def __add__(self, other: "F2Class") -> "F2Class":
        _check_same_genus(self, other)
        return F2Class(tuple((a + b) % 2 for a, b in zip(self.coords, other.coords)))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def bits(self) -> str:
        return "".join(str(c) for c in self.coords)

    def to_int(self) -> int:
        return sum(c << i for i, c in enumerate(self.coords))

    @staticmethod
    def zero(genus: int) -> "F2Class":
        return F2Class((0,) * (2 * genus))

    @staticmethod
    def from_bits(bits: str) -> "F2Class":
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"bad bit string {bits!r}")
        return F2Class(tuple(int(c) for c in bits))

    @staticmethod
    def from_int(genus: int, value: int) -> "F2Class":
        return F2Class(tuple((value >> i) & 1 for i in range(2 * genus)))

    @staticmethod
    def basis_a(genus: int, i: int) -> "F2Class":
        coords = [0] * (2 * genus)
        coords[2 * i] = 1
        return F2Class(tuple(coords))

    @staticmethod
    def basis_b(genus: int, i: int) -> "F2Class":
        coords = [0] * (2 * genus)
        coords[2 * i + 1] = 1
        return F2Class(tuple(coords))


def all_classes(genus: int) -> tuple[F2Class, ...]:
    """Every class, ordered by integer encoding (the zero class first)."""
    if genus < 2:
        raise ValueError("genus must be at least 2")
    return tuple(F2Class.from_int(genus, v) for v in range(1 << (2 * genus)))


def _check_same_genus(a: F2Class, b: F2Class):
    if a.genus != b.genus:
        raise DimensionMismatchError(
            f"classes live on different surfaces (genus {a.genus} vs {b.genus})"
        )


def cup(a: F2Class, b: F2Class) -> int:
    """Cup product H^1 x H^1 -> H^2 = F_2 in the symplectic basis."""
    _check_same_genus(a, b)
    total = 0
    for i in range(a.genus):
        total += a.coords[2 * i] * b.coords[2 * i + 1]
        total += a.coords[2 * i + 1] * b.coords[2 * i]
    return total % 2


@dataclass(frozen=True)
class SWPair:
    """(sw_1, sw_2) of an orthogonal bundle; sw_2 is a single bit."""

    sw1: F2Class
    sw2: int

    def __post_init__(self):
        if self.sw2 not in (0, 1):
            raise ValueError("sw2 must be a bit")

    def label(self) -> str:
        return f"sw1={self.sw1.bits()},sw2={self.sw2}"


def total_sw_of_sum(classes: Sequence[F2Class], genus: int | None = None) -> SWPair:
    """Total Stiefel-Whitney data of a direct sum of 2-torsion bundles."""
    if not classes:
        if genus is None:
            raise DimensionMismatchError("empty sum needs an explicit genus")
        return SWPair(F2Class.zero(genus), 0)
    sw1 = classes[0]
    for c in classes[1:]:
        sw1 = sw1 + c
    sw2 = 0
    for x, y in itertools.combinations(classes, 2):
        sw2 ^= cup(x, y)
    return SWPair(sw1, sw2)


@dataclass(frozen=True)
class SurjectivityReport:
    """Reachability of every (sw_1, sw_2) value by n-term sums.

    ``witnesses`` lists, for each reachable pair, the lexicographically
    smallest witness tuple (classes ordered by their integer encoding).
    ``missing`` lists the unreachable pairs; ``complete`` is True when
    every one of the 2^(2g+1) values is hit.
    """

    genus: int
    n: int
    witnesses: tuple[tuple[SWPair, tuple[F2Class, ...]], ...]
    missing: tuple[SWPair, ...]

    @property
    def complete(self) -> bool:
        return not self.missing

    @property
    def witness_map(self) -> dict[SWPair, tuple[F2Class, ...]]:
        return dict(self.witnesses)


def sw_surjectivity_witnesses(genus: int, n: int) -> SurjectivityReport:
    """Exhaustively search (F_2^(2g))^n for witnesses of every SW value.

    Only brute-force scale is supported: genus 2 or 3.  n = 1 is allowed
    but the resulting map cannot be complete (sw_2 of a single summand is
    always 0); the report flags this through ``missing``.
    """
    if genus not in (2, 3):
        raise DimensionMismatchError("exhaustive search supported for genus 2 and 3 only")
    if n < 1:
        raise ValueError("need at least one summand")
    size = 1 << (2 * genus)
    found: dict[tuple[int, int], tuple[F2Class, ...]] = {}
    for combo in itertools.product(range(size), repeat=n):
        classes = tuple(F2Class.from_int(genus, v) for v in combo)
        pair = total_sw_of_sum(classes)
        key = (pair.sw1.to_int(), pair.sw2)
        if key not in found:
            found[key] = classes
            if len(found) == 2 * size:
                break
    witnesses = []
    missing = []
    for value in range(size):
        for sw2 in (0, 1):
            pair = SWPair(F2Class.from_int(genus, value), sw2)
            key = (value, sw2)
            if key in found:
                witnesses.append((pair, found[key]))
            else:
                missing.append(pair)
    return SurjectivityReport(genus, n, tuple(witnesses), tuple(missing))


def minimal_realizing_n(genus: int, n_max: int = 3) -> dict[SWPair, int | None]:
    """Smallest number of summands realizing each (sw_1, sw_2), up to n_max."""
    out: dict[SWPair, int | None] = {}
    remaining = None
    for n in range(1, n_max + 1):
        report = sw_surjectivity_witnesses(genus, n)
        for pair, _ in report.witnesses:
            if pair not in out:
                out[pair] = n
        remaining = report.missing
    for pair in remaining or ():
        if pair not in out:
            out[pair] = None
    return out


# -- double covers and Prym data -------------------------------------------

@dataclass(frozen=True)
class DoubleCover:
    """Unramified double cover of the base classified by a nonzero sw_1."""

    base: Curve
    sw1: F2Class

    def __post_init__(self):
        if self.sw1.genus != self.base.genus:
            raise DimensionMismatchError("classifying class has the wrong genus")
        if self.sw1.is_zero():
            raise ValueError("a connected double cover needs a nonzero class")

    @property
    def cover_genus(self) -> int:
        # Riemann-Hurwitz for an unramified degree-2 map
        return 2 * self.base.genus - 1


@dataclass(frozen=True)
class PrymDescriptor:
    """One of the two components of the kernel of the norm map of a cover."""

    cover: DoubleCover
    component: int

    def __post_init__(self):
        if self.component not in (0, 1):
            raise ValueError("a Prym variety has exactly two components")


@dataclass(frozen=True)
class InvolutionAction:
    """Declared action of the cover involution on named symbols.

    Maps each symbol name to the expression it pulls back to; the
    canonical bundle of the cover is always fixed.
    """

    action: tuple[tuple[str, LineBundleExpr], ...]

    @staticmethod
    def of(**mapping: LineBundleExpr) -> "InvolutionAction":
        return InvolutionAction(tuple(sorted(mapping.items())))

    @property
    def action_map(self) -> dict[str, LineBundleExpr]:
        return dict(self.action)

    def apply(self, expr: LineBundleExpr) -> LineBundleExpr:
        table = self.action_map
        out = trivial().tensor(LineBundleExpr(k_power=expr.k_power))
        pieces: list[tuple[str, int]] = [(n, 1) for n in expr.spins]
        pieces += [(n, 1) for n in expr.torsions]
        pieces += list(expr.variables) + list(expr.divisors)
        missing = sorted({n for n, _ in pieces if n not in table})
        if missing:
            raise UnresolvedActionError(
                f"involution action undeclared for: {', '.join(missing)}"
            )
        for name, e in pieces:
            out = out.tensor(table[name].power(e))
        return out


def prym_membership(
    cover: DoubleCover,
    action: InvolutionAction,
    bundle: LineBundleExpr,
    ctx: DegreeContext | None = None,
) -> bool:
    """Does the declared involution send the bundle to its dual?

    Membership in the kernel of the norm map is the symbol-level condition
    pullback(bundle) = dual(bundle).  When a degree context is supplied the
    degree-0 precondition on the cover is enforced.
    """
    if ctx is not None:
        if ctx.degree(bundle) != 0:
            raise ValueError("norm-kernel membership needs a degree-0 bundle")
    if bundle.is_trivial():
        return True
    return action.apply(bundle) == bundle.dual()


__all__ = [
    "F2Class",
    "SWPair",
    "all_classes",
    "cup",
    "total_sw_of_sum",
    "SurjectivityReport",
    "sw_surjectivity_witnesses",
    "minimal_realizing_n",
    "DoubleCover",
    "PrymDescriptor",
    "InvolutionAction",
    "prym_membership",
]
