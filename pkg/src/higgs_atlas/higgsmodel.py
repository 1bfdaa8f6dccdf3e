"""Graded Higgs bundles as decorated quivers, and the family builders.

An object is a finite list of formal line-bundle summands (a few builders
also emit an opaque orthogonal block of higher rank), split into a V side
and a W side, together with:

  * a pairing involution sigma matching each summand with its dual,
  * a sparse matrix of section symbols: the entry at (target, source)
    lives in Hom(L_source, L_target (x) K); absent entries are zero,
  * optional Dolbeault extension terms (target, source, name) deforming
    the direct-sum holomorphic structure off-diagonally.

Only the section's name and vanishing behaviour are tracked, never its
value, so every question answered here is exact combinatorics.  Builders
fill in both blocks of the matrix: the user-facing data is the V -> W
block and its transpose block is generated from the pairing, which is
also the structural symmetry ``validate`` checks.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

from .curve import Curve
from .errors import (
    BoundError,
    BudgetError,
    MissingSpinError,
    ModelInvariantError,
    ParseError,
    PreconditionError,
    WrongGroupError,
)
from .f2cohomology import F2Class, SWPair
from .linebundle import (
    KIND_SPIN,
    KIND_TORSION,
    KIND_VARIABLE,
    LineBundleExpr,
    K_power,
    parse_expr,
    spin,
    torsion,
    trivial,
    variable,
)

SCHEMA = "higgs-atlas/1"

VANISH_ZERO = "identically-zero"
VANISH_GENERIC = "generically-nonzero"
VANISH_NOWHERE = "nowhere-vanishing"

KIND_ZERO = "zero"
KIND_UNIT = "unit"
KIND_NAMED = "named"

SIDE_V = "V"
SIDE_W = "W"

FORM_ORTHOGONAL = "orthogonal"
FORM_SYMPLECTIC = "symplectic"

_FAMILIES = ("sl", "psl", "sp", "so", "so0", "slc")


@dataclass(frozen=True)
class GroupTag:
    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown group family {self.family!r}")
        if not self.params or any(p < 1 for p in self.params):
            raise ValueError("group parameters must be positive integers")
        if self.family in ("sl", "psl", "slc", "sp"):
            if len(self.params) != 1 or self.params[0] < 2:
                raise ValueError(f"{self.family} takes one parameter >= 2")
            if self.family == "sp" and self.params[0] % 2:
                raise ValueError("symplectic rank parameter must be even")
        elif len(self.params) != 2:
            raise ValueError(f"{self.family} takes a signature pair")

    def __str__(self) -> str:
        return f"{self.family}:{','.join(str(p) for p in self.params)}"

    @staticmethod
    def parse(text: str) -> "GroupTag":
        try:
            family, rest = text.split(":", 1)
            params = tuple(int(p) for p in rest.split(","))
            return GroupTag(family, params)
        except ValueError as exc:
            raise ParseError(f"bad group tag {text!r}") from exc


def group_tag(text: str) -> GroupTag:
    return GroupTag.parse(text)


@dataclass(frozen=True)
class SectionSymbol:
    """A section known only by name and vanishing behaviour."""

    name: str
    kind: str
    vanishing: str

    def __post_init__(self):
        if self.kind not in (KIND_ZERO, KIND_UNIT, KIND_NAMED):
            raise ValueError(f"bad section kind {self.kind!r}")
        if self.vanishing not in (VANISH_ZERO, VANISH_GENERIC, VANISH_NOWHERE):
            raise ValueError(f"bad vanishing tag {self.vanishing!r}")
        if (self.kind == KIND_ZERO) != (self.vanishing == VANISH_ZERO):
            raise ValueError("zero sections and identically-zero flags coincide")
        if self.kind == KIND_UNIT and self.vanishing != VANISH_NOWHERE:
            raise ValueError("a unit section vanishes nowhere")


def unit_section() -> SectionSymbol:
    return SectionSymbol("1", KIND_UNIT, VANISH_NOWHERE)


def named_section(name: str, vanishing: str = VANISH_GENERIC) -> SectionSymbol:
    return SectionSymbol(name, KIND_NAMED, vanishing)


def zero_section() -> SectionSymbol:
    return SectionSymbol("0", KIND_ZERO, VANISH_ZERO)


@dataclass(frozen=True)
class Summand:
    side: str
    bundle: LineBundleExpr
    rank: int = 1
    sw: SWPair | None = None

    def __post_init__(self):
        if self.side not in (SIDE_V, SIDE_W):
            raise ValueError(f"bad side {self.side!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")


@dataclass(frozen=True)
class HiggsEntry:
    target: int
    source: int
    symbol: SectionSymbol


@dataclass(frozen=True)
class DolbeaultTerm:
    target: int
    source: int
    name: str


@dataclass(frozen=True)
class GradedHiggsBundle:
    group: GroupTag
    genus: int
    summands: tuple[Summand, ...]
    sigma: tuple[int, ...]
    form: str
    higgs: tuple[HiggsEntry, ...]
    dolbeault: tuple[DolbeaultTerm, ...] = ()
    declared: tuple[tuple[str, int], ...] = ()
    torsion_classes: tuple[tuple[str, F2Class], ...] = ()
    meta: tuple[tuple[str, object], ...] = ()

    @property
    def declared_map(self) -> dict[str, int]:
        return dict(self.declared)

    @property
    def meta_map(self) -> dict[str, object]:
        return dict(self.meta)

    @property
    def total_rank(self) -> int:
        return sum(s.rank for s in self.summands)

    def degree_of(self, i: int) -> int:
        return self.summands[i].bundle.resolved_degree(self.genus, self.declared_map)

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree_of(i) for i in range(len(self.summands)))

    def entry(self, target: int, source: int) -> SectionSymbol | None:
        for e in self.higgs:
            if e.target == target and e.source == source:
                return e.symbol
        return None

    def ambient(self, target: int, source: int) -> LineBundleExpr | None:
        """Hom(L_source, L_target (x) K); None when a block is involved."""
        s, t = self.summands[source], self.summands[target]
        if s.rank != 1 or t.rank != 1:
            return None
        return s.bundle.dual().tensor(t.bundle).tensor(K_power(1))

    def side_indices(self, side: str) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.summands) if s.side == side)


def make_bundle(
    group: GroupTag,
    curve: Curve,
    summands: Sequence[Summand],
    sigma: Sequence[int],
    form: str,
    entries: Iterable[tuple[int, int, SectionSymbol]],
    dolbeault: Iterable[tuple[int, int, str]] = (),
    declared: Mapping[str, int] | None = None,
    torsion_classes: Mapping[str, F2Class] | None = None,
    meta: Mapping[str, object] | None = None,
) -> GradedHiggsBundle:
    higgs = tuple(
        HiggsEntry(t, s, sym)
        for t, s, sym in sorted(entries, key=lambda e: (e[0], e[1]))
        if sym.kind != KIND_ZERO
    )
    dol = tuple(
        DolbeaultTerm(t, s, n) for t, s, n in sorted(dolbeault, key=lambda d: (d[0], d[1], d[2]))
    )
    h = GradedHiggsBundle(
        group=group,
        genus=curve.genus,
        summands=tuple(summands),
        sigma=tuple(sigma),
        form=form,
        higgs=higgs,
        dolbeault=dol,
        declared=tuple(sorted((declared or {}).items())),
        torsion_classes=tuple(sorted((torsion_classes or {}).items())),
        meta=tuple(sorted((meta or {}).items())),
    )
    validate(h)
    return h


# -- structural validation -------------------------------------------------

def validate(h: GradedHiggsBundle) -> None:
    """Check the structural invariants; raise ModelInvariantError on failure."""
    n = len(h.summands)
    if len(h.sigma) != n:
        raise ModelInvariantError("pairing involution has the wrong length")
    if sorted(h.sigma) != list(range(n)):
        raise ModelInvariantError("pairing is not a permutation")
    if h.form not in (FORM_ORTHOGONAL, FORM_SYMPLECTIC):
        raise ModelInvariantError(f"bad pairing form {h.form!r}")
    for i, j in enumerate(h.sigma):
        if h.sigma[j] != i:
            raise ModelInvariantError("pairing is not an involution")
        si, sj = h.summands[i], h.summands[j]
        if si.rank > 1:
            if j != i:
                raise ModelInvariantError("block summands must be self-paired")
            if h.degree_of(i) != 0:
                raise ModelInvariantError("a self-dual block must have degree 0")
            continue
        if sj.bundle != si.bundle.dual():
            raise ModelInvariantError(
                f"summand {j} is not dual to summand {i}: "
                f"{sj.bundle.serialize()} vs {si.bundle.dual().serialize()}"
            )
        if h.form == FORM_ORTHOGONAL and si.side != sj.side:
            raise ModelInvariantError("an orthogonal pairing must preserve sides")
        if h.form == FORM_SYMPLECTIC and i != j and si.side == sj.side:
            raise ModelInvariantError("a symplectic pairing must exchange sides")

    _check_group_shape(h)

    entry_map = {(e.target, e.source): e.symbol for e in h.higgs}
    for (t, s), sym in entry_map.items():
        if t == s:
            raise ModelInvariantError("diagonal entries are not allowed")
        mirror = entry_map.get((h.sigma[s], h.sigma[t]))
        if mirror is None or mirror.name != sym.name or mirror.vanishing != sym.vanishing:
            raise ModelInvariantError(
                f"entry ({t},{s}) has no matching transpose at ({h.sigma[s]},{h.sigma[t]})"
            )
        amb = h.ambient(t, s)
        if amb is None:
            continue
        if sym.kind == KIND_UNIT and not amb.is_trivial():
            raise ModelInvariantError(
                f"unit entry ({t},{s}) needs a trivial ambient, got {amb.serialize()}"
            )
        amb_deg = amb.resolved_degree(h.genus, h.declared_map)
        if sym.vanishing == VANISH_NOWHERE and amb_deg != 0:
            raise ModelInvariantError(
                f"nowhere-vanishing entry ({t},{s}) in a bundle of degree {amb_deg}"
            )
        if sym.vanishing == VANISH_GENERIC and amb_deg < 0 and amb.canonical_power() is None:
            raise ModelInvariantError(
                f"entry ({t},{s}) claims a nonzero section of degree {amb_deg} < 0"
            )
    dol_set = {(d.target, d.source, d.name) for d in h.dolbeault}
    for t, s, name in dol_set:
        if (h.sigma[s], h.sigma[t], name) not in dol_set:
            raise ModelInvariantError(
                f"extension term ({t},{s}) has no matching transpose"
            )


def _check_group_shape(h: GradedHiggsBundle) -> None:
    fam, params = h.group.family, h.group.params
    v = [h.degree_of(i) for i in h.side_indices(SIDE_V)]
    w = [h.degree_of(i) for i in h.side_indices(SIDE_W)]
    rank_v = sum(h.summands[i].rank for i in h.side_indices(SIDE_V))
    rank_w = sum(h.summands[i].rank for i in h.side_indices(SIDE_W))
    if fam == "so0":
        p, q = params
        if (rank_v, rank_w) != (p, q):
            raise ModelInvariantError(
                f"rank mismatch for {h.group}: got ({rank_v},{rank_w})"
            )
        # determinant condition: both factors have trivial determinant
        if sum(v) != 0 or sum(w) != 0:
            raise ModelInvariantError(
                f"determinant condition fails for {h.group}: degrees {sum(v)},{sum(w)}"
            )
    elif fam == "so":
        p, q = params
        if (rank_v, rank_w) != (p, q):
            raise ModelInvariantError(
                f"rank mismatch for {h.group}: got ({rank_v},{rank_w})"
            )
        if sum(v) + sum(w) != 0:
            raise ModelInvariantError("total degree must vanish")
    elif fam == "sp":
        (two_n,) = params
        if h.total_rank != two_n or rank_v != two_n // 2:
            raise ModelInvariantError(f"rank mismatch for {h.group}")
        if sum(v) + sum(w) != 0:
            raise ModelInvariantError("total degree must vanish")
        if h.form != FORM_SYMPLECTIC:
            raise ModelInvariantError("symplectic groups need a symplectic pairing")
    elif fam in ("sl", "psl", "slc"):
        (nn,) = params
        if h.total_rank != nn:
            raise ModelInvariantError(f"rank mismatch for {h.group}")
        if sum(v) + sum(w) != 0:
            raise ModelInvariantError("total degree must vanish")


# -- parameters record -------------------------------------------------------

@dataclass(frozen=True)
class HiggsParameters:
    """Bag of discrete build data, as collected by the command line."""

    genus: int
    family: str
    group: GroupTag | None = None
    d: int | None = None
    q_on: tuple[int, ...] = ()
    spin_name: str = "s"
    mu: bool = True
    nu: bool = False
    q2: bool = True
    beta0: bool = True
    w0: object | None = None
    torsions: tuple[F2Class, ...] = ()

    def curve(self) -> Curve:
        return Curve(self.genus)


# -- W0 descriptors for the rank-2 orthogonal story --------------------------

@dataclass(frozen=True)
class SplitW0:
    """W0 = M + M^-1 (+ trivial padding); first Stiefel-Whitney class 0."""

    degree: int
    mu: bool = True
    nu: bool = True


@dataclass(frozen=True)
class PrymW0:
    """An indecomposable flat orthogonal rank-2 block from a double cover.

    Kept opaque: only its Stiefel-Whitney data enters the combinatorics.
    """

    sw1: F2Class
    sw2: int

    def __post_init__(self):
        if self.sw1.is_zero():
            raise ValueError("an indecomposable flat O(2) bundle has sw1 != 0")
        if self.sw2 not in (0, 1):
            raise ValueError("sw2 must be a bit")


@dataclass(frozen=True)
class TrivialW0:
    """W0 = a sum of trivial line bundles."""


# -- chain helpers -----------------------------------------------------------

def _chain_entries(length: int, q_on: Iterable[int]) -> list[tuple[int, int, SectionSymbol]]:
    """Entries of the principal chain on `length` summands, in chain indices.

    Subdiagonal units plus, for each enabled j, the j-th diagonal of shared
    named sections q_j (an exact copy on every admissible row).
    """
    entries = [(p + 1, p, unit_section()) for p in range(length - 1)]
    for j in sorted(set(q_on)):
        if j < 2 or j > length:
            raise BoundError(f"differential q{j} does not fit a chain of length {length}")
        sym = named_section(f"q{j}")
        for p in range(length - (j - 1)):
            entries.append((p, p + j - 1, sym))
    return entries


def _reorder(
    summands: list[Summand],
    sigma: list[int],
    entries: list[tuple[int, int, SectionSymbol]],
    order: list[int],
    dolbeault: list[tuple[int, int, str]] | None = None,
):
    """Apply a new summand ordering; `order[k]` is the old index at slot k."""
    inv = {old: new for new, old in enumerate(order)}
    new_summands = [summands[old] for old in order]
    new_sigma = [inv[sigma[order[k]]] for k in range(len(order))]
    new_entries = [(inv[t], inv[s], sym) for t, s, sym in entries]
    new_dol = [(inv[t], inv[s], n) for t, s, n in (dolbeault or [])]
    return new_summands, new_sigma, new_entries, new_dol


# -- builders ----------------------------------------------------------------

def build_hitchin_sl(
    curve: Curve, n: int, q_on: Iterable[int] = (), spin_name: str | None = None
) -> GradedHiggsBundle:
    """Principal chain for the split real form of SL(n): consecutive
    half-integer twists of K with unit subdiagonal and chosen differentials.

    Even n needs a spin symbol (a choice of square root of K); refusing to
    pick one implicitly keeps the 2^(2g) lift choices distinguishable.
    """
    if n < 2:
        raise BoundError("need rank at least 2")
    q_on = tuple(sorted(set(q_on)))
    if any(j < 2 or j > n for j in q_on):
        raise BoundError(f"differentials must lie in [2, {n}]")
    if n % 2 == 0 and not spin_name:
        raise MissingSpinError("even rank needs an explicit spin symbol")
    summands = []
    for i in range(1, n + 1):
        if n % 2:
            expr = K_power((n + 1 - 2 * i) // 2)
        else:
            expr = spin(spin_name).tensor(K_power((n - 2 * i) // 2))
        summands.append(Summand(SIDE_V, expr))
    sigma = [n - 1 - i for i in range(n)]
    entries = _chain_entries(n, q_on)
    return make_bundle(
        GroupTag("sl", (n,)),
        curve,
        summands,
        sigma,
        FORM_ORTHOGONAL,
        entries,
        meta={"family": "hitchin-sl", "n": n},
    )


def build_hitchin_so(curve: Curve, n: int, q_on: Iterable[int] = ()) -> GradedHiggsBundle:
    """Hitchin object for the split orthogonal group of signature (n, n+1).

    The odd-length principal chain with the odd differentials suppressed;
    positions of even chain index form the V side, the rest the W side.
    """
    if n < 1:
        raise BoundError("need n >= 1")
    q_on = tuple(sorted(set(q_on)))
    if any(j % 2 or j < 2 or j > 2 * n for j in q_on):
        raise BoundError(f"differentials must be even and lie in [2, {2 * n}]")
    length = 2 * n + 1
    chain = [
        Summand(SIDE_V if p % 2 == 1 else SIDE_W, K_power(n - p))
        for p in range(length)
    ]
    sigma = [length - 1 - p for p in range(length)]
    entries = _chain_entries(length, q_on)
    order = [p for p in range(length) if chain[p].side == SIDE_V]
    order += [p for p in range(length) if chain[p].side == SIDE_W]
    summands, sigma, entries, _ = _reorder(chain, sigma, entries, order)
    return make_bundle(
        GroupTag("so0", (n, n + 1)),
        curve,
        summands,
        sigma,
        FORM_ORTHOGONAL,
        entries,
        meta={"family": "hitchin-so", "n": n},
    )


def build_hitchin_sp(
    curve: Curve, n: int, q_on: Iterable[int] = (), spin_name: str = "s"
) -> GradedHiggsBundle:
    """Hitchin object for the split symplectic group of rank n (Sp(2n))."""
    if n < 1:
        raise BoundError("need n >= 1")
    if not spin_name:
        raise MissingSpinError("the symplectic chain needs a spin symbol")
    q_on = tuple(sorted(set(q_on)))
    if any(j % 2 or j < 2 or j > 2 * n for j in q_on):
        raise BoundError(f"differentials must be even and lie in [2, {2 * n}]")
    length = 2 * n
    chain = [
        Summand(SIDE_V if p % 2 == 0 else SIDE_W, spin(spin_name).tensor(K_power(n - 1 - p)))
        for p in range(length)
    ]
    sigma = [length - 1 - p for p in range(length)]
    entries = _chain_entries(length, q_on)
    order = [p for p in range(length) if chain[p].side == SIDE_V]
    order += [p for p in range(length) if chain[p].side == SIDE_W]
    summands, sigma, entries, _ = _reorder(chain, sigma, entries, order)
    return make_bundle(
        GroupTag("sp", (2 * n,)),
        curve,
        summands,
        sigma,
        FORM_SYMPLECTIC,
        entries,
        meta={"family": "hitchin-sp", "n": n},
    )


def build_fuchsian(curve: Curve, spin_name: str = "s", q2: bool = True) -> GradedHiggsBundle:
    """The uniformizing rank-2 object: a spin bundle and its dual."""
    h = build_hitchin_sp(curve, 1, (2,) if q2 else (), spin_name)
    return replace(h, meta=tuple(sorted({"family": "fuchsian", "n": 1}.items())))


def build_hitchin_so_nn(
    curve: Curve, n: int, q_on: Iterable[int] = (), pfaffian: bool = False
) -> GradedHiggsBundle:
    """Hitchin object for split signature (n, n): the (n, n-1) chain plus a
    trivial W summand receiving the Pfaffian differential."""
    if n < 2:
        raise BoundError("need n >= 2")
    q_on = tuple(sorted(set(q_on)))
    if any(j % 2 or j < 2 or j > 2 * n - 2 for j in q_on):
        raise BoundError(f"chain differentials must be even and lie in [2, {2 * n - 2}]")
    length = 2 * n - 1
    chain = [
        Summand(SIDE_V if p % 2 == 0 else SIDE_W, K_power(n - 1 - p))
        for p in range(length)
    ]
    sigma = [length - 1 - p for p in range(length)]
    entries = _chain_entries(length, q_on)
    order = [p for p in range(length) if chain[p].side == SIDE_V]
    order += [p for p in range(length) if chain[p].side == SIDE_W]
    summands, sigma, entries, _ = _reorder(chain, sigma, entries, order)
    summands.append(Summand(SIDE_W, trivial()))
    sigma.append(len(summands) - 1)
    if pfaffian:
        pf = named_section("pf")
        last_v = n - 1          # lowest chain position is V-side (even p), slot n-1
        first_v = 0
        o_idx = len(summands) - 1
        entries.append((o_idx, last_v, pf))
        entries.append((first_v, o_idx, pf))
    return make_bundle(
        GroupTag("so0", (n, n)),
        curve,
        summands,
        sigma,
        FORM_ORTHOGONAL,
        entries,
        meta={"family": "hitchin-so-nn", "n": n},
    )


def _twist_chain(
    curve: Curve,
    n: int,
    d: int,
    mu: bool,
    nu: bool,
    q_on: Iterable[int],
    meta: Mapping[str, object],
) -> GradedHiggsBundle:
    """Shared construction: odd orthogonal chain with W0 completed by a
    degree-d line M and its dual, fed by the lowest chain summand."""
    if n < 2:
        raise BoundError("need n >= 2")
    bound = n * (2 * curve.genus - 2)
    if abs(d) > bound:
        raise BoundError(f"|d| = {abs(d)} exceeds the bound {bound}")
    q_on = tuple(sorted(set(q_on)))
    if any(j % 2 or j < 2 or j > 2 * n - 2 for j in q_on):
        raise BoundError(f"chain differentials must be even and lie in [2, {2 * n - 2}]")
    length = 2 * n - 1
    chain = [
        Summand(SIDE_V if p % 2 == 0 else SIDE_W, K_power(n - 1 - p))
        for p in range(length)
    ]
    sigma = [length - 1 - p for p in range(length)]
    entries = _chain_entries(length, q_on)
    order = [p for p in range(length) if chain[p].side == SIDE_V]
    order += [p for p in range(length) if chain[p].side == SIDE_W]
    summands, sigma, entries, _ = _reorder(chain, sigma, entries, order)
    m_idx = len(summands)
    summands.append(Summand(SIDE_W, variable("M")))
    summands.append(Summand(SIDE_W, variable("M", -1)))
    sigma += [m_idx + 1, m_idx]
    top_v, low_v = 0, n - 1
    if mu:
        # a nonzero section in a degree-0 ambient trivializes it
        vanish = VANISH_NOWHERE if d == bound else VANISH_GENERIC
        sym = named_section("mu", vanish)
        entries.append((m_idx + 1, low_v, sym))
        entries.append((top_v, m_idx, sym))
    if nu:
        sym = named_section("nu")
        entries.append((m_idx, low_v, sym))
        entries.append((top_v, m_idx + 1, sym))
    return make_bundle(
        GroupTag("so0", (n, n + 1)),
        curve,
        summands,
        sigma,
        FORM_ORTHOGONAL,
        entries,
        declared={"M": d},
        meta=meta,
    )


def build_exotic_so(
    curve: Curve,
    n: int,
    d: int,
    mu: bool = True,
    nu: bool = False,
    q_on: Iterable[int] = (),
) -> GradedHiggsBundle:
    """Twisted-chain family in signature (n, n+1), labelled by d = deg M.

    The defining section mu must be switched on and the label must satisfy
    0 < d <= n(2g-2); the degree-0 shape is available separately through
    ``build_degree_zero_chain``.
    """
    bound = n * (2 * curve.genus - 2)
    if not 0 < d <= bound:
        raise BoundError(f"label must satisfy 0 < d <= {bound}, got {d}")
    if not mu:
        raise PreconditionError("the family needs a nonzero section mu")
    meta = {"family": "exotic-so", "n": n, "d": d}
    if n == 2:
        meta["switch_variable"] = "M"
        meta["switch_sections"] = "mu,nu"
    return _twist_chain(curve, n, d, mu, nu, q_on, meta)


def build_degree_zero_chain(curve: Curve, n: int) -> GradedHiggsBundle:
    """Unit chain with an isolated degree-0 pair M, M^-1 and zero field on it.

    Remark-level shape: recorded for the catalog's degree-0 slot; a full
    construction of that component is deliberately out of scope.
    """
    meta = {"family": "degree-zero-chain", "n": n, "d": 0,
            "status": "remark-level, construction deferred"}
    return _twist_chain(curve, n, 0, False, False, (), meta)


def build_so12(curve: Curve, d: int, mu: bool = True, nu: bool = True) -> GradedHiggsBundle:
    """Rank-3 family with decomposed rank-2 part: O on the V side, M + M^-1
    on the W side, sections mu and nu running down and up the chain."""
    if abs(d) > 2 * curve.genus - 2:
        raise BoundError(f"|d| exceeds {2 * curve.genus - 2}")
    summands = [
        Summand(SIDE_V, trivial()),
        Summand(SIDE_W, variable("M")),
        Summand(SIDE_W, variable("M", -1)),
    ]
    sigma = [0, 2, 1]
    entries = []
    if mu:
        sym = named_section("mu", VANISH_NOWHERE if d == 2 * curve.genus - 2 else VANISH_GENERIC)
        entries += [(0, 1, sym), (2, 0, sym)]
    if nu:
        sym = named_section("nu", VANISH_NOWHERE if -d == 2 * curve.genus - 2 else VANISH_GENERIC)
        entries += [(1, 0, sym), (0, 2, sym)]
    return make_bundle(
        GroupTag("so", (1, 2)),
        curve,
        summands,
        sigma,
        FORM_ORTHOGONAL,
        entries,
        declared={"M": d},
        meta={"family": "so12", "d": d,
              "switch_variable": "M", "switch_sections": "mu,nu"},
    )


def build_maximal_so23(
    curve: Curve, d: int, mu: bool = True, nu: bool = True, q2: bool = True
) -> GradedHiggsBundle:
    """Maximal family in signature (2, 3) with decomposed rank-2 part.

    Hand-written five-summand diagram (independent of the chain machinery,
    so the generic construction can be cross-checked against it):
    V = K + K^-1, W = O + M + M^-1, units K -> O -> K^-1, q2 back up,
    mu, nu connecting the lowest V summand to M^-1, M.
    """
    top = 4 * curve.genus - 4
    if abs(d) > top:
        raise BoundError(f"|d| exceeds {top}")
    summands = [
        Summand(SIDE_V, K_power(1)),
        Summand(SIDE_V, K_power(-1)),
        Summand(SIDE_W, trivial()),
        Summand(SIDE_W, variable("M")),
        Summand(SIDE_W, variable("M", -1)),
    ]
    sigma = [1, 0, 2, 4, 3]
    entries = [(2, 0, unit_section()), (1, 2, unit_section())]
    if q2:
        sym = named_section("q2")
        entries += [(0, 2, sym), (2, 1, sym)]
    if mu:
        sym = named_section("mu", VANISH_NOWHERE if d == top else VANISH_GENERIC)
        entries += [(4, 1, sym), (0, 3, sym)]
    if nu:
        sym = named_section("nu", VANISH_NOWHERE if -d == top else VANISH_GENERIC)
        entries += [(3, 1, sym), (0, 4, sym)]
    return make_bundle(
        GroupTag("so0", (2, 3)),
        curve,
        summands,
        sigma,
        FORM_ORTHOGONAL,
        entries,
        declared={"M": d},
        meta={"family": "maximal-so23", "d": d,
              "switch_variable": "M", "switch_sections": "mu,nu"},
    )


def build_maximal_so2n(
    curve: Curve,
    n: int,
    w0: SplitW0 | PrymW0 | TrivialW0,
    q2: bool = True,
    beta0: bool = True,
) -> GradedHiggsBundle:
    """Maximal-Toledo family in signature (2, n), n >= 3.

    V = K I + K^-1 I with I the determinant of the chosen rank-(n-1)
    orthogonal bundle W0; W = I + W0.  The three supported W0 shapes are a
    decomposed pair M + M^-1 (padded with trivial summands above n = 3),
    a sum of trivial bundles, and an opaque indecomposable flat block
    labelled only by its Stiefel-Whitney data.
    """
    if n < 3:
        raise BoundError("signature (2, n) needs n >= 3")
    g = curve.genus
    torsion_classes: dict[str, F2Class] = {}
    declared: dict[str, int] = {}
    if isinstance(w0, PrymW0):
        i_expr = torsion("I")
        torsion_classes["I"] = w0.sw1
    elif isinstance(w0, (SplitW0, TrivialW0)):
        i_expr = trivial()
    else:
        raise TypeError(f"unknown W0 descriptor {w0!r}")
    summands = [
        Summand(SIDE_V, K_power(1).tensor(i_expr)),
        Summand(SIDE_V, K_power(-1).tensor(i_expr)),
        Summand(SIDE_W, i_expr),
    ]
    sigma = [1, 0, 2]
    entries = [(2, 0, unit_section()), (1, 2, unit_section())]
    if q2:
        sym = named_section("q2")
        entries += [(0, 2, sym), (2, 1, sym)]
    meta: dict[str, object] = {"family": "maximal-so2n", "n": n}
    if isinstance(w0, SplitW0):
        if abs(w0.degree) > 4 * g - 4:
            raise BoundError(f"|deg M| exceeds {4 * g - 4}")
        declared["M"] = w0.degree
        m_idx = len(summands)
        summands += [Summand(SIDE_W, variable("M")), Summand(SIDE_W, variable("M", -1))]
        sigma += [m_idx + 1, m_idx]
        if w0.mu:
            sym = named_section("mu", VANISH_NOWHERE if w0.degree == 4 * g - 4 else VANISH_GENERIC)
            entries += [(m_idx + 1, 1, sym), (0, m_idx, sym)]
        if w0.nu:
            sym = named_section("nu", VANISH_NOWHERE if -w0.degree == 4 * g - 4 else VANISH_GENERIC)
            entries += [(m_idx, 1, sym), (0, m_idx + 1, sym)]
        for _ in range(n - 3):
            summands.append(Summand(SIDE_W, trivial()))
            sigma.append(len(summands) - 1)
        meta.update({"w0": "split", "d": w0.degree,
                     "sw1": F2Class.zero(g).bits(), "sw2": w0.degree % 2,
                     "switch_variable": "M", "switch_sections": "mu,nu"})
    elif isinstance(w0, TrivialW0):
        sym = named_section("beta0")
        for _ in range(n - 1):
            idx = len(summands)
            summands.append(Summand(SIDE_W, trivial()))
            sigma.append(idx)
            if beta0:
                entries += [(idx, 1, sym), (0, idx, sym)]
        meta.update({"w0": "trivial", "sw1": F2Class.zero(g).bits(), "sw2": 0})
    else:
        if n != 3:
            raise BoundError("an indecomposable rank-2 block fills W0 only for n = 3")
        idx = len(summands)
        summands.append(
            Summand(SIDE_W, variable("W0"), rank=2, sw=SWPair(w0.sw1, w0.sw2))
        )
        declared["W0"] = 0
        sigma.append(idx)
        if beta0:
            sym = named_section("beta0")
            entries += [(idx, 1, sym), (0, idx, sym)]
        meta.update({"w0": "prym", "sw1": w0.sw1.bits(), "sw2": w0.sw2})
    return make_bundle(
        GroupTag("so0", (2, n)),
        curve,
        summands,
        sigma,
        FORM_ORTHOGONAL,
        entries,
        declared=declared,
        torsion_classes=torsion_classes,
        meta=meta,
    )


def build_twisted_fuchsian_sp(
    curve: Curve,
    classes: Sequence[F2Class],
    spin_name: str = "s",
    q2: bool = True,
) -> GradedHiggsBundle:
    """Diagonal twist of the uniformizing object by 2-torsion bundles.

    V is a sum of n copies of the spin bundle, each twisted by a 2-torsion
    line; the field is blockwise the rank-2 one (unit down, q2 up on every
    pair).  A zero class means an untwisted copy.
    """
    n = len(classes)
    if n < 1:
        raise BoundError("need at least one summand")
    if not spin_name:
        raise MissingSpinError("the twisted chain needs a spin symbol")
    g = curve.genus
    torsion_classes: dict[str, F2Class] = {}
    v_exprs = []
    for j, cls in enumerate(classes, start=1):
        if cls.genus != g:
            raise ModelInvariantError("torsion class genus does not match the curve")
        if cls.is_zero():
            v_exprs.append(spin(spin_name))
        else:
            name = f"I{j}"
            torsion_classes[name] = cls
            v_exprs.append(spin(spin_name).tensor(torsion(name)))
    summands = [Summand(SIDE_V, e) for e in v_exprs]
    summands += [Summand(SIDE_W, e.dual()) for e in v_exprs]
    sigma = [n + j for j in range(n)] + list(range(n))
    entries = []
    q_sym = named_section("q2")
    for j in range(n):
        entries.append((n + j, j, unit_section()))
        if q2:
            entries.append((j, n + j, q_sym))
    return make_bundle(
        GroupTag("sp", (2 * n,)),
        curve,
        summands,
        sigma,
        FORM_SYMPLECTIC,
        entries,
        torsion_classes=torsion_classes,
        meta={"family": "twisted-fuchsian-sp", "n": n},
    )


def build_extension_deformed_so35(curve: Curve, d: int, mu: bool = True) -> GradedHiggsBundle:
    """The (3,4) twisted-chain object sitting inside signature (3,5), with
    the direct-sum holomorphic structure deformed by an extension class.

    V = K^2 + O + K^-2; W = M + K + K^-1 + M^-1 + O.  The field has the
    two chain units and mu; the extension term eps glues the new trivial
    summand to M and M^-1 (one matched transpose pair).
    """
    g = curve.genus
    if not mu:
        raise PreconditionError("the deformation needs a nonzero section mu")
    if not 0 < d <= 3 * (2 * g - 2):
        raise BoundError(f"label must satisfy 0 < d <= {3 * (2 * g - 2)}, got {d}")
    summands = [
        Summand(SIDE_V, K_power(2)),
        Summand(SIDE_V, trivial()),
        Summand(SIDE_V, K_power(-2)),
        Summand(SIDE_W, variable("M")),
        Summand(SIDE_W, K_power(1)),
        Summand(SIDE_W, K_power(-1)),
        Summand(SIDE_W, variable("M", -1)),
        Summand(SIDE_W, trivial()),
    ]
    sigma = [2, 1, 0, 6, 5, 4, 3, 7]
    m_sym = named_section("mu", VANISH_NOWHERE if d == 3 * (2 * g - 2) else VANISH_GENERIC)
    entries = [
        (4, 0, unit_section()),
        (5, 1, unit_section()),
        (1, 4, unit_section()),
        (2, 5, unit_section()),
        (6, 2, m_sym),
        (0, 3, m_sym),
    ]
    dol = [(6, 7, "eps"), (7, 3, "eps")]
    return make_bundle(
        GroupTag("so0", (3, 5)),
        curve,
        summands,
        sigma,
        FORM_ORTHOGONAL,
        entries,
        dolbeault=dol,
        declared={"M": d},
        meta={"family": "deformed-exotic-so35", "d": d},
    )


# -- derived objects ---------------------------------------------------------

def associated_sl(h: GradedHiggsBundle) -> GradedHiggsBundle:
    """Forget the real structure: the same summands and field seen as an
    object for the special linear group of the total rank."""
    if h.group.family == "slc":
        raise WrongGroupError("already a special-linear object")
    if sum(h.degrees()) != 0:
        raise ModelInvariantError("total degree must vanish")
    out = replace(
        h,
        group=GroupTag("slc", (h.total_rank,)),
        meta=tuple(sorted({**h.meta_map, "associated_from": str(h.group)}.items())),
    )
    validate(out)
    return out


def embed_so23_to_so2n(h: GradedHiggsBundle, n: int) -> GradedHiggsBundle:
    """Stabilize a maximal (2,3) object to signature (2,n) by appending
    trivial W summands with zero field rows."""
    if h.group != GroupTag("so0", (2, 3)):
        raise WrongGroupError(f"expected a so0:2,3 object, got {h.group}")
    if n < 4:
        raise BoundError("the target signature needs n >= 4")
    summands = list(h.summands)
    sigma = list(h.sigma)
    for _ in range(n - 3):
        summands.append(Summand(SIDE_W, trivial()))
        sigma.append(len(summands) - 1)
    meta = {**h.meta_map, "family": "maximal-so2n", "n": n, "w0": "embedded"}
    d = h.meta_map.get("d")
    if "sw1" not in meta:
        meta["sw1"] = F2Class.zero(h.genus).bits()
        meta["sw2"] = (int(d) % 2) if d is not None else 0
    out = replace(
        h,
        group=GroupTag("so0", (2, n)),
        summands=tuple(summands),
        sigma=tuple(sigma),
        meta=tuple(sorted(meta.items())),
    )
    validate(out)
    return out


def embed_so23_to_so33(h: GradedHiggsBundle) -> GradedHiggsBundle:
    """Stabilize a maximal (2,3) object to split signature (3,3) by
    prepending one trivial V summand with zero field row."""
    if h.group != GroupTag("so0", (2, 3)):
        raise WrongGroupError(f"expected a so0:2,3 object, got {h.group}")
    summands = [Summand(SIDE_V, trivial())] + list(h.summands)
    sigma = [0] + [j + 1 for j in h.sigma]
    entries = [(e.target + 1, e.source + 1, e.symbol) for e in h.higgs]
    dol = [(t.target + 1, t.source + 1, t.name) for t in h.dolbeault]
    return make_bundle(
        GroupTag("so0", (3, 3)),
        Curve(h.genus),
        summands,
        sigma,
        h.form,
        entries,
        dolbeault=dol,
        declared=h.declared_map,
        torsion_classes=dict(h.torsion_classes),
        meta={**h.meta_map, "family": "embedded-so33"},
    )


def append_trivial_w(h: GradedHiggsBundle) -> GradedHiggsBundle:
    """Stabilize signature (p, q) to (p, q+1) with a trivial W summand."""
    if h.group.family != "so0":
        raise WrongGroupError("only split orthogonal objects can be stabilized")
    p, q = h.group.params
    out = replace(
        h,
        group=GroupTag("so0", (p, q + 1)),
        summands=h.summands + (Summand(SIDE_W, trivial()),),
        sigma=h.sigma + (len(h.summands),),
    )
    validate(out)
    return out


def so2n_sw_label(h: GradedHiggsBundle) -> SWPair:
    """Stiefel-Whitney label of the rank-(n-1) orthogonal complement of a
    maximal signature-(2,n) object, computed from the summand data.

    The complement is the W side minus the distinguished line receiving
    the unit (the twist of the top V summand by the dual twisting line).
    Its label is the total class of the orthogonal sum: dual line pairs
    contribute their degree mod 2 to the second class, self-paired lines
    contribute their 2-torsion class to the first, opaque blocks carry
    their recorded pair, and the cross terms follow the sum formula.
    """
    from .f2cohomology import cup

    if h.group.family != "so0" or h.group.params[0] != 2:
        raise WrongGroupError(f"expected a signature-(2,n) object, got {h.group}")
    v_idx = h.side_indices(SIDE_V)
    w_idx = h.side_indices(SIDE_W)
    if len(v_idx) != 2:
        raise WrongGroupError("expected a rank-2 positive side")
    top_v = max(v_idx, key=h.degree_of)
    unit_line = h.summands[top_v].bundle.tensor(K_power(-1))
    distinguished = None
    for i in w_idx:
        if h.summands[i].rank == 1 and h.summands[i].bundle == unit_line:
            distinguished = i
            break
    if distinguished is None:
        raise WrongGroupError("no distinguished unit line on the W side")
    tclasses = dict(h.torsion_classes)
    zero = F2Class.zero(h.genus)
    factors: list[SWPair] = []
    seen: set[int] = set()
    for i in w_idx:
        if i == distinguished or i in seen:
            continue
        seen.add(i)
        s = h.summands[i]
        if s.rank > 1:
            if s.sw is None:
                raise WrongGroupError(f"block summand {i} carries no invariants")
            factors.append(s.sw)
        elif h.sigma[i] == i:
            cls = zero
            for name in s.bundle.torsions:
                cls = cls + tclasses.get(name, zero)
            factors.append(SWPair(cls, 0))
        else:
            seen.add(h.sigma[i])
            factors.append(SWPair(zero, h.degree_of(i) % 2))
    sw1, sw2 = zero, 0
    for f in factors:
        sw2 = (sw2 + f.sw2 + cup(sw1, f.sw1)) % 2
        sw1 = sw1 + f.sw1
    return SWPair(sw1, sw2)


# -- gauge moves and canonical forms ------------------------------------------

def permute_summands(h: GradedHiggsBundle, order: Sequence[int]) -> GradedHiggsBundle:
    """Reindex summands; ``order[k]`` is the old index placed at slot k."""
    if sorted(order) != list(range(len(h.summands))):
        raise ValueError("not a permutation of the summand indices")
    inv = {old: new for new, old in enumerate(order)}
    out = replace(
        h,
        summands=tuple(h.summands[old] for old in order),
        sigma=tuple(inv[h.sigma[old]] for old in order),
        higgs=tuple(
            sorted(
                (HiggsEntry(inv[e.target], inv[e.source], e.symbol) for e in h.higgs),
                key=lambda e: (e.target, e.source),
            )
        ),
        dolbeault=tuple(
            sorted(
                (DolbeaultTerm(inv[t.target], inv[t.source], t.name) for t in h.dolbeault),
                key=lambda t: (t.target, t.source, t.name),
            )
        ),
    )
    validate(out)
    return out


def switchable(h: GradedHiggsBundle) -> bool:
    return "switch_variable" in h.meta_map


def switched(h: GradedHiggsBundle) -> GradedHiggsBundle:
    """The other presentation of a family with a decomposed rank-2 part:
    replace M by its dual and exchange the two connecting sections."""
    meta = h.meta_map
    if not switchable(h):
        raise WrongGroupError("object has no declared switching move")
    var = str(meta["switch_variable"])
    first, second = str(meta["switch_sections"]).split(",")
    rename = {first: second, second: first}

    def flip(expr: LineBundleExpr) -> LineBundleExpr:
        vars_ = {n: (-e if n == var else e) for n, e in expr.variables}
        out = LineBundleExpr(
            k_power=expr.k_power,
            spins=expr.spins,
            torsions=expr.torsions,
            variables=tuple(sorted((n, e) for n, e in vars_.items() if e)),
            divisors=expr.divisors,
        )
        return out

    declared = dict(h.declared_map)
    if var in declared:
        declared[var] = -declared[var]
    new_meta = dict(meta)
    if "d" in new_meta:
        new_meta["d"] = -int(str(new_meta["d"])) if str(new_meta["d"]).lstrip("-").isdigit() else new_meta["d"]
    out = replace(
        h,
        summands=tuple(
            Summand(s.side, flip(s.bundle), s.rank, s.sw) for s in h.summands
        ),
        higgs=tuple(
            HiggsEntry(
                e.target,
                e.source,
                SectionSymbol(rename.get(e.symbol.name, e.symbol.name), e.symbol.kind, e.symbol.vanishing),
            )
            for e in h.higgs
        ),
        declared=tuple(sorted(declared.items())),
        meta=tuple(sorted(new_meta.items())),
    )
    validate(out)
    return out


def _summand_key(h: GradedHiggsBundle, i: int) -> tuple:
    s = h.summands[i]
    sw = s.sw.label() if s.sw else ""
    return (s.side, s.rank, s.bundle.serialize(), sw)


_PERM_CAP = 40320  # 8!; identical-summand groups never get close in practice


def _permutation_orbit(h: GradedHiggsBundle):
    n = len(h.summands)
    base = sorted(range(n), key=lambda i: _summand_key(h, i))
    groups: list[list[int]] = []
    for i in base:
        if groups and _summand_key(h, groups[-1][0]) == _summand_key(h, i):
            groups[-1].append(i)
        else:
            groups.append([i])
    total = 1
    for grp in groups:
        for k in range(2, len(grp) + 1):
            total *= k
    if total > _PERM_CAP:
        raise BudgetError("too many identical summands to canonicalize")
    for combo in itertools.product(*(itertools.permutations(g) for g in groups)):
        order: list[int] = []
        for grp in combo:
            order.extend(grp)
        yield permute_summands(h, order)


def canonical_key(h: GradedHiggsBundle) -> str:
    """Deterministic serialization invariant under summand reordering."""
    return min(canonical_json(p) for p in _permutation_orbit(h))


def gauge_orbit_key(h: GradedHiggsBundle) -> str:
    """Canonical key under reordering plus the switching move when present."""
    keys = [canonical_key(h)]
    if switchable(h):
        keys.append(canonical_key(switched(h)))
    return min(keys)


def structurally_equal(a: GradedHiggsBundle, b: GradedHiggsBundle) -> bool:
    """Equality up to summand reordering (groups and genus included)."""
    if a.group != b.group or a.genus != b.genus:
        return False
    return canonical_key(a) == canonical_key(b)


# -- serialization ------------------------------------------------------------

def _symbol_table(h: GradedHiggsBundle) -> dict[str, dict]:
    table: dict[str, dict] = {}
    declared = h.declared_map
    tclasses = dict(h.torsion_classes)
    for s in h.summands:
        e = s.bundle
        for name in e.spins:
            table.setdefault(name, {"kind": KIND_SPIN})
        for name in e.torsions:
            entry = table.setdefault(name, {"kind": KIND_TORSION})
            if name in tclasses:
                entry["class"] = tclasses[name].bits()
        for name, _ in e.variables:
            table.setdefault(name, {"kind": KIND_VARIABLE, "degree": declared.get(name)})
        for name, _ in e.divisors:
            table.setdefault(name, {"kind": "divisor", "degree": declared.get(name)})
    return table


def bundle_to_dict(h: GradedHiggsBundle) -> dict:
    out: dict = {
        "schema": SCHEMA,
        "group": str(h.group),
        "genus": h.genus,
        "form": h.form,
        "summands": [],
        "pairing": list(h.sigma),
        "higgs": [],
        "dolbeault": [],
        "symbols": _symbol_table(h),
        "meta": {k: v for k, v in h.meta},
    }
    for i, s in enumerate(h.summands):
        row = {
            "side": s.side,
            "bundle": s.bundle.serialize(),
            "degree": h.degree_of(i),
        }
        if s.rank != 1:
            row["rank"] = s.rank
        if s.sw is not None:
            row["sw1"] = s.sw.sw1.bits()
            row["sw2"] = s.sw.sw2
        out["summands"].append(row)
    for e in h.higgs:
        out["higgs"].append(
            {"to": e.target, "from": e.source, "name": e.symbol.name,
             "vanishing": e.symbol.vanishing}
        )
    for t in h.dolbeault:
        out["dolbeault"].append({"to": t.target, "from": t.source, "name": t.name})
    return out


def bundle_from_dict(data: Mapping) -> GradedHiggsBundle:
    try:
        if data.get("schema", SCHEMA) != SCHEMA:
            raise ParseError(f"unknown schema {data.get('schema')!r}")
        group = GroupTag.parse(data["group"])
        curve = Curve(int(data["genus"]))
        symbols = data.get("symbols", {})
        kinds = {name: info.get("kind", KIND_VARIABLE) for name, info in symbols.items()}
        declared = {
            name: int(info["degree"])
            for name, info in symbols.items()
            if info.get("degree") is not None
        }
        tclasses = {
            name: F2Class.from_bits(info["class"])
            for name, info in symbols.items()
            if "class" in info
        }
        summands = []
        for row in data["summands"]:
            sw = None
            if "sw1" in row:
                sw = SWPair(F2Class.from_bits(row["sw1"]), int(row["sw2"]))
            summands.append(
                Summand(row["side"], parse_expr(row["bundle"], kinds),
                        int(row.get("rank", 1)), sw)
            )
        entries = []
        for row in data.get("higgs", []):
            name, vanishing = row["name"], row["vanishing"]
            sym = unit_section() if name == "1" else SectionSymbol(name, KIND_NAMED, vanishing)
            entries.append((int(row["to"]), int(row["from"]), sym))
        dol = [(int(r["to"]), int(r["from"]), r["name"]) for r in data.get("dolbeault", [])]
        return make_bundle(
            group,
            curve,
            summands,
            [int(i) for i in data["pairing"]],
            data.get("form", FORM_ORTHOGONAL),
            entries,
            dolbeault=dol,
            declared=declared,
            torsion_classes=tclasses,
            meta=data.get("meta", {}),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed bundle document: {exc}") from exc


def canonical_json(h: GradedHiggsBundle) -> str:
    return json.dumps(bundle_to_dict(h), sort_keys=True, separators=(",", ":"))


# -- comparison helpers --------------------------------------------------------

def summand_degree_multiset(h: GradedHiggsBundle) -> tuple[tuple[str, int], ...]:
    return tuple(sorted((s.side, h.degree_of(i)) for i, s in enumerate(h.summands)))


def arrow_pattern(h: GradedHiggsBundle) -> tuple[tuple[int, int, str], ...]:
    """Multiset of (target degree, source degree, vanishing) over the field."""
    degs = h.degrees()
    return tuple(
        sorted((degs[e.target], degs[e.source], e.symbol.vanishing) for e in h.higgs)
    )


__all__ = [
    "SCHEMA",
    "GroupTag",
    "group_tag",
    "SectionSymbol",
    "unit_section",
    "named_section",
    "zero_section",
    "Summand",
    "HiggsEntry",
    "DolbeaultTerm",
    "GradedHiggsBundle",
    "HiggsParameters",
    "SplitW0",
    "PrymW0",
    "TrivialW0",
    "make_bundle",
    "validate",
    "build_fuchsian",
    "build_hitchin_sl",
    "build_hitchin_so",
    "build_hitchin_sp",
    "build_hitchin_so_nn",
    "build_exotic_so",
    "build_degree_zero_chain",
    "build_so12",
    "build_maximal_so23",
    "build_maximal_so2n",
    "build_twisted_fuchsian_sp",
    "build_extension_deformed_so35",
    "associated_sl",
    "embed_so23_to_so2n",
    "embed_so23_to_so33",
    "append_trivial_w",
    "so2n_sw_label",
    "permute_summands",
    "switchable",
    "switched",
    "canonical_key",
    "gauge_orbit_key",
    "structurally_equal",
    "bundle_to_dict",
    "bundle_from_dict",
    "canonical_json",
    "summand_degree_multiset",
    "arrow_pattern",
    "VANISH_ZERO",
    "VANISH_GENERIC",
    "VANISH_NOWHERE",
    "KIND_ZERO",
    "KIND_UNIT",
    "KIND_NAMED",
    "SIDE_V",
    "SIDE_W",
    "FORM_ORTHOGONAL",
    "FORM_SYMPLECTIC",
]
