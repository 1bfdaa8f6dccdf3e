"""Acceptance suite: one test per shipped guarantee, every check exact.

Each test prints a single verdict line with its runtime; the runtime
budget is part of the guarantee and is asserted, not just reported.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from contextlib import contextmanager
from dataclasses import replace

from higgs_atlas import (
    Curve,
    DEFORMED_SO35_RETRACTION,
    DEFORMED_SO35_STABLE_BRANCH,
    F2Class,
    GroupTag,
    NDescriptor,
    ParityViolationError,
    SWPair,
    Summand,
    append_trivial_w,
    arrow_pattern,
    build_exotic_so,
    build_extension_deformed_so35,
    build_hitchin_so,
    build_maximal_so23,
    build_so12,
    bundle_from_dict,
    bundle_to_dict,
    census,
    check_polystability,
    embed_so23_to_so2n,
    graded_limit,
    group_dim,
    half_dimension,
    limit_destabilized_branch,
    make_bundle,
    milnor_wood_bound,
    minimal_realizing_n,
    named_section,
    parameterization,
    permute_summands,
    resolve_extra_factor_reading,
    so2n_sw_label,
    summand_degree_multiset,
    sw_surjectivity_witnesses,
    switchable,
    switched,
    total_sw_of_sum,
    trivial,
    unit_section,
    variable,
    K_power,
)
from helpers import brute_force_polystability, builder_corpus, sw_fold_explicit

import pytest


@contextmanager
def criterion(number: int, title: str, budget: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        elapsed = time.perf_counter() - start
        print(f"ACCEPTANCE {number} ({title}): FAIL ({elapsed:.3f}s)")
        raise
    elapsed = time.perf_counter() - start
    print(f"ACCEPTANCE {number} ({title}): PASS ({elapsed:.3f}s)")
    assert elapsed < budget, f"criterion {number} took {elapsed:.3f}s, budget {budget}s"


def doc_no_meta(h) -> dict:
    doc = bundle_to_dict(h)
    doc.pop("meta", None)
    return doc


def test_criterion_1_circle_family_iff():
    with criterion(1, "rank-one iff-criterion with subset oracle", 1.0):
        for g in (2, 3, 4):
            c = Curve(g)
            for d in range(-(2 * g - 2), 2 * g - 1):
                for mu, nu in itertools.product((False, True), repeat=2):
                    h = build_so12(c, d, mu=mu, nu=nu)
                    verdict = check_polystability(h)
                    # the exhaustive oracle must agree everywhere
                    assert verdict.status == brute_force_polystability(h), (g, d, mu, nu)
                    if d > 0:
                        assert verdict.is_polystable == mu, (g, d, mu, nu)
                    elif d < 0:
                        assert verdict.is_polystable == nu, (g, d, mu, nu)
                    else:
                        # at label zero the verdict is definitional: matched
                        # sections are stable, one-sided sections pin the
                        # object at semistable without a splitting
                        assert verdict.is_polystable == (mu == nu), (g, mu, nu)


def test_criterion_2_parameterization_telescoping():
    with criterion(2, "component parameterizations telescope", 1.0):
        adopted = None
        for g in (2, 3, 4, 5):
            group = GroupTag("so", (1, 2))
            for d in range(1, milnor_wood_bound(group, g) + 1):
                p = parameterization(group, d, g)
                assert p.fiber_rank == d + g - 1
                assert p.total == half_dimension(group, g) == group_dim(group) * (g - 1)
            for n in (2, 3, 4, 5):
                group = GroupTag("so0", (n, n + 1))
                for d in range(1, milnor_wood_bound(group, g) + 1):
                    p = parameterization(group, d, g)
                    assert p.fiber_rank == d + (2 * n - 1) * (g - 1)
                    if n == 2:
                        assert p.fiber_rank == d + 3 * g - 3
                    assert p.total == half_dimension(group, g)
                    assert p.total * 2 == group_dim(group) * (2 * g - 2)
                report = resolve_extra_factor_reading(n, g)
                assert report["needed"] == report["summed_even_powers"]
                assert report["readings_agree"] == (n == 2)
                adopted = report["adopted"]
        print(f"  adopted extra-factor reading: {adopted}")
        assert "K^(2j)" in adopted


def test_criterion_3_census_numbers():
    with criterion(3, "frozen census counts", 1.0):
        assert census(GroupTag.parse("sl:3"), 2).total_count == 3
        assert census(GroupTag.parse("sl:4"), 2).total_count == 6
        g = 2
        assert census(GroupTag.parse("sp:6"), g, "maximal").total_count == 48 == 3 * 2 ** (2 * g)
        assert census(GroupTag.parse("so0:2,4"), g, "maximal").total_count == 32 == 2 ** (2 * g + 1)
        c23 = census(GroupTag.parse("so0:2,3"), g, "maximal")
        d_labels = [x.label for x in c23.components if x.label.startswith("d=")]
        sw_labels = [x.label for x in c23.components if x.label.startswith("sw1=")]
        assert c23.total_count == 35 == (4 * g - 3) + 2 * (2 ** (2 * g) - 1)
        assert len(d_labels) == 5 and len(sw_labels) == 30
        c12 = census(GroupTag.parse("so:1,2"), g)
        d_labels = [x.label for x in c12.components if x.label.startswith("d=")]
        assert d_labels == ["d=0", "d=1", "d=2"]
        assert c12.total_count == 33 == (2 * g - 1) + 2 * (2 ** (2 * g) - 1)


def test_criterion_4_limit_reproduction():
    with criterion(4, "fixed degenerations reproduced", 1.0):
        c2 = Curve(2)

        # (a) the scaling limit away from zero keeps the full field and
        # drops the extension terms; the result is the pure-field object,
        # reproduced here through an independent build path
        for g, ds in ((2, (2, 4, 6)), (3, (3, 12))):
            c = Curve(g)
            for d in ds:
                h = build_extension_deformed_so35(c, d)
                res = graded_limit(h, DEFORMED_SO35_RETRACTION, "to-infinity")
                assert res.exists
                expected = permute_summands(
                    append_trivial_w(build_exotic_so(c, 3, d)),
                    [0, 1, 2, 5, 3, 4, 6, 7],
                )
                assert doc_no_meta(res.limit) == doc_no_meta(expected), (g, d)

        # (b) the polystable branch at zero: units survive, both extension
        # terms survive, the connecting sections die
        h = build_extension_deformed_so35(c2, 2)
        res = graded_limit(h, DEFORMED_SO35_STABLE_BRANCH, with_stability=True)
        assert res.exists
        fixture = make_bundle(
            GroupTag("so0", (3, 5)),
            c2,
            [
                Summand("V", K_power(2)), Summand("V", trivial()), Summand("V", K_power(-2)),
                Summand("W", variable("M")), Summand("W", K_power(1)), Summand("W", K_power(-1)),
                Summand("W", variable("M", -1)), Summand("W", trivial()),
            ],
            (2, 1, 0, 6, 5, 4, 3, 7),
            "orthogonal",
            [
                (1, 4, unit_section()), (2, 5, unit_section()),
                (4, 0, unit_section()), (5, 1, unit_section()),
            ],
            dolbeault=[(6, 7, "eps"), (7, 3, "eps")],
            declared={"M": 2},
            meta={"d": 2, "family": "deformed-exotic-so35"},
        )
        assert bundle_to_dict(res.limit) == bundle_to_dict(fixture)
        assert res.limit_stability.status == "polystable"
        assert res.limit_stability.decomposition == ((0, 1, 2, 4, 5), (3, 6, 7))

        # (c) the destabilized branch: the rank-2 part is replaced by the
        # positive line and its dual, and only the alpha pair survives,
        # with the parity of the line degree pinned to the label
        res = limit_destabilized_branch(h, NDescriptor(degree=2))
        assert res.exists
        fixture = make_bundle(
            GroupTag("so0", (3, 5)),
            c2,
            [
                Summand("V", K_power(2)), Summand("V", trivial()), Summand("V", K_power(-2)),
                Summand("W", variable("N")), Summand("W", K_power(1)), Summand("W", K_power(-1)),
                Summand("W", variable("N", -1)), Summand("W", trivial()),
            ],
            (2, 1, 0, 6, 5, 4, 3, 7),
            "orthogonal",
            [
                (0, 3, named_section("alpha")), (6, 2, named_section("alpha")),
                (1, 4, unit_section()), (2, 5, unit_section()),
                (4, 0, unit_section()), (5, 1, unit_section()),
            ],
            declared={"N": 2},
        )
        assert doc_no_meta(res.limit) == doc_no_meta(fixture)
        with pytest.raises(ParityViolationError):
            limit_destabilized_branch(h, NDescriptor(degree=3))
        odd = build_extension_deformed_so35(c2, 1)
        assert limit_destabilized_branch(odd, NDescriptor(degree=1)).exists
        with pytest.raises(ParityViolationError):
            limit_destabilized_branch(odd, NDescriptor(degree=2))

        # (d) zero weights retract any object to its field-free shape
        from higgs_atlas import zero_weights

        for h in (
            build_so12(c2, 0),
            build_so12(c2, 0, mu=False, nu=False),
            build_maximal_so23(c2, 0),
            build_maximal_so23(c2, 3),
        ):
            res = graded_limit(h, zero_weights(h))
            assert res.exists
            assert bundle_to_dict(res.limit) == bundle_to_dict(
                replace(h, higgs=(), dolbeault=())
            )


def test_criterion_5_sw_arithmetic():
    with criterion(5, "characteristic-class sums against brute force", 5.0):
        classes = [F2Class.from_int(2, v) for v in range(16)]
        for n in (1, 2, 3):
            for combo in itertools.product(classes, repeat=n):
                got = total_sw_of_sum(combo)
                assert (got.sw1, got.sw2) == sw_fold_explicit(combo)
        table = minimal_realizing_n(2, 3)
        zero = F2Class.zero(2)
        assert len(table) == 32
        for pair, n in table.items():
            if pair.sw1 == zero:
                assert n == (1 if pair.sw2 == 0 else 3)
            else:
                assert n == (1 if pair.sw2 == 0 else 2)
        # the reported witnesses indeed realize their pair at that length
        for n in (1, 2, 3):
            report = sw_surjectivity_witnesses(2, n)
            for pair, witness in report.witnesses:
                assert len(witness) == n
                assert total_sw_of_sum(witness) == pair


def test_criterion_6_hitchin_recovery():
    with criterion(6, "top label reproduces the principal chain", 1.0):
        for g in (2, 3):
            c = Curve(g)
            for n in (2, 3, 4, 5):
                top = build_exotic_so(c, n, n * (2 * g - 2))
                hitchin = build_hitchin_so(c, n)
                assert summand_degree_multiset(top) == summand_degree_multiset(hitchin)
                assert arrow_pattern(top) == arrow_pattern(hitchin)
            for d in range(1, 4 * g - 3):
                a = build_exotic_so(c, 2, d, mu=True, nu=True, q_on=(2,))
                b = build_maximal_so23(c, d, mu=True, nu=True, q2=True)
                assert doc_no_meta(a) == doc_no_meta(b), (g, d)


def test_criterion_7_gauge_invariance_of_verdicts():
    with criterion(7, "verdicts invariant under gauge moves", 10.0):
        rng = random.Random(2024)
        corpus = builder_corpus(511, 200)
        assert len(corpus) == 200
        for h in corpus:
            base = check_polystability(h).status
            order = list(range(len(h.summands)))
            rng.shuffle(order)
            assert check_polystability(permute_summands(h, order)).status == base
            if switchable(h):
                assert check_polystability(switched(h)).status == base
            # scalar rescaling of the field acts trivially on the model:
            # the rescaled object has the identical serialized form
            rescaled = bundle_from_dict(json.loads(json.dumps(bundle_to_dict(h))))
            assert rescaled == h
            assert check_polystability(rescaled).status == base


def test_criterion_8_embedding_parity():
    with criterion(8, "stabilized labels keep only the degree parity", 1.0):
        zero_by_genus = {g: F2Class.zero(g) for g in (2, 3)}
        for g in (2, 3):
            c = Curve(g)
            for d in range(0, 4 * g - 3):
                base = build_maximal_so23(c, d)
                for n in (4, 5):
                    label = so2n_sw_label(embed_so23_to_so2n(base, n))
                    if d % 2 == 0:
                        assert label == SWPair(zero_by_genus[g], 0), (g, d, n)
                    else:
                        assert label.sw1 == zero_by_genus[g], (g, d, n)
                        assert label.sw2 != 0, (g, d, n)
