"""Acceptance gate: one test per shipped guarantee.

Each test pins one externally checkable behavior of the package at its
stated tolerance, against values frozen from an independent brute-force
oracle (tests/oracles.py).  Run with -v to get one pass/fail line per
guarantee.
"""

import itertools
import time
from fractions import Fraction
from math import comb

from ffhyper.admissible import is_admissible, primitive_density_deg2_var3
from ffhyper.bounds import (
    enumerate_X,
    predict_envelope,
    slavov_count,
    tuple_count_crosscheck,
    weil_check,
)
from ffhyper.cli import scan_text
from ffhyper.field import Field
from ffhyper.hypergraph import (
    build_hypergraph,
    count_epo_direct,
    count_m_subsets,
    epo_charsum,
    omega_clique,
)
from ffhyper.parse import parse_poly
from ffhyper.poly import UniPoly
from ffhyper.verify import (
    FIXTURES,
    _dualpath_instances,
    _hypergraph,
    _weil_instances,
    _xset_instances,
    run_checks,
)


def test_criterion_01_exact_density_of_good_polynomials():
    """Density of primitive degree-2 symmetric polynomials in 3 variables
    is exactly ((q-1)q^3 + (q-1)q) / q^4 for q in {3, 5, 7}; under 10 s."""
    t0 = time.monotonic()
    for q, want in ((3, (60, 81)), (5, (520, 625)), (7, (2100, 2401))):
        got = primitive_density_deg2_var3(Field(q))
        assert got == want
        assert got == ((q - 1) * q ** 3 + (q - 1) * q, q ** 4)
    assert time.monotonic() - t0 < 10.0


def test_criterion_02_admissibility_verdicts_with_witness():
    """x1*x2 + x1*x3 + x2*x3 fails the primitive condition with the
    explicit common zero (0, 0); x1*x2*x3 + 1 is admissible."""
    F5 = Field(5)
    v = is_admissible(parse_poly(F5, 3, "x1*x2+x1*x3+x2*x3"))
    assert v.status == "FailsPrimitive"
    assert v.witness.ext_degree == 1 and v.witness.point == (0, 0)
    v2 = is_admissible(parse_poly(Field(7), 3, "x1*x2*x3+1"))
    assert v2.status == "Admissible"


def test_criterion_03_epo_main_term_and_decay():
    """Even-partial-octahedron counts land within 8*q^3 (pairs) resp.
    40*q^5 (triples) of q^{2k}/2, match the frozen oracle values, and the
    relative deviation shrinks from q=13 to q=29; under 5 min."""
    t0 = time.monotonic()
    reldev = {}
    for (k, q, kind), want in sorted(FIXTURES["epo"].items()):
        rep = count_epo_direct(_hypergraph(q, kind, k))
        assert rep.observed == want, (k, q, kind)
        c = 8 if k == 2 else 40
        assert abs(2 * rep.observed - q ** (2 * k)) <= 2 * c * q ** (2 * k - 1)
        if k == 2:
            reldev[(q, kind)] = abs(rep.relative_deviation)
    for kind in ("prod", "paley"):
        assert reldev[(29, kind)] < reldev[(13, kind)]
    assert time.monotonic() - t0 < 300.0


def test_criterion_04_factored_and_naive_character_sums_agree():
    """The O(q^{2k-1}) factored character sum equals the full-enumeration
    sum exactly on 24 seed-fixed admissible polynomials, q <= 9, k <= 3."""
    instances = _dualpath_instances()
    assert len(instances) >= 20
    for q, k, f in instances:
        Y = build_hypergraph(Field.from_order(q), f)
        assert epo_charsum(Y, method="factored") == epo_charsum(Y, method="naive")


def test_criterion_05_tuple_counts_inside_envelopes():
    """Fully-adjacent m-subset counts sit inside the predicted
    main-plus-error envelope: m=3 at q in {101, 151} for pairs, m=4 at
    q in {13, 17} for triples; under 5 min."""
    t0 = time.monotonic()
    for (k, q, kind, m), want in sorted(FIXTURES["msub"].items()):
        Y = _hypergraph(q, kind, k)
        rep = count_m_subsets(Y, m)
        assert rep.observed == want, (k, q, m)
        env = predict_envelope(q, m, k, Y.poly.total_degree)
        assert env.main == Fraction(q ** m, 48 if k == 2 else 384)
        assert rep.predicted_main == env.main
        assert env.contains(rep.observed)
    assert time.monotonic() - t0 < 300.0


def test_criterion_06_ordered_unordered_crosscheck():
    """|N*m! - S| <= m!*d*C(m,k)*q^{m-1} holds in exact integers on the
    full grid: q <= 13 for pairs (m in {2,3}), q <= 9 for triples (m=3)."""
    for q in (3, 5, 7, 9, 11, 13):
        F = Field.from_order(q)
        f = parse_poly(F, 2, "x1*x2+1")
        for m in (2, 3):
            assert tuple_count_crosscheck(F, f, m).passes, (q, 2, m)
    for q in (3, 5, 7, 9):
        F = Field.from_order(q)
        f = parse_poly(F, 3, "x1*x2*x3+1")
        assert tuple_count_crosscheck(F, f, 3).passes, (q, 3, 3)


def test_criterion_07_weil_bound_and_shifted_squares():
    """sum_x chi(a*g(x))^2 <= (s-1)^2*q on 500 seed-fixed instances with
    deg g <= 6 over q in {9, 13, 25, 49}, zero failures; and the shifted
    square x^2+c sums to exactly -1 for every nonzero c over q in {13, 17}."""
    failures = 0
    total = 0
    for F, g, a in _weil_instances(500):
        total += 1
        w = weil_check(F, g, a)
        if not (w.applicable and w.holds):
            failures += 1
    assert total == 500 and failures == 0
    for q in (13, 17):
        F = Field(q)
        for c in range(1, q):
            assert weil_check(F, UniPoly(F, (c, 0, 1))).sum == -1


def test_criterion_08_exceptional_set_bounds():
    """|X| <= (d^2+d)*q^{k-2} with the leading-coefficient split bounds on
    100 seed-fixed admissible polynomials; the sum-of-squares example
    yields |X| = 1 over GF(7) and |X| = 25 over GF(13)."""
    instances = _xset_instances(100)
    assert len(instances) == 100
    for q, k, f in instances:
        x = enumerate_X(Field.from_order(q), f)
        assert x.holds, (q, k)
        assert len(x.members) <= (x.d ** 2 + x.d) * q ** (k - 2)
    for q, want in ((7, 1), (13, 25)):
        F = Field(q)
        x = enumerate_X(F, parse_poly(F, 3, "x1^2+x2^2+x3^2"))
        assert len(x.members) == want and x.holds


def test_criterion_09_joint_square_counts():
    """Points where both x and x+1 are nonzero squares: counts match the
    frozen oracle values for q in {13, 29, 53} and satisfy
    |observed - q/4| <= 2*sqrt(q) + 4; the dependent family (x, 4x) is
    reported as failing on the full subset."""
    for q in (13, 29, 53):
        F = Field(q)
        fs = [parse_poly(F, 1, "x1"), parse_poly(F, 1, "x1+1")]
        rep = slavov_count(F, fs, check_condition=True)
        assert rep.observed == FIXTURES["slavov"][q]
        assert rep.notes["condition_ok"]
        gap = abs(4 * rep.observed - q)
        assert gap <= 16 or (gap - 16) ** 2 <= 64 * q
    F13 = Field(13)
    bad = [parse_poly(F13, 1, "x1"), parse_poly(F13, 1, "4*x1")]
    rep = slavov_count(F13, bad, check_condition=True)
    assert not rep.notes["condition_ok"]
    assert rep.notes["condition_failing_subsets"] == [[1, 2]]


def test_criterion_10_square_polynomial_dichotomy():
    """For f = c*g^2 the hypergraph is complete when c is a square and has
    at most d*q^{k-1} edges when c is not; exhaustive over q <= 9, k <= 3,
    five fixed g per uniformity."""
    gs = {
        2: ("x1+x2", "x1*x2", "x1+x2+1", "x1^2+x2^2", "x1*x2+x1+x2"),
        3: ("x1+x2+x3", "x1*x2*x3", "x1+x2+x3+1", "x1^2+x2^2+x3^2",
            "x1*x2+x1*x3+x2*x3"),
    }
    for q in (3, 5, 7, 9):
        F = Field.from_order(q)
        nonsquare = next(c for c in range(1, q) if not F.is_square(c))
        for k in (2, 3):
            for text in gs[k]:
                g = parse_poly(F, k, text)
                d = 2 * g.total_degree
                complete = build_hypergraph(F, g * g).edge_count()
                assert complete == comb(q, k), (q, k, text)
                sparse = build_hypergraph(F, (g * g).scale(nonsquare)).edge_count()
                assert sparse <= d * q ** (k - 1), (q, k, text)


def test_criterion_11_byte_identical_scans():
    """A seeded parameter sweep renders byte-identical CSV across repeated
    runs and across worker counts 1, 2, 8."""
    kwargs = dict(fields=(5, 7, 9, 11, 13), samples=5, k=2, d=2, m=3, seed=0)
    base = scan_text(workers=1, **kwargs)
    assert scan_text(workers=1, **kwargs) == base
    assert scan_text(workers=2, **kwargs) == base
    assert scan_text(workers=8, **kwargs) == base


def test_clique_numbers_match_pinned_values():
    """Exact clique numbers agree with the frozen oracle values for
    q <= 31 (pairs) and q <= 13 (triples), both edge families."""
    for (k, q, kind), want in sorted(FIXTURES["omega"].items()):
        om, exact = omega_clique(_hypergraph(q, kind, k))
        assert exact and om == want, (k, q, kind)


def test_verification_registry_all_green():
    """The built-in check registry, the one behind the verify subcommand,
    reports every suite passing."""
    report = run_checks()
    failed = [s["name"] for s in report["suites"] if not s["passed"]]
    assert report["passed"], failed
