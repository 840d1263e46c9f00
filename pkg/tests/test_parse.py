import itertools
import random

import pytest

from ffhyper.errors import ParseError
from ffhyper.field import Field
from ffhyper.parse import parse_poly, poly_to_text
from ffhyper.poly import MultiPoly

F7 = Field(7)
F9 = Field(3, 2)
F25 = Field(5, 2)


# ---------------------------------------------------------------------------
# Pinned parses
# ---------------------------------------------------------------------------

def test_pinned_parses():
    cases = [
        ("x1*x2+1", "x1*x2+1"),
        ("1+x2*x1", "x1*x2+1"),
        ("-x1+2", "6*x1+2"),
        ("x1 - x2", "x1+6*x2"),
        ("10*x1", "3*x1"),
        ("  x1 +  x2 ", "x1+x2"),
        ("-(x1+1)", "6*x1+6"),
        ("3-5", "5"),
        ("(x1+x2)^2", "x1^2+2*x1*x2+x2^2"),
        ("x1-x1", "0"),
        ("x1^2*x2 + x2^2*x1", "x1^2*x2+x1*x2^2"),
    ]
    for text, want in cases:
        assert poly_to_text(parse_poly(F7, 2, text)) == want


def test_precedence_and_grouping():
    # ^ binds tighter than *, * tighter than +, unary minus applies last
    f = parse_poly(F7, 2, "2*x1^2+3")
    for a, b in itertools.product(range(7), repeat=2):
        assert f.eval((a, b)) == (2 * a * a + 3) % 7
    g = parse_poly(F7, 2, "(2*x1)^2")
    for a in range(7):
        assert g.eval((a, 0)) == (4 * a * a) % 7
    h = parse_poly(F7, 1, "-x1^2")
    for a in range(7):
        assert h.eval((a,)) == (-a * a) % 7


def test_generator_token_on_extension_fields():
    f = parse_poly(F9, 1, "g*x1^2+g")
    assert poly_to_text(f) == "g*x1^2+g"
    # g^2 = -1 for the x^2+1 modulus, so it prints as the prime-field constant 2
    g2 = parse_poly(F9, 1, "g^2*x1")
    assert poly_to_text(g2) == "2*x1"
    with pytest.raises(ParseError):
        parse_poly(F7, 1, "g*x1")


def test_error_positions():
    with pytest.raises(ParseError) as e:
        parse_poly(F7, 2, "x1**2")
    assert "column 4" in str(e.value)
    with pytest.raises(ParseError) as e:
        parse_poly(F7, 2, "x3")
    assert "x3" in str(e.value) and "column 1" in str(e.value)
    with pytest.raises(ParseError):
        parse_poly(F7, 2, "x1+")
    with pytest.raises(ParseError):
        parse_poly(F7, 2, "")
    with pytest.raises(ParseError):
        parse_poly(F7, 2, "x1*)")
    with pytest.raises(ParseError):
        parse_poly(F7, 2, "x0")
    with pytest.raises(ParseError):
        parse_poly(F7, 2, "x1 x2")


def test_parse_matches_evaluation():
    f = parse_poly(F7, 3, "x1^2*x3+2*x2*x3+5")
    for pt in itertools.product(range(7), repeat=3):
        a, b, c = pt
        assert f.eval(pt) == (a * a * c + 2 * b * c + 5) % 7


# ---------------------------------------------------------------------------
# Round trips
# ---------------------------------------------------------------------------

def random_poly(F, nvars, degree, rng, terms=6):
    f = MultiPoly.zero(F, nvars)
    for _ in range(terms):
        exps = [0] * nvars
        for _ in range(rng.randrange(degree + 1)):
            exps[rng.randrange(nvars)] += 1
        mono = MultiPoly.constant(F, nvars, rng.randrange(F.q))
        for v, e in enumerate(exps):
            mono = mono * MultiPoly.variable(F, nvars, v).pow(e)
        f = f + mono
    return f


def test_round_trip_prime_fields():
    rng = random.Random(41)
    for F in (Field(3), F7, Field(13)):
        for _ in range(40):
            f = random_poly(F, 3, 4, rng)
            text = poly_to_text(f)
            g = parse_poly(F, 3, text)
            assert g.terms == f.terms
            assert poly_to_text(g) == text


def test_round_trip_extension_fields():
    # extension coefficients print with the generator token and reparse exactly
    rng = random.Random(43)
    for F in (F9, F25):
        for _ in range(40):
            f = random_poly(F, 2, 3, rng)
            text = poly_to_text(f)
            g = parse_poly(F, 2, text)
            assert g.terms == f.terms
            assert poly_to_text(g) == text


def test_canonical_print_is_grlex_descending():
    f = parse_poly(F7, 3, "1+x3+x2*x1+x1^2")
    assert poly_to_text(f) == "x1^2+x1*x2+x3+1"
