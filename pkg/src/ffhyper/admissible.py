"""Admissibility of symmetric polynomials, and the quadric-family density.

A symmetric f in k >= 2 variables of total degree d >= 1 is admissible
when (a) it is not a constant multiple of a square of a polynomial, and
(b) writing f = sum_j H_j(x_2..x_k) x_1^j, the coefficient ideal
(H_0, ..., H_d) is the unit ideal, i.e. the H_j have no common zero over
the algebraic closure.  By symmetry the choice of expansion variable
does not matter; this module expands in x_1 and treats the Groebner
decision as authoritative, attaching a brute-force witness from a small
extension when the primitivity test fails.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from .errors import ArityMismatch, ConstantPolynomial, NotSymmetric
from .groebner import Witness, common_zero_search, ideal_contains_one
from .poly import MultiPoly, is_const_square

ADMISSIBLE = "Admissible"
FAILS_SQUARE = "FailsSquareCondition"
FAILS_PRIMITIVE = "FailsPrimitive"


@dataclass
class AdmissibilityVerdict:
    status: str
    degree: int
    k: int
    witness: Witness | None = None
    expansion: list = dc_field(default_factory=list)

    @property
    def admissible(self):
        return self.status == ADMISSIBLE

    def to_json(self):
        out = {"status": self.status, "degree": self.degree, "k": self.k}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def is_admissible(f, witness_ext_degree=2):
    """Decide admissibility; returns an AdmissibilityVerdict.

    Raises NotSymmetric for asymmetric input, ConstantPolynomial when
    the total degree is below 1, ArityMismatch for fewer than two
    variables.  The witness attached to a FailsPrimitive verdict is a
    common zero of the expansion coefficients found in an extension of
    degree at most ``witness_ext_degree``; the Groebner decision stands
    even if no witness is found in that range.
    """
    if f.nvars < 2:
        raise ArityMismatch("admissibility is defined for k >= 2 variables")
    if not f.is_symmetric():
        raise NotSymmetric("polynomial is not symmetric")
    if f.total_degree < 1:
        raise ConstantPolynomial("admissibility requires total degree >= 1")
    H = f.expand_in_var(0)
    if is_const_square(f):
        return AdmissibilityVerdict(FAILS_SQUARE, f.total_degree, f.nvars, None, H)
    if ideal_contains_one(H):
        return AdmissibilityVerdict(ADMISSIBLE, f.total_degree, f.nvars, None, H)
    witness = common_zero_search(H, witness_ext_degree)
    return AdmissibilityVerdict(FAILS_PRIMITIVE, f.total_degree, f.nvars, witness, H)


def _orbit_exponents(k, d):
    """Non-increasing exponent vectors with total degree <= d, sorted."""
    out = []

    def rec(prefix, remaining):
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        cap = min(remaining, prefix[-1]) if prefix else remaining
        for e in range(cap, -1, -1):
            rec(prefix + [e], remaining - e)

    rec([], d)
    return sorted(set(out), key=lambda e: (sum(e), e))


def orbit_sum(field, exps):
    """Sum of the distinct monomials obtained by permuting one exponent vector."""
    terms = {}
    for perm in set(itertools.permutations(exps)):
        terms[perm] = 1
    return MultiPoly(field, len(exps), terms)


def random_symmetric_poly(field, k, d, seed):
    """Uniform random symmetric polynomial of total degree exactly d.

    The space is spanned by orbit sums of monomials of degree <= d; each
    orbit coefficient is drawn uniformly from the field, and draws where
    every degree-d orbit coefficient is zero are rejected, so the result
    always has total degree d.  Deterministic in ``seed``.
    """
    if k < 1:
        raise ArityMismatch("need at least one variable")
    if d < 1:
        raise ConstantPolynomial("degree must be at least 1")
    rng = random.Random(seed)
    orbits = _orbit_exponents(k, d)
    while True:
        coeffs = [rng.randrange(field.q) for _ in orbits]
        if any(c and sum(e) == d for e, c in zip(orbits, coeffs)):
            break
    f = MultiPoly.zero(field, k)
    for e, c in zip(orbits, coeffs):
        if c:
            f = f + orbit_sum(field, e).scale(c)
    return f


def primitive_density_deg2_var3(field, workers=1):
    """Count the primitive members of the quadric family in 3 variables.

    The family is f = A(x1^2+x2^2+x3^2) + B(x1x2+x2x3+x3x1)
    + C(x1+x2+x3) + D over all (A, B, C, D); a member is counted when
    its x_1-expansion generates the unit ideal.  Constant members
    (A = B = C = 0) have degree < 1 and are excluded.  Returns
    (count, q^4).  ``workers`` only partitions the A axis; the count is
    an exact integer either way.
    """
    q = field.q
    F = field

    def count_for_A(a_range):
        total = 0
        for A in a_range:
            for B, C, D in itertools.product(range(q), repeat=3):
                if A == 0 and B == 0 and C == 0:
                    continue
                # coefficients of f in x1: H2 = A, H1 = B(x2+x3)+C,
                # H0 = A(x2^2+x3^2)+B x2 x3+C(x2+x3)+D
                H2 = MultiPoly.constant(F, 2, A)
                H1 = MultiPoly(F, 2, {(1, 0): B, (0, 1): B, (0, 0): C})
                H0 = MultiPoly(F, 2, {(2, 0): A, (0, 2): A, (1, 1): B,
                                      (1, 0): C, (0, 1): C, (0, 0): D})
                if ideal_contains_one([H0, H1, H2]):
                    total += 1
        return total

    if workers <= 1:
        return count_for_A(range(q)), q ** 4
    from concurrent.futures import ThreadPoolExecutor
    chunks = [range(i, q, workers) for i in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        partial = list(ex.map(count_for_A, chunks))
    return sum(partial), q ** 4
