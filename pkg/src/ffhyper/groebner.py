"""Ideal membership of 1 via Buchberger, plus brute-force zero search.

The primitivity side of admissibility asks whether the coefficient
polynomials of an expansion share a common zero over the algebraic
closure; by the weak Nullstellensatz that happens exactly when the ideal
they generate is proper, so the decision reduces to whether a reduced
Groebner basis equals {1}.  Computation runs under graded reverse lex
with the product and chain criteria for pair pruning; returned bases are
normalized to leading coefficient 1 under graded lex.

``common_zero_search`` is the decorative counterpart: an exhaustive
witness hunt over small-degree extensions, embedding the base field by
locating a root of its modulus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ArityMismatch, EmptyGenerators, FieldMismatch
from .field import Field
from .poly import MultiPoly, grevlex_key


def _divides_exp(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm_exp(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _spoly(f, g, F, nvars):
    """S-polynomial of two grevlex-monic polynomials."""
    lf = f.lead_exp(grevlex_key)
    lg = g.lead_exp(grevlex_key)
    l = _lcm_exp(lf, lg)
    sf = tuple(a - b for a, b in zip(l, lf))
    sg = tuple(a - b for a, b in zip(l, lg))
    return f.shift_mul(sf, 1) - g.shift_mul(sg, 1)


def _normal_form(f, basis):
    """Full remainder of f modulo a list of grevlex-monic polynomials."""
    F = f.field
    rem = {}
    work = dict(f.terms)
    leads = [(g.lead_exp(grevlex_key), g) for g in basis]
    while work:
        e = max(work, key=grevlex_key)
        c = work.pop(e)
        for le, g in leads:
            if _divides_exp(le, e):
                shift = tuple(a - b for a, b in zip(e, le))
                for ge, gc in g.terms.items():
                    ne = tuple(a + b for a, b in zip(shift, ge))
                    if ne == e:
                        continue
                    s = F.sub(work.get(ne, 0), F.mul(c, gc))
                    if s:
                        work[ne] = s
                    else:
                        work.pop(ne, None)
                break
        else:
            rem[e] = c
    return MultiPoly(F, f.nvars, rem)


def buchberger(gens):
    """Reduced Groebner basis under graded reverse lex.

    Zero generators are dropped; a nonzero constant anywhere collapses
    the basis to [1] immediately.
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise EmptyGenerators("no nonzero generators")
    F = gens[0].field
    nvars = gens[0].nvars
    for g in gens:
        if g.field != F:
            raise FieldMismatch("generators live in different fields")
        if g.nvars != nvars:
            raise ArityMismatch("generators have different arities")
    one = MultiPoly.constant(F, nvars, 1)
    basis = []
    for g in gens:
        if g.is_constant:
            return [one]
        basis.append(g.monic(grevlex_key))

    leads = [g.lead_exp(grevlex_key) for g in basis]
    pending = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def chain_skippable(i, j):
        l = _lcm_exp(leads[i], leads[j])
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides_exp(leads[k], l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    return True
        return False

    while pending:
        # normal selection: smallest lcm first
        i, j = min(pending, key=lambda p: (grevlex_key(_lcm_exp(leads[p[0]], leads[p[1]])), p))
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        l = _lcm_exp(li, lj)
        if l == tuple(a + b for a, b in zip(li, lj)):
            continue  # product criterion: coprime leading monomials
        if chain_skippable(i, j):
            continue
        h = _normal_form(_spoly(basis[i], basis[j], F, nvars), basis)
        if h.is_zero:
            continue
        if h.is_constant:
            return [one]
        h = h.monic(grevlex_key)
        basis.append(h)
        leads.append(h.lead_exp(grevlex_key))
        t = len(basis) - 1
        pending.update((s, t) for s in range(t))

    # minimalize: drop members whose lead is divisible by another lead
    keep = []
    for i, g in enumerate(basis):
        if any(t != i and _divides_exp(leads[t], leads[i])
               and (leads[t] != leads[i] or t < i) for t in range(len(basis))):
            continue
        keep.append(g)
    # inter-reduce and normalize under graded lex
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = _normal_form(g, others) if others else g
        if not r.is_zero:
            reduced.append(r.monic())
    reduced.sort(key=lambda g: grevlex_key(g.lead_exp(grevlex_key)))
    return reduced


def ideal_contains_one(gens):
    """Whether the generated ideal is the whole ring.

    Equivalent, over the algebraic closure, to the generators having no
    common zero.  All-zero generator lists give False.
    """
    if not gens:
        raise EmptyGenerators("no generators")
    live = [g for g in gens if not g.is_zero]
    if not live:
        return False
    if any(g.is_constant for g in live):
        return True
    basis = buchberger(live)
    return len(basis) == 1 and basis[0].is_constant


@dataclass(frozen=True)
class Witness:
    """A common zero found in an extension of the coefficient field."""

    ext_degree: int
    point: tuple
    field: Field

    def to_json(self):
        return {"ext_degree": self.ext_degree, "point": list(self.point)}


def embed_field(F, e):
    """Extension of degree e together with the embedding map on handles.

    For e = 1 this is the identity.  Otherwise the embedding sends the
    residue class of x to a root of F's modulus in the bigger field
    (the first root in element order), extended linearly.
    """
    if e == 1:
        return F, lambda x: x
    G = Field(F.p, F.n * e)
    if F.n == 1:
        return G, lambda x: x  # prime subfield handles coincide
    root = None
    for cand in G.elements():
        acc = 0
        for c in reversed(F.modulus):
            acc = G.add(G.mul(acc, cand), c)
        if acc == 0:
            root = cand
            break
    if root is None:
        raise ArithmeticError("modulus has no root in the extension")

    def phi(x):
        acc = 0
        for c in reversed(F.coeffs(x)):
            acc = G.add(G.mul(acc, root), c)
        return acc

    return G, phi


def _map_poly(f, G, phi):
    return MultiPoly(G, f.nvars, {e: phi(c) for e, c in f.terms.items()})


def common_zero_search(gens, max_ext_degree=2):
    """First common zero over F_{q^e} for e = 1..max_ext_degree, or None.

    Points are scanned in the canonical element order, so the returned
    witness is deterministic.  A None result is inconclusive: it only
    says no zero exists in the searched extensions.
    """
    if not gens:
        raise EmptyGenerators("no generators")
    live = [g for g in gens if not g.is_zero]
    if not live:
        # everything vanishes everywhere; report the origin
        F = gens[0].field
        return Witness(1, (0,) * gens[0].nvars, F)
    if any(g.is_constant for g in live):
        return None
    F = live[0].field
    nvars = live[0].nvars
    for e in range(1, max_ext_degree + 1):
        G, phi = embed_field(F, e)
        mapped = [_map_poly(g, G, phi) for g in live]
        for point in itertools.product(G.elements(), repeat=nvars):
            if all(m.eval(point) == 0 for m in mapped):
                return Witness(e, point, G)
    return None
