"""The k-uniform hypergraph of square values of a symmetric polynomial.

Vertices are the field elements; a k-set is an edge exactly when f
evaluates to a square there (zero counts as a square, so the character
value is nonnegative).  Symmetry of f makes the edge predicate
order-free.  For f = x1 + ... + xk this is the Paley graph/hypergraph.

Counting kernels work on the full evaluation grid of f (q^k handles)
with numpy, partitioned along the outermost tuple coordinate so that a
worker count never changes the exact integer results.

The even-partial-octahedron count runs over labeled 2k-tuples of
distinct vertices (u_1(0), u_1(1), ..., u_k(0), u_k(1)) and asks that an
even number of the 2^k octahedron positions {u_1(e_1), ..., u_k(e_k)}
be edges; quasi-randomness predicts q^(2k)/2 of them.  The character-sum
route computes S = sum over all 2k-tuples of prod chi(f(positions)) in a
factored O(q^(2k-1)) form and estimates the count as q^(2k)/2 + S/2.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .errors import (
    ArityMismatch,
    BudgetExceeded,
    DuplicateVertex,
    FieldMismatch,
    NotSymmetric,
    ZeroPolynomial,
)
from .poly import MultiPoly
from .report import CountReport

DEFAULT_TUPLE_BUDGET = 1 << 27
DEFAULT_MEM_BUDGET = 1 << 26  # grid entries, at 8 bytes each


class HypergraphView:
    """Lazy view of Y_{f,q}; edges come from the evaluation grid of f."""

    def __init__(self, field, poly, mem_budget=DEFAULT_MEM_BUDGET):
        self.field = field
        self.poly = poly
        self.k = poly.nvars
        self.mem_budget = mem_budget
        self._grid = None
        self._edge_memo = {}

    @property
    def q(self):
        return self.field.q

    def value_grid(self):
        """Handles of f on F^k; cached. Axis i is variable i."""
        if self._grid is None:
            if self.q ** self.k > self.mem_budget:
                raise BudgetExceeded(
                    "value grid q^k = %d exceeds the memory budget" % self.q ** self.k)
            self._grid = self.poly.eval_grid()
        return self._grid

    def edge_grid(self):
        """Boolean grid: True where f evaluates to a square (0 included)."""
        chi = self.field.chi_array("strict")
        return chi[self.value_grid()] >= 0

    def chi_grid(self, variant="strict"):
        return self.field.chi_array(variant)[self.value_grid()]

    def is_edge(self, vertices):
        """Edge predicate on a k-set given as a sequence of vertices."""
        vs = tuple(vertices)
        if len(vs) != self.k:
            raise ArityMismatch("expected %d vertices" % self.k)
        if len(set(vs)) != self.k:
            raise DuplicateVertex("edge query repeats a vertex: %r" % (vs,))
        for v in vs:
            self.field.check(v)
        key = tuple(sorted(vs))
        if self._grid is not None:
            return bool(self.field.chi_array("strict")[self._grid[key]] >= 0)
        hit = self._edge_memo.get(key)
        if hit is None:
            hit = self.field.is_square(self.poly.eval(key))
            self._edge_memo[key] = hit
        return hit

    def edge_count(self):
        """Unlabeled edges: k-subsets with a square value."""
        if self.q ** self.k <= self.mem_budget:
            eg = self.edge_grid()
            mask = _strictly_increasing_mask(self.q, self.k)
            return int((eg & mask).sum())
        return sum(1 for c in itertools.combinations(range(self.q), self.k)
                   if self.is_edge(c))


def build_hypergraph(field, poly, mem_budget=DEFAULT_MEM_BUDGET):
    """Validated construction of the square-value hypergraph."""
    if poly.field != field:
        raise FieldMismatch("polynomial coefficients live in a different field")
    if poly.nvars < 2:
        raise ArityMismatch("hypergraphs need k >= 2")
    if poly.is_zero:
        raise ZeroPolynomial("the zero polynomial does not define a hypergraph")
    if not poly.is_symmetric():
        raise NotSymmetric("edge predicate needs a symmetric polynomial")
    return HypergraphView(field, poly, mem_budget)


def paley(field, k=2):
    """Hypergraph of x1 + ... + xk; the k = 2 case is the Paley-type graph."""
    f = MultiPoly(field, k, {tuple(int(i == j) for j in range(k)): 1 for i in range(k)})
    return build_hypergraph(field, f)


def _strictly_increasing_mask(q, k):
    m = np.ones((q,) * k, dtype=bool)
    ax = [np.arange(q).reshape((1,) * i + (q,) + (1,) * (k - 1 - i)) for i in range(k)]
    for i in range(k - 1):
        m &= ax[i] < ax[i + 1]
    return m


def _axis_view(arr, lattice_ndim, axis_map):
    """Reshape a k-dim grid so axis i lands on lattice axis axis_map[i].

    axis_map must be strictly increasing, which holds for the embeddings
    used here, so a plain reshape with singleton padding suffices.
    """
    shape = [1] * lattice_ndim
    for src, dst in enumerate(axis_map):
        shape[dst] = arr.shape[src]
    return arr.reshape(shape)


def _worker_chunks(q, workers):
    workers = max(1, min(workers, q))
    bounds = [q * w // workers for w in range(workers + 1)]
    return [(bounds[w], bounds[w + 1]) for w in range(workers)
            if bounds[w] < bounds[w + 1]]


def _run_chunks(fn, chunks, workers):
    if workers <= 1 or len(chunks) <= 1:
        return [fn(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, chunks))


def count_epo_direct(Y, budget=DEFAULT_TUPLE_BUDGET, workers=1):
    """Exact count of even partial octahedra by full enumeration.

    Runs over all q^(2k) labeled tuples (masked to distinct entries),
    with the first coordinate partitioned across workers.  The answer is
    an exact integer, independent of the partitioning.
    """
    k, q = Y.k, Y.q
    if q ** (2 * k) > budget:
        raise BudgetExceeded("q^(2k) = %d exceeds the tuple budget" % q ** (2 * k))
    E = Y.edge_grid().astype(np.uint8)
    ndim = 2 * k

    def chunk_count(bounds):
        lo, hi = bounds
        par = None
        for eps in itertools.product((0, 1), repeat=k):
            axis_map = [2 * i + eps[i] for i in range(k)]
            view = _axis_view(E, ndim, axis_map)
            if axis_map[0] == 0:  # eps_1 = 0: slice the chunked axis
                view = view[lo:hi]
            par = view.copy() if par is None else par ^ view
        dist = None
        coords = []
        for pos in range(ndim):
            base = np.arange(lo, hi) if pos == 0 else np.arange(q)
            coords.append(base.reshape((1,) * pos + (-1,) + (1,) * (ndim - 1 - pos)))
        for i in range(ndim):
            for j in range(i + 1, ndim):
                neq = coords[i] != coords[j]
                dist = neq if dist is None else dist & neq
        return int(((par == 0) & dist).sum(dtype=np.int64))

    parts = _run_chunks(chunk_count, _worker_chunks(q, workers), workers)
    observed = sum(parts)
    return CountReport(observed, Fraction(q ** (2 * k), 2))


def epo_charsum(Y, method="factored", workers=1, budget=DEFAULT_TUPLE_BUDGET):
    """The octahedron character sum S over all q^(2k) labeled tuples.

    S = sum over tuples of prod over the 2^k positions of chi(f(...)).
    The factored form writes the sum over the first coordinate pair as
    the square of an inner univariate character sum, at O(q^(2k-1))
    cost; the naive form is the full lattice product for cross-checks.
    Both are exact integers and agree.
    """
    k, q = Y.k, Y.q
    C = Y.chi_grid("strict").astype(np.int8)
    if method == "naive":
        if q ** (2 * k) > budget:
            raise BudgetExceeded("naive character sum needs q^(2k) = %d cells"
                                 % q ** (2 * k))
        ndim = 2 * k
        prod = None
        for eps in itertools.product((0, 1), repeat=k):
            axis_map = [2 * i + eps[i] for i in range(k)]
            view = _axis_view(C, ndim, axis_map)
            prod = view.astype(np.int64) if prod is None else prod * view
        return int(prod.sum(dtype=np.int64))
    if method != "factored":
        raise ValueError("method must be 'factored' or 'naive'")
    # rest lattice: (u_2(0), u_2(1), ..., u_k(0), u_k(1)); inner axis x = u_1(eps_1)
    rest_ndim = 2 * (k - 1)

    def chunk_sum(bounds):
        lo, hi = bounds
        prod = None
        for eps in itertools.product((0, 1), repeat=k - 1):
            # C axes: 0 -> x (kept in front), i -> rest axis 2(i-1)+eps_(i-1)
            axis_map = [0] + [1 + 2 * i + eps[i] for i in range(k - 1)]
            view = _axis_view(C, 1 + rest_ndim, axis_map)
            if axis_map[1] == 1:  # first rest axis is chunked
                view = view[:, lo:hi]
            prod = view.astype(np.int64) if prod is None else prod * view
        inner = prod.sum(axis=0)
        return int((inner * inner).sum(dtype=np.int64))

    if k == 1:
        raise ArityMismatch("character sum needs k >= 2")
    parts = _run_chunks(chunk_sum, _worker_chunks(q, workers), workers)
    return sum(parts)


def count_epo_charsum(Y, workers=1, method="factored", budget=DEFAULT_TUPLE_BUDGET):
    """CountReport whose observed value is the character-sum estimate.

    estimate = q^(2k)/2 + S/2, reported exactly as a rational alongside
    the predicted main term q^(2k)/2.  The estimate differs from the
    enumerated count by bounded boundary terms (zero values of f and
    repeated coordinates), not by more.
    """
    k, q = Y.k, Y.q
    S = epo_charsum(Y, method=method, workers=workers, budget=budget)
    estimate = Fraction(q ** (2 * k), 2) + Fraction(S, 2)
    return {
        "S": S,
        "estimate": estimate,
        "predicted_main": Fraction(q ** (2 * k), 2),
        "deviation": Fraction(S, 2),
    }


class Pattern:
    """A k-uniform pattern hypergraph on vertices 0..nverts-1."""

    def __init__(self, nverts, k, edges):
        self.nverts = nverts
        self.k = k
        self.edges = frozenset(frozenset(e) for e in edges)
        for e in self.edges:
            if len(e) != k or not all(0 <= v < nverts for v in e):
                raise ArityMismatch("bad pattern edge %r" % (sorted(e),))

    @classmethod
    def single_edge(cls, k):
        return cls(k, k, [range(k)])

    @classmethod
    def empty(cls, nverts, k):
        return cls(nverts, k, [])

    @classmethod
    def complete(cls, nverts, k):
        return cls(nverts, k, itertools.combinations(range(nverts), k))

    @classmethod
    def path3(cls):
        """Two adjacent edges on three vertices, k = 2."""
        return cls(3, 2, [(0, 1), (1, 2)])


def count_labeled_induced(Y, pattern, budget=DEFAULT_TUPLE_BUDGET):
    """Labeled induced copies: injective maps matching edges exactly.

    Predicted main term q^s / 2^C(s,k) for a pattern on s vertices.
    """
    if pattern.k != Y.k:
        raise ArityMismatch("pattern uniformity differs from the hypergraph")
    s = pattern.nverts
    q = Y.q
    total_maps = 1
    for i in range(s):
        total_maps *= q - i
    if total_maps < 0:
        total_maps = 0
    if total_maps > budget:
        raise BudgetExceeded("q!/(q-s)! = %d injective maps exceed the budget" % total_maps)
    subsets = list(itertools.combinations(range(s), Y.k))
    want = [frozenset(sub) in pattern.edges for sub in subsets]
    eg = Y.edge_grid()
    observed = 0
    for image in itertools.permutations(range(q), s):
        ok = True
        for sub, w in zip(subsets, want):
            idx = tuple(image[v] for v in sub)
            if bool(eg[idx]) != w:
                ok = False
                break
        if ok:
            observed += 1
    predicted = Fraction(q ** s, 2 ** comb(s, Y.k))
    return CountReport(observed, predicted)


def _msubsets_k2(Y, m, workers):
    """Clique-of-size-m count for graphs via vertex bitsets."""
    q = Y.q
    eg = Y.edge_grid()
    adj = []
    for a in range(q):
        row = 0
        for b in range(q):
            if b != a and eg[a, b]:
                row |= 1 << b
        adj.append(row)
    above = [(~((1 << (v + 1)) - 1)) & ((1 << q) - 1) for v in range(q)]

    def rec(cand, depth):
        if depth == m:
            return 1
        total = 0
        c = cand
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            if depth + 1 == m:
                total += 1
            else:
                total += rec(cand & adj[v] & above[v], depth + 1)
        return total

    def start_count(bounds):
        lo, hi = bounds
        total = 0
        for v in range(lo, hi):
            if m == 1:
                total += 1
            else:
                total += rec(adj[v] & above[v], 1)
        return total

    parts = _run_chunks(start_count, _worker_chunks(q, workers), workers)
    return sum(parts)


def _msubsets_generic(Y, m, workers):
    k, q = Y.k, Y.q
    eg = Y.edge_grid()

    def extensions(chosen, start):
        out = []
        for v in range(start, q):
            ok = True
            if len(chosen) >= k - 1:
                for sub in itertools.combinations(chosen, k - 1):
                    if not eg[tuple(sorted(sub + (v,)))]:
                        ok = False
                        break
            if ok:
                out.append(v)
        return out

    def rec(chosen, start):
        if len(chosen) == m:
            return 1
        total = 0
        for v in extensions(chosen, start):
            total += rec(chosen + (v,), v + 1)
        return total

    def start_count(bounds):
        lo, hi = bounds
        return sum(rec((v,), v + 1) for v in range(lo, hi))

    if m == 0:
        return 1
    parts = _run_chunks(start_count, _worker_chunks(q, workers), workers)
    return sum(parts)


def count_m_subsets(Y, m, workers=1, budget=DEFAULT_TUPLE_BUDGET, with_envelope=True):
    """m-subsets of vertices all of whose k-subsets are edges.

    Predicted main term q^m / (m! * 2^C(m,k)); the envelope, when
    requested, is the two-term error bound from the tuple-count
    asymptotic with the polynomial's degree.
    """
    if m < Y.k:
        raise ArityMismatch("m must be at least the uniformity k")
    q = Y.q
    if comb(q, m) > budget:
        raise BudgetExceeded("C(q, m) = %d subsets exceed the budget" % comb(q, m))
    if m > q:
        observed = 0
    elif Y.k == 2:
        observed = _msubsets_k2(Y, m, workers)
    else:
        observed = _msubsets_generic(Y, m, workers)
    predicted = Fraction(q ** m, factorial(m) * 2 ** comb(m, Y.k))
    envelope = None
    if with_envelope:
        from .bounds import predict_envelope
        envelope = predict_envelope(q, m, Y.k, Y.poly.total_degree).err
    return CountReport(observed, predicted, envelope)


def omega_clique(Y, node_budget=10 ** 7):
    """Largest vertex set all of whose k-subsets are edges.

    Branch and bound over vertices in descending degree-score order;
    returns (omega, exact) where exact=False means the budget ran out
    and the value is only a lower bound.  Sets smaller than k are
    vacuously complete, so omega >= min(q, k-1) always.
    """
    k, q = Y.k, Y.q
    eg = Y.edge_grid()
    mask = _strictly_increasing_mask(q, k)
    hits = eg & mask
    score = [0] * q
    for idx in zip(*np.nonzero(hits)):
        for v in idx:
            score[int(v)] += 1
    order = sorted(range(q), key=lambda v: (-score[v], v))
    rank = {v: i for i, v in enumerate(order)}

    best = min(q, k - 1)
    nodes = 0
    exact = True

    def compatible(chosen, v):
        if len(chosen) < k - 1:
            return True
        for sub in itertools.combinations(chosen, k - 1):
            if not eg[tuple(sorted(sub + (v,)))]:
                return False
        return True

    def rec(chosen, cands):
        nonlocal best, nodes, exact
        nodes += 1
        if nodes > node_budget:
            exact = False
            return
        if len(chosen) > best:
            best = len(chosen)
        if len(chosen) + len(cands) <= best:
            return
        for i, v in enumerate(cands):
            if len(chosen) + (len(cands) - i) <= best:
                return
            if compatible(chosen, v):
                nxt = [w for w in cands[i + 1:] if compatible(chosen + (v,), w)]
                rec(chosen + (v,), nxt)
            if not exact:
                return

    rec(tuple(), order)
    return best, exact
