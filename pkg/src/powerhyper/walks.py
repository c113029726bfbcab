"""Exact integer counting of parity-closed walks.

A parity-closed walk is a closed walk using every edge an even number of
times; the covering variant must also touch every edge at least once.
Counts are computed by dynamic programming over (vertex, per-edge parity
bitmask) states, summed over all start vertices (the trace convention),
with arbitrary-precision integers throughout.  DP state is cached per
graph and extended on demand, so repeated queries at growing lengths
reuse earlier steps.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from itertools import product
from operator import mul

from .errors import PreconditionError
from .graphs import Graph, adjacency_lists, is_connected

PARITY_EDGE_CAP = 20
COVERING_EDGE_CAP = 10
SIGNED_EDGE_CAP = 12


class _WalkDP:
    """Per-start parity DP, optionally tracking the touched-edge mask.

    State extension is guarded by a lock so the shared cache stays safe
    under concurrent queries.
    """

    def __init__(self, g, covering):
        self.covering = covering
        self.trans = adjacency_lists(g)
        self.full = (1 << g.m) - 1
        if covering:
            self.states = [{(s, 0, 0): 1} for s in range(g.n)]
        else:
            self.states = [{(s, 0): 1} for s in range(g.n)]
        self.starts = list(range(g.n))
        self.counts = []
        self._lock = threading.Lock()

    def count(self, d):
        with self._lock:
            return self._extend(d)

    def _extend(self, d):
        while len(self.counts) < d:
            total = 0
            for s in self.starts:
                nxt = {}
                get = nxt.get
                if self.covering:
                    for (v, parity, touched), c in self.states[s].items():
                        for w, ei in self.trans[v]:
                            bit = 1 << ei
                            key = (w, parity ^ bit, touched | bit)
                            nxt[key] = get(key, 0) + c
                    self.states[s] = nxt
                    total += nxt.get((s, 0, self.full), 0)
                else:
                    for (v, parity), c in self.states[s].items():
                        for w, ei in self.trans[v]:
                            key = (w, parity ^ (1 << ei))
                            nxt[key] = get(key, 0) + c
                    self.states[s] = nxt
                    total += nxt.get((s, 0), 0)
            self.counts.append(total)
        return self.counts[d - 1]


_parity_cache = {}
_covering_cache = {}


def parity_closed_walks(g: Graph, d: int) -> int:
    """Closed walks of length d using every edge an even number of times."""
    if d < 1:
        raise PreconditionError("walk length must be >= 1")
    if g.m > PARITY_EDGE_CAP:
        raise PreconditionError(f"parity walk DP capped at {PARITY_EDGE_CAP} edges")
    if d % 2:
        return 0
    dp = _parity_cache.get(g)
    if dp is None:
        dp = _parity_cache[g] = _WalkDP(g, covering=False)
    return dp.count(d)


def covering_parity_closed_walks(g: Graph, d: int) -> int:
    """Parity-closed walks of length d that use every edge at least once."""
    if d < 1:
        raise PreconditionError("walk length must be >= 1")
    if not is_connected(g):
        raise PreconditionError("covering walks require a connected graph")
    if g.m > COVERING_EDGE_CAP:
        raise PreconditionError(f"covering walk DP capped at {COVERING_EDGE_CAP} edges")
    if d % 2 or d < 2 * g.m:
        return 0
    dp = _covering_cache.get(g)
    if dp is None:
        dp = _covering_cache[g] = _WalkDP(g, covering=True)
    return dp.count(d)


def _mat_mul(a, b):
    cols = list(zip(*b))
    return [[sum(map(mul, row, col)) for col in cols] for row in a]


def _pow_trace(a, d):
    # left-to-right square and multiply, exact ints
    result = None
    for bit in bin(d)[2:]:
        result = a if result is None else _mat_mul(result, result)
        if bit == "1" and result is not a:
            result = _mat_mul(result, a)
    return sum(result[i][i] for i in range(len(a)))


def signed_moment_average(g: Graph, d: int) -> Fraction:
    """Average of trace(A^d) over all 2^m signings of g, exactly.

    Enumerates every sign pattern and takes integer matrix powers; the
    result is returned as an exact rational (it is integral whenever the
    parity-walk identity applies).
    """
    if d < 1:
        raise PreconditionError("moment order must be >= 1")
    if g.m > SIGNED_EDGE_CAP:
        raise PreconditionError(f"signing enumeration capped at {SIGNED_EDGE_CAP} edges")
    n = g.n
    total = 0
    base = [[0] * n for _ in range(n)]
    for signs in product((1, -1), repeat=g.m):
        for (u, v), s in zip(g.edges, signs):
            base[u][v] = base[v][u] = s
        total += _pow_trace(base, d)
    return Fraction(total, 1 << g.m)


def walk_ratio_series(g: Graph, ell_max: int) -> list:
    """Prefix of covering-count ratios p(2*ell) / rho^(2*ell), ell = 1..ell_max.

    Convergence diagnostic: the sequence tends to 2^(n - m).  Ratios are
    returned as floats since the spectral radius is irrational in general;
    exact numerators come from covering_parity_closed_walks.
    """
    from .spectra import spectral_radius

    if not is_connected(g):
        raise PreconditionError("ratio series requires a connected graph")
    if g.m < 1:
        raise PreconditionError("ratio series needs at least one edge")
    if ell_max < 1:
        raise PreconditionError("ell_max must be >= 1")
    rho_sq = spectral_radius(g) ** 2
    out = []
    for ell in range(1, ell_max + 1):
        p = covering_parity_closed_walks(g, 2 * ell)
        out.append(p / rho_sq**ell)
    return out
