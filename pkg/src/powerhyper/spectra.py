"""Dense symmetric eigensolver and every signed/unsigned spectral quantity:
spectral radii, deletion radii, weakest edges, and switching-class extremes.

The eigensolver is a cyclic Jacobi sweep: plane rotations annihilate one
off-diagonal entry at a time until the off-diagonal Frobenius mass drops
below 1e-13 of its initial value.  Inputs here are tiny integral matrices,
so a handful of sweeps always suffices; a hard cap of 100 sweeps guards
against misuse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConvergenceError, InternalInconsistencyError, PreconditionError
from .graphs import (
    Graph,
    SignedGraph,
    adjacency_matrix,
    is_antibalanced,
    is_balanced,
    is_connected,
    signed_adjacency_matrix,
    spanning_tree_edges,
)

SYMMETRY_TOL = 1e-12
OFF_DIAGONAL_TARGET = 1e-13
MAX_SWEEPS = 100
TIE_TOL = 1e-9


def _off_norm(a, n):
    return math.sqrt(2.0 * sum(a[i][j] * a[i][j] for i in range(n) for j in range(i + 1, n)))


def _jacobi(matrix, want_vectors=False):
    n = len(matrix)
    a = [[float(matrix[i][j]) for j in range(n)] for i in range(n)]
    for row in a:
        if len(row) != n:
            raise PreconditionError("matrix must be square")
    for i in range(n):
        for j in range(i + 1, n):
            if abs(a[i][j] - a[j][i]) > SYMMETRY_TOL:
                raise PreconditionError(f"matrix not symmetric at ({i},{j})")
    v = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)] if want_vectors else None
    if n == 1:
        return [a[0][0]], v

    off0 = _off_norm(a, n)
    if off0 == 0.0:
        return [a[i][i] for i in range(n)], v
    target = OFF_DIAGONAL_TARGET * off0

    for _ in range(MAX_SWEEPS):
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p][p], a[q][q]
                a[p][p] = app - t * apq
                a[q][q] = aqq + t * apq
                a[p][q] = a[q][p] = 0.0
                for i in range(n):
                    if i != p and i != q:
                        aip, aiq = a[i][p], a[i][q]
                        a[i][p] = a[p][i] = c * aip - s * aiq
                        a[i][q] = a[q][i] = s * aip + c * aiq
                if want_vectors:
                    for i in range(n):
                        vip, viq = v[i][p], v[i][q]
                        v[i][p] = c * vip - s * viq
                        v[i][q] = s * vip + c * viq
        if _off_norm(a, n) < target:
            return [a[i][i] for i in range(n)], v
    raise ConvergenceError(f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps")


def sym_eig(matrix):
    """Eigenvalues of a real symmetric matrix, sorted ascending."""
    vals, _ = _jacobi(matrix)
    return tuple(sorted(vals))


def sym_eig_vectors(matrix):
    """Eigenvalues ascending plus matching unit eigenvectors (as row tuples)."""
    vals, v = _jacobi(matrix, want_vectors=True)
    n = len(vals)
    order = sorted(range(n), key=lambda i: vals[i])
    vectors = tuple(tuple(v[i][j] for i in range(n)) for j in order)
    return tuple(vals[j] for j in order), vectors


@lru_cache(maxsize=None)
def spectrum(obj):
    """Adjacency spectrum of a Graph or SignedGraph, ascending."""
    if isinstance(obj, SignedGraph):
        return sym_eig(signed_adjacency_matrix(obj))
    return sym_eig(adjacency_matrix(obj))


def spectral_radius(obj) -> float:
    """max(|lambda_1|, |lambda_n|); disconnected inputs give the max over components."""
    vals = spectrum(obj)
    return max(abs(vals[0]), abs(vals[-1]))


def lambda_max(obj) -> float:
    return spectrum(obj)[-1]


def lambda_min(obj) -> float:
    return spectrum(obj)[0]


def lambda_second(obj) -> float:
    vals = spectrum(obj)
    if len(vals) < 2:
        raise PreconditionError("second-largest eigenvalue needs n >= 2")
    return vals[-2]


def rho_vertex_deleted(g: Graph) -> float:
    """Largest spectral radius over all single-vertex deletions."""
    from .graphs import delete_vertex

    if not is_connected(g):
        raise PreconditionError("vertex-deletion radius requires a connected graph")
    if g.n < 2:
        raise PreconditionError("vertex-deletion radius needs n >= 2")
    return max(spectral_radius(delete_vertex(g, v)[0]) for v in range(g.n))


def rho_edge_deleted(g: Graph) -> float:
    """Largest spectral radius over all single-edge deletions."""
    return weakest_edges(g).rho


@dataclass
class WeakestEdgeReport:
    """Edges whose removal lowers the spectral radius the least.

    rho is max_e spectral_radius(g - e); edges lists every (edge, delta)
    attaining it within the tie tolerance, delta = 0 for pendant edges and
    1 otherwise; rho_per_edge records spectral_radius(g - e) for all edges.
    """

    rho: float
    edges: tuple
    rho_per_edge: dict

    @property
    def n_pendant(self) -> int:
        return sum(1 for _, d in self.edges if d == 0)

    @property
    def n_internal(self) -> int:
        return sum(1 for _, d in self.edges if d == 1)


def weakest_edges(g: Graph, tie_tol: float = TIE_TOL) -> WeakestEdgeReport:
    from .graphs import delete_edge

    if not is_connected(g):
        raise PreconditionError("weakest edges require a connected graph")
    if g.m < 2:
        raise PreconditionError("weakest edges need at least two edges")
    per_edge = {e: spectral_radius(delete_edge(g, e)) for e in g.edges}
    top = max(per_edge.values())
    winners = tuple(
        (e, 0 if min(g.degree(e[0]), g.degree(e[1])) == 1 else 1)
        for e in g.edges
        if per_edge[e] >= top - tie_tol
    )
    return WeakestEdgeReport(rho=top, edges=winners, rho_per_edge=per_edge)


def switching_classes(g: Graph):
    """One representative signing per switching class of a connected graph.

    Gauge: +1 on a BFS spanning tree, all sign patterns on the remaining
    edges.  A connected graph has exactly 2^(m - n + 1) classes.
    """
    if not is_connected(g):
        raise PreconditionError("switching classes require a connected graph")
    tree = set(spanning_tree_edges(g))
    free = [i for i in range(g.m) if i not in tree]
    for bits in range(1 << len(free)):
        signs = [1] * g.m
        for j, ei in enumerate(free):
            if bits >> j & 1:
                signs[ei] = -1
        yield SignedGraph(g, tuple(signs))


def rho_unbalanced(g: Graph):
    """Largest spectral radius among switching classes strictly below spectral_radius(g).

    Classes attaining the graph radius are exactly the balanced and
    antibalanced ones; that agreement is asserted.  Returns None when every
    class attains it (trees and odd-unicyclic graphs).
    """
    if not is_connected(g):
        raise PreconditionError("switching-class radius requires a connected graph")
    rho = spectral_radius(g)
    best = None
    for sg in switching_classes(g):
        r = spectral_radius(sg)
        attains = r >= rho - TIE_TOL
        extremal = is_balanced(sg)[0] or is_antibalanced(sg)[0]
        if attains != extremal:
            raise InternalInconsistencyError(
                "numeric radius comparison disagrees with the balance test"
            )
        if not attains and (best is None or r > best):
            best = r
    return best


def perron_pair(g: Graph):
    """Spectral radius of a connected graph with its positive eigenvector.

    The vector is scaled so its largest entry is 1.
    """
    if not is_connected(g):
        raise PreconditionError("Perron pair requires a connected graph")
    vals, vecs = sym_eig_vectors(adjacency_matrix(g))
    rho = vals[-1]
    vec = list(vecs[-1])
    top = max(vec, key=abs)
    if top < 0:
        vec = [-x for x in vec]
    if g.n > 1 and min(vec) <= 0.0:
        raise InternalInconsistencyError("Perron vector of a connected graph must be positive")
    scale = max(vec)
    return rho, tuple(x / scale for x in vec)
