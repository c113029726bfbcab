"""Simple graphs and signed graphs: parsing, classification, switching, balance,
and the subgraph machinery everything else is built on.

Vertices are dense integers 0..n-1.  Edges are unordered pairs stored as
(min, max) tuples, kept in input order.  Both graph types are frozen and
hashable so spectral results can be memoised on them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import GraphParseError, PreconditionError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: tuple

    def __post_init__(self):
        edges = tuple((u, v) if u <= v else (v, u) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def edge_index(self, e) -> int:
        u, v = min(e), max(e)
        try:
            return self.edges.index((u, v))
        except ValueError:
            raise PreconditionError(f"({u},{v}) is not an edge") from None


@dataclass(frozen=True)
class SignedGraph:
    """Graph together with a +1/-1 sign per edge, in edge order."""

    graph: Graph
    signs: tuple

    def __post_init__(self):
        signs = tuple(self.signs)
        object.__setattr__(self, "signs", signs)
        if len(signs) != self.graph.m:
            raise ValueError("need exactly one sign per edge")
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")


class GraphClass(Enum):
    TREE = "Tree"
    ODD_UNICYCLIC = "OddUnicyclic"
    BIPARTITE_NON_TREE = "BipartiteNonTree"
    GENERAL = "General"


def all_positive(g: Graph) -> SignedGraph:
    return SignedGraph(g, (1,) * g.m)


def all_negative(g: Graph) -> SignedGraph:
    return SignedGraph(g, (-1,) * g.m)


def negate(sg: SignedGraph) -> SignedGraph:
    return SignedGraph(sg.graph, tuple(-s for s in sg.signs))


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a Graph.

    Format: one "u v" pair per line; lines starting with '#' (and blank
    lines) are ignored.  An optional first line "n m" declares the vertex
    count; it is recognised as a header only when m equals the number of
    edge lines that follow, n covers every label used, and at least one
    edge line follows.  Without a header, n is 1 + the largest label.
    Self-loops, duplicate edges, and malformed tokens are errors that name
    the offending line.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two tokens, got {len(parts)}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"malformed token in {parts!r}", lineno) from None
        if a < 0 or b < 0:
            raise GraphParseError("vertex labels must be nonnegative", lineno)
        rows.append((lineno, a, b))

    if not rows:
        raise GraphParseError("no edges found", None)

    header_n = None
    first_line, a0, b0 = rows[0]
    rest = rows[1:]
    if rest and b0 == len(rest):
        max_label = max(max(a, b) for _, a, b in rest)
        if a0 >= max_label + 1:
            header_n = a0
            rows = rest

    edges = []
    seen = set()
    for lineno, a, b in rows:
        if a == b:
            raise GraphParseError(f"self-loop at vertex {a}", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphParseError(f"duplicate edge ({key[0]},{key[1]})", lineno)
        seen.add(key)
        edges.append(key)

    n = header_n if header_n is not None else 1 + max(max(e) for e in edges)
    return Graph(n, tuple(edges))


@lru_cache(maxsize=None)
def adjacency_lists(g: Graph) -> tuple:
    """Neighbour lists as a tuple of tuples of (neighbour, edge index)."""
    adj = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    return tuple(tuple(row) for row in adj)


def adjacency_matrix(g: Graph) -> list:
    a = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        a[u][v] = a[v][u] = 1
    return a


def signed_adjacency_matrix(sg: SignedGraph) -> list:
    a = [[0] * sg.graph.n for _ in range(sg.graph.n)]
    for (u, v), s in zip(sg.graph.edges, sg.signs):
        a[u][v] = a[v][u] = s
    return a


def components(g: Graph) -> list:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    adj = adjacency_lists(g)
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def is_bipartite(g: Graph) -> bool:
    adj = adjacency_lists(g)
    colour = [None] * g.n
    for s in range(g.n):
        if colour[s] is not None:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in adj[v]:
                if colour[w] is None:
                    colour[w] = colour[v] ^ 1
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def classify(g: Graph) -> GraphClass:
    """Classify a connected graph as Tree / OddUnicyclic / BipartiteNonTree / General."""
    if not is_connected(g):
        raise PreconditionError("classify requires a connected graph")
    if g.m == g.n - 1:
        return GraphClass.TREE
    if g.m == g.n and not is_bipartite(g):
        return GraphClass.ODD_UNICYCLIC
    if is_bipartite(g):
        return GraphClass.BIPARTITE_NON_TREE
    return GraphClass.GENERAL


def spanning_tree_edges(g: Graph) -> tuple:
    """Edge indices of the BFS spanning forest rooted at the lowest vertices."""
    adj = adjacency_lists(g)
    seen = [False] * g.n
    tree = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, ei in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    tree.append(ei)
                    queue.append(w)
    return tuple(sorted(tree))


def switch(sg: SignedGraph, s) -> SignedGraph:
    """Flip the sign of every edge with exactly one endpoint in the vertex set s."""
    s = set(s)
    for v in s:
        if not (0 <= v < sg.graph.n):
            raise PreconditionError(f"vertex {v} out of range")
    signs = tuple(
        -sign if ((u in s) != (v in s)) else sign
        for (u, v), sign in zip(sg.graph.edges, sg.signs)
    )
    return SignedGraph(sg.graph, signs)


def is_balanced(sg: SignedGraph):
    """Decide balance of a connected signed graph.

    Returns (True, potentials) where potentials is a +-1 vector with
    d[u]*sign(u,v)*d[v] = +1 on every edge, or (False, None).  The witness
    is built by spanning-tree propagation with vertex 0 fixed to +1.
    """
    g = sg.graph
    if not is_connected(g):
        raise PreconditionError("balance test requires a connected graph")
    adj = adjacency_lists(g)
    pot = [0] * g.n
    pot[0] = 1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w, ei in adj[v]:
            if pot[w] == 0:
                pot[w] = pot[v] * sg.signs[ei]
                queue.append(w)
    for (u, v), sign in zip(g.edges, sg.signs):
        if pot[u] * sign * pot[v] != 1:
            return False, None
    return True, tuple(pot)


def is_antibalanced(sg: SignedGraph):
    """Balance of the sign-negated graph: equivalence to the all-negative signing."""
    return is_balanced(negate(sg))


def connected_edge_subsets(g: Graph, max_edges: int) -> list:
    """All nonempty edge-index subsets, of size <= max_edges, spanning a connected subgraph.

    Subsets are returned as sorted index tuples in ascending bitmask order,
    each exactly once.
    """
    if max_edges < 1:
        raise PreconditionError("max_edges must be >= 1")
    if g.m > 20:
        raise PreconditionError("edge subset enumeration capped at 20 edges")
    out = []
    for mask in range(1, 1 << g.m):
        idxs = [i for i in range(g.m) if mask >> i & 1]
        if len(idxs) > max_edges:
            continue
        if _edges_span_connected(g, idxs):
            out.append(tuple(idxs))
    return out


def _edges_span_connected(g, idxs):
    verts = set()
    for i in idxs:
        verts.update(g.edges[i])
    first = next(iter(verts))
    adj = {v: [] for v in verts}
    for i in idxs:
        u, v = g.edges[i]
        adj[u].append(v)
        adj[v].append(u)
    seen = {first}
    queue = deque([first])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(verts)


def edge_subgraph(g: Graph, idxs):
    """Subgraph spanned by the given edge indices, compactly relabelled.

    Isolated vertices are dropped.  Returns (subgraph, vmap) where vmap
    maps old labels to new ones.
    """
    verts = sorted({v for i in idxs for v in g.edges[i]})
    vmap = {v: j for j, v in enumerate(verts)}
    edges = tuple((vmap[g.edges[i][0]], vmap[g.edges[i][1]]) for i in sorted(idxs))
    return Graph(len(verts), edges), vmap


def delete_edge(g: Graph, e) -> Graph:
    i = g.edge_index(e)
    return Graph(g.n, g.edges[:i] + g.edges[i + 1 :])


def delete_vertex(g: Graph, v: int):
    """Remove a vertex, relabel compactly, and return (graph, old-to-new map)."""
    if not (0 <= v < g.n):
        raise PreconditionError(f"vertex {v} out of range")
    if g.n == 1:
        raise PreconditionError("cannot delete the only vertex")
    vmap = {u: (u if u < v else u - 1) for u in range(g.n) if u != v}
    edges = tuple(
        (vmap[a], vmap[b]) for a, b in g.edges if a != v and b != v
    )
    return Graph(g.n - 1, edges), vmap


def is_cut_edge(g: Graph, e) -> bool:
    u, v = min(e), max(e)
    h = delete_edge(g, (u, v))
    comp_of = {}
    for ci, comp in enumerate(components(h)):
        for w in comp:
            comp_of[w] = ci
    return comp_of[u] != comp_of[v]
