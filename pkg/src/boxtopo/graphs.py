"""Finite simple graphs: generators, coloring, and the complex-to-graph map.

Vertices are always 0..n-1.  Connectivity is not required anywhere; all
constructions are well-defined without it.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .simplicial import Z2Complex

Edge = tuple[int, int]


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj")

    n: int
    edges: frozenset[Edge]
    adj: tuple[frozenset[int], ...]

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon: set[Edge] = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            canon.add((min(u, v), max(u, v)))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))
        object.__setattr__(self, "adj", tuple(frozenset(a) for a in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(a) for a in self.adj))

    def descriptor(self) -> str:
        return f"n{self.n}:" + ",".join(f"{u}-{v}" for u, v in sorted(self.edges))


def common_neighbors(G: Graph, A: Iterable[int]) -> frozenset[int]:
    """Vertices adjacent to every member of A; all of V(G) when A is empty."""
    A = set(A)
    if not A.issubset(range(G.n)):
        raise ValueError("vertex out of range")
    out: set[int] | frozenset[int] = set(range(G.n))
    for a in A:
        out &= G.adj[a]
    return frozenset(out)


def is_complete_bipartite_between(G: Graph, A: Iterable[int], B: Iterable[int]) -> bool:
    """True iff every cross pair a-b is an edge; vacuously true on empty sides."""
    A, B = set(A), set(B)
    if A & B:
        raise ValueError("shores must be disjoint")
    return all(b in G.adj[a] for a in A for b in B)


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in G.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == G.n


# ---------------------------------------------------------------------------
# Exact chromatic number
# ---------------------------------------------------------------------------

def greedy_clique_lower_bound(G: Graph) -> int:
    """Size of a greedily grown clique; a valid lower bound for chi."""
    best = 1 if G.n else 0
    for start in range(G.n):
        clique = {start}
        candidates = set(G.adj[start])
        while candidates:
            v = max(candidates, key=lambda x: (len(G.adj[x] & candidates), -x))
            clique.add(v)
            candidates &= G.adj[v]
        best = max(best, len(clique))
    return best


def dsatur_upper_bound(G: Graph) -> tuple[int, list[int]]:
    """DSATUR greedy coloring; returns (color count, coloring)."""
    colors = [-1] * G.n
    neighbor_colors: list[set[int]] = [set() for _ in range(G.n)]
    uncolored = set(range(G.n))
    while uncolored:
        v = max(uncolored, key=lambda u: (len(neighbor_colors[u]), len(G.adj[u]), -u))
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        uncolored.discard(v)
        for w in G.adj[v]:
            if colors[w] == -1:
                neighbor_colors[w].add(c)
    return (max(colors) + 1 if colors else 0), colors


def _k_colorable(G: Graph, k: int) -> bool:
    """Backtracking k-colorability with DSATUR vertex selection."""
    if k >= G.n:
        return True
    colors = [-1] * G.n
    neighbor_colors: list[set[int]] = [set() for _ in range(G.n)]

    def pick() -> int:
        best, key = -1, (-1, -1)
        for v in range(G.n):
            if colors[v] == -1:
                cand = (len(neighbor_colors[v]), len(G.adj[v]))
                if cand > key:
                    best, key = v, cand
        return best

    def go(assigned: int, used: int) -> bool:
        if assigned == G.n:
            return True
        v = pick()
        if len(neighbor_colors[v]) >= k:
            return False
        # trying at most one brand-new color kills color-permutation symmetry
        limit = min(used + 1, k)
        for c in range(limit):
            if c in neighbor_colors[v]:
                continue
            colors[v] = c
            touched = []
            for w in G.adj[v]:
                if colors[w] == -1 and c not in neighbor_colors[w]:
                    neighbor_colors[w].add(c)
                    touched.append(w)
            if go(assigned + 1, max(used, c + 1)):
                return True
            colors[v] = -1
            for w in touched:
                neighbor_colors[w].discard(c)
        return False

    return go(0, 0)


def chromatic_number(G: Graph, *, max_vertices: int = 20, force: bool = False) -> int:
    """Exact chromatic number by branch and bound.

    A greedy clique gives the lower bound, DSATUR the upper bound, and
    k-colorability backtracking closes the gap.  Guarded at
    `max_vertices` (override with force=True).
    """
    if G.n < 1:
        raise ValueError("chromatic number needs at least one vertex")
    if G.n > max_vertices and not force:
        raise ValueError(
            f"graph on {G.n} vertices exceeds the exact-coloring guard "
            f"({max_vertices}); pass force=True to override"
        )
    lo = greedy_clique_lower_bound(G)
    hi, _ = dsatur_upper_bound(G)
    for k in range(lo, hi):
        if _k_colorable(G, k):
            return k
    return hi


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle graph needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def kneser_vertex_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """The k-subsets of {1..n} in colexicographic order (the fixed vertex order)."""
    subsets = [tuple(sorted(s)) for s in itertools.combinations(range(1, n + 1), k)]
    return sorted(subsets, key=lambda s: tuple(reversed(s)))


def kneser_graph(n: int, k: int) -> Graph:
    """Vertices are k-subsets of {1..n} (colex order); edges join disjoint pairs."""
    if not n >= 2 * k >= 2:
        raise ValueError("kneser graph needs n >= 2k >= 2")
    subsets = kneser_vertex_subsets(n, k)
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(subsets)), 2)
        if not set(subsets[i]) & set(subsets[j])
    ]
    return Graph(len(subsets), edges)


def add_cone_vertex(G: Graph) -> Graph:
    """Add one vertex adjacent to everything; raises chi by exactly one."""
    w = G.n
    return Graph(G.n + 1, list(G.edges) + [(v, w) for v in range(G.n)])


def cone_k(G: Graph, k: int) -> Graph:
    if k < 0:
        raise ValueError("k must be nonnegative")
    for _ in range(k):
        G = add_cone_vertex(G)
    return G


def graph_from_z2_complex(Z: Z2Complex) -> Graph:
    """The graph whose edges join each vertex to its pair and the pair's neighbors.

    x-y is an edge iff nu(x)=y, or {x,nu(y)} is a face, or {y,nu(x)} is a
    face.  Requires dense labels 0..n-1 (subdivision output already is).
    """
    K = Z.complex
    verts = K.vertices
    if verts != tuple(range(len(verts))):
        raise ValueError("complex vertices must be 0..n-1; relabel first")
    nu = Z.action.as_dict()
    n = len(verts)
    edges = []
    for x, y in itertools.combinations(range(n), 2):
        if (
            nu[x] == y
            or tuple(sorted({x, nu[y]})) in K.faces
            or tuple(sorted({y, nu[x]})) in K.faces
        ):
            edges.append((x, y))
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Desk-scale corpora
# ---------------------------------------------------------------------------

def all_labeled_graphs(n: int):
    """Yield all 2^C(n,2) labeled graphs on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def _canonical_edge_set(G: Graph) -> frozenset[Edge]:
    """Canonical edge set: each degree class is relabeled onto a fixed
    block of labels (blocks ordered by degree) and the minimum over the
    within-block assignments is taken."""
    by_degree: dict[int, list[int]] = {}
    for v in range(G.n):
        by_degree.setdefault(len(G.adj[v]), []).append(v)
    classes = [by_degree[d] for d in sorted(by_degree)]
    blocks = []
    offset = 0
    for c in classes:
        blocks.append(range(offset, offset + len(c)))
        offset += len(c)
    best: tuple[Edge, ...] | None = None
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm: dict[int, int] = {}
        for cls, img in zip(classes, parts):
            perm.update(zip(cls, img))
        relabeled = tuple(
            sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in G.edges)
        )
        if best is None or relabeled < best:
            best = relabeled
    return frozenset(best or ())


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on exactly n vertices, one per isomorphism class."""
    seen: set[frozenset[Edge]] = set()
    out = []
    for G in all_labeled_graphs(n):
        if not is_connected(G):
            continue
        key = _canonical_edge_set(G)
        if key not in seen:
            seen.add(key)
            out.append(Graph(n, key))
    return out


def connected_graph_corpus(max_n: int) -> list[Graph]:
    """Connected graphs on 1..max_n vertices up to isomorphism."""
    out = []
    for n in range(1, max_n + 1):
        out.extend(connected_graphs(n))
    return out


# ---------------------------------------------------------------------------
# I/O: JSON {"n": int, "edges": [[u, v], ...]} and plain edge lists
# ---------------------------------------------------------------------------

def graph_to_obj(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in sorted(G.edges)]}


def graph_from_obj(obj: dict) -> Graph:
    return Graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])


def graph_from_edge_list(text: str) -> Graph:
    """Plain-text reader: first line n, then one "u v" pair per line."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        u, v = ln.split()
        edges.append((int(u), int(v)))
    return Graph(n, edges)
