"""Graph-to-complex constructions: neighborhood, box, and Hom complexes.

Box-type complexes live on two shores: graph vertex v becomes label 2v
on shore 0 and 2v+1 on shore 1, so the shore swap is label XOR 1.  The
cone apexes, when present, are the two smallest labels unused by the
shores (2n and 2n+1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph, common_neighbors
from .simplicial import (
    Face,
    Involution,
    SimplicialComplex,
    Z2Complex,
    from_facets,
)


@dataclass(frozen=True)
class ShoreVertex:
    """Decoded box-complex vertex: a graph vertex on shore 0 or 1, or an apex."""

    vertex: int | None
    shore: int | str  # 0 | 1 | "apex-x" | "apex-y"

    def encode(self) -> int | None:
        if isinstance(self.shore, int):
            assert self.vertex is not None
            return 2 * self.vertex + self.shore
        return None


def shore_label(v: int, shore: int) -> int:
    return 2 * v + shore


def decode_shore_label(label: int, n: int) -> ShoreVertex:
    if label == 2 * n:
        return ShoreVertex(None, "apex-x")
    if label == 2 * n + 1:
        return ShoreVertex(None, "apex-y")
    if 0 <= label < 2 * n:
        return ShoreVertex(label // 2, label % 2)
    raise ValueError(f"label {label} is not a shore vertex for n={n}")


def _encode_pair(A, B) -> Face:
    return tuple(sorted([2 * a for a in A] + [2 * b + 1 for b in B]))


def neighborhood_complex(G: Graph) -> SimplicialComplex:
    """Faces are the vertex sets with a common neighbor.

    S has a common neighbor iff S lies inside some neighbor set N(v), so
    the complex is the closure of the neighbor-set simplices.
    """
    return from_facets([G.adj[v] for v in range(G.n) if G.adj[v]])


def _box_facets(G: Graph) -> set[tuple[Face, Face]]:
    """Maximal box faces as (A, B) pairs of graph-vertex tuples.

    Every maximal pair is (CN(CN(S)), CN(S)) for some face S of the
    neighborhood complex, and every such pair is maximal.
    """
    N = neighborhood_complex(G)
    facets: set[tuple[Face, Face]] = set()
    for S in N.faces:
        B = common_neighbors(G, S)
        A = common_neighbors(G, B)
        facets.add((tuple(sorted(A)), tuple(sorted(B))))
    return facets


def _shore_swap_involution(K: SimplicialComplex, extra: dict[int, int] | None = None) -> Involution:
    mapping = {v: v ^ 1 for v in K.vertices if extra is None or v not in extra}
    if extra:
        mapping.update(extra)
    return Involution(mapping)


def box_complex(G: Graph) -> Z2Complex:
    """Faces A unioned-across-shores B with G[A,B] complete bipartite and
    both common-neighbor sets nonempty (CN of the empty side is V(G)).

    Empty when G has no edge.  The shore swap is a free involution; the
    validator runs on construction.
    """
    K = from_facets(_encode_pair(A, B) for A, B in _box_facets(G))
    return Z2Complex(K, _shore_swap_involution(K))


def box0_complex(G: Graph) -> Z2Complex:
    """The box complex without the common-neighbor conditions.

    Equivalently the box complex plus the two full shore simplices: a
    cross pair with both sides nonempty already satisfies the CN
    conditions, and one-sided faces are vacuously complete bipartite.
    """
    facets = [_encode_pair(A, B) for A, B in _box_facets(G)]
    facets.append(_encode_pair(range(G.n), ()))
    facets.append(_encode_pair((), range(G.n)))
    K = from_facets(facets)
    return Z2Complex(K, _shore_swap_involution(K))


def cones_over_shores_complex(G: Graph) -> Z2Complex:
    """The box complex with each shore coned off by a fresh apex.

    Apex x cones exactly the shore-0 faces (sets with nonempty CN) and
    apex y the shore-1 faces; the involution swaps the apexes.
    """
    x, y = 2 * G.n, 2 * G.n + 1
    facets: list[Face] = [_encode_pair(A, B) for A, B in _box_facets(G)]
    N = neighborhood_complex(G)
    facets.append((x,))
    facets.append((y,))
    for S in N.facets():
        facets.append(tuple(sorted(_encode_pair(S, ()) + (x,))))
        facets.append(tuple(sorted(_encode_pair((), S) + (y,))))
    K = from_facets(facets)
    return Z2Complex(K, _shore_swap_involution(K, extra={x: y, y: x}))


def hom_pairs(G: Graph) -> list[tuple[Face, Face]]:
    """The poset elements (A, B): disjoint nonempty sets spanning a
    complete bipartite subgraph, in canonical order."""
    N = neighborhood_complex(G)
    pairs: set[tuple[Face, Face]] = set()
    for A in N.faces:
        cn = sorted(common_neighbors(G, A))
        for r in range(1, len(cn) + 1):
            for B in itertools.combinations(cn, r):
                pairs.add((tuple(sorted(A)), B))
    return sorted(pairs)


def hom_k2_order_complex(G: Graph) -> Z2Complex:
    """Order complex of the complete-bipartite-pair poset.

    Elements are ordered by componentwise inclusion; faces are chains.
    The involution swaps the two sides of every pair.
    """
    elements = hom_pairs(G)
    index = {p: i for i, p in enumerate(elements)}

    def leq(p: tuple[Face, Face], q: tuple[Face, Face]) -> bool:
        return set(p[0]) <= set(q[0]) and set(p[1]) <= set(q[1])

    above: list[list[int]] = [[] for _ in elements]
    for i, p in enumerate(elements):
        for j, q in enumerate(elements):
            if i != j and leq(p, q):
                above[i].append(j)

    # each chain is built exactly once, in increasing poset order
    chains: list[tuple[int, ...]] = []

    def extend(chain: list[int]):
        chains.append(tuple(sorted(chain)))
        for j in above[chain[-1]]:
            extend(chain + [j])

    for i in range(len(elements)):
        extend([i])

    K = SimplicialComplex(chains)
    mapping = {index[(a, b)]: index[(b, a)] for a, b in elements}
    return Z2Complex(K, Involution(mapping))


def shore_subcomplex(Z: Z2Complex, shore: int) -> SimplicialComplex:
    """One shore of a box complex, relabeled back to graph vertices.

    Provenance is verified by reconstruction: the cross edges of a box
    complex recover the graph, and the input must be exactly the box
    complex of that graph.  Cone apexes, missing CN conditions, and
    other forgeries all fail the rebuild.  The result equals the
    neighborhood complex of the recovered graph.
    """
    if shore not in (0, 1):
        raise ValueError("shore must be 0 or 1")
    if Z.complex.is_empty():
        return SimplicialComplex([])
    act = Z.action.as_dict()
    for v in Z.complex.vertices:
        if act.get(v) != v ^ 1:
            raise ValueError(
                "not a box complex: action is not the shore swap (label XOR 1)"
            )
    n = max(Z.complex.vertices) // 2 + 1
    cross = [
        (u // 2, v // 2)
        for u, v in Z.complex.k_faces(1)
        if u % 2 != v % 2
    ]
    G = Graph(n, cross)
    if box_complex(G) != Z:
        raise ValueError("not the box complex of any graph")
    kept = [f for f in Z.complex.faces if all(v % 2 == shore for v in f)]
    return SimplicialComplex([tuple(v // 2 for v in f) for f in kept])


def shore_vertex_records(Z: Z2Complex, n: int) -> list[dict]:
    """Serialization records for box-type complexes: one per vertex label."""
    records = []
    for label in Z.complex.vertices:
        sv = decode_shore_label(label, n)
        rec: dict = {"label": label, "shore": sv.shore}
        if sv.vertex is not None:
            rec["v"] = sv.vertex
        records.append(rec)
    return records
