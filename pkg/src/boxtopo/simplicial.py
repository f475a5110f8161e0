"""Simplicial complexes with optional free involutions.

Faces are stored explicitly as sorted integer tuples inside a frozenset;
facet-only compression is deliberately avoided so face membership stays
O(1).  Every type here is immutable after construction and every
operation is a pure function, so values can be shared freely.

Conventions for the empty complex: chi = 0, dim = -1, and
suspension(empty) is a two-point sphere.
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable, Hashable

Face = tuple[int, ...]


def _canon_face(face: Iterable[int]) -> Face:
    return tuple(sorted(set(face)))


class SimplicialComplex:
    """A finite abstract simplicial complex on integer-labeled vertices.

    The constructor expects a downward-closed face set and rejects
    anything else; use :func:`from_facets` to build from generators.
    """

    __slots__ = ("faces", "vertices", "dim")

    faces: frozenset[Face]
    vertices: tuple[int, ...]
    dim: int

    def __init__(self, faces: Iterable[Iterable[int]]):
        face_set = frozenset(_canon_face(f) for f in faces)
        if () in face_set:
            raise ValueError("the empty face is never stored")
        for f in face_set:
            if len(f) > 1:
                for sub in itertools.combinations(f, len(f) - 1):
                    if sub not in face_set:
                        raise ValueError(f"face set not downward closed: {sub} missing under {f}")
        object.__setattr__(self, "faces", face_set)
        object.__setattr__(self, "vertices", tuple(sorted({v for f in face_set for v in f})))
        object.__setattr__(self, "dim", max((len(f) for f in face_set), default=0) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __contains__(self, face: Iterable[int]) -> bool:
        return _canon_face(face) in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def __repr__(self):
        return f"SimplicialComplex(|V|={len(self.vertices)}, f={self.f_vector()})"

    def is_empty(self) -> bool:
        return not self.faces

    def k_faces(self, k: int) -> list[Face]:
        """Sorted list of k-dimensional faces (k+1 vertices each)."""
        return sorted(f for f in self.faces if len(f) == k + 1)

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for f in self.faces:
            counts[len(f) - 1] += 1
        return tuple(counts)

    def facets(self) -> list[Face]:
        """Maximal faces, sorted."""
        out = []
        for f in self.faces:
            fs = set(f)
            if not any(len(g) == len(f) + 1 and fs < set(g) for g in self.faces):
                out.append(f)
        return sorted(out)

    def induced(self, vertices: Iterable[int]) -> "SimplicialComplex":
        keep = set(vertices)
        return SimplicialComplex(f for f in self.faces if keep.issuperset(f))

    def relabel(self, mapping: dict[int, int]) -> "SimplicialComplex":
        if len(set(mapping[v] for v in self.vertices)) != len(self.vertices):
            raise ValueError("relabeling is not injective on the vertex set")
        return SimplicialComplex(tuple(mapping[v] for v in f) for f in self.faces)


EMPTY_COMPLEX = SimplicialComplex([])


class Involution:
    """An order-two vertex map; freeness is a Z2Complex-level property."""

    __slots__ = ("_map",)

    def __init__(self, mapping: dict[int, int]):
        for v, w in mapping.items():
            if mapping.get(w) != v:
                raise ValueError(f"not an involution: {v} -> {w} -> {mapping.get(w)}")
        object.__setattr__(self, "_map", dict(mapping))

    def __setattr__(self, name, value):
        raise AttributeError("Involution is immutable")

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "Involution":
        return cls(d)

    def as_dict(self) -> dict[int, int]:
        return dict(self._map)

    def __call__(self, v: int) -> int:
        return self._map[v]

    def on_face(self, face: Iterable[int]) -> Face:
        m = self._map
        return tuple(sorted(m[v] for v in face))

    def __eq__(self, other):
        return isinstance(other, Involution) and self._map == other._map

    def __hash__(self):
        return hash(tuple(sorted(self._map.items())))

    def __repr__(self):
        return f"Involution({self._map!r})"


class Z2Complex:
    """A simplicial complex with a free simplicial involution.

    Validation always runs: the action must be an order-two vertex
    bijection of the complex, must map faces to faces, and no face may
    be setwise fixed (a setwise-fixed simplex fixes its barycenter, so
    this is the exact simplicial freeness condition).
    """

    __slots__ = ("complex", "action")

    complex: SimplicialComplex
    action: Involution

    def __init__(self, complex: SimplicialComplex, action: Involution):
        d = action.as_dict()
        for v in complex.vertices:
            if v not in d:
                raise ValueError(f"action undefined on vertex {v}")
            if d[v] not in set(complex.vertices):
                raise ValueError(f"action sends {v} outside the complex")
            if d[d[v]] != v:
                raise ValueError(f"action is not order two at {v}")
        for f in complex.faces:
            img = tuple(sorted(d[v] for v in f))
            if img not in complex.faces:
                raise ValueError(f"action is not simplicial: image of {f} is not a face")
            if img == f:
                raise ValueError(f"action is not free: face {f} is setwise fixed")
        object.__setattr__(self, "complex", complex)
        object.__setattr__(self, "action", action)

    def __setattr__(self, name, value):
        raise AttributeError("Z2Complex is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Z2Complex)
            and self.complex == other.complex
            and self._restricted_map() == other._restricted_map()
        )

    def __hash__(self):
        return hash((self.complex, tuple(sorted(self._restricted_map().items()))))

    def _restricted_map(self) -> dict[int, int]:
        d = self.action.as_dict()
        return {v: d[v] for v in self.complex.vertices}

    def __repr__(self):
        return f"Z2Complex({self.complex!r})"


def from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of the given generating faces.

    An empty facet is an input error; an empty facet *list* gives the
    empty complex.
    """
    faces: set[Face] = set()
    for facet in facets:
        t = _canon_face(facet)
        if not t:
            raise ValueError("a facet must be a nonempty vertex set")
        for k in range(1, len(t) + 1):
            faces.update(itertools.combinations(t, k))
    return SimplicialComplex(faces)


def euler_characteristic(K: SimplicialComplex) -> int:
    """Alternating sum of face counts; 0 for the empty complex."""
    return sum((-1) ** (len(f) - 1) for f in K.faces)


def sd_vertex_faces(K: SimplicialComplex) -> list[Face]:
    """The faces of K in the canonical order used to label sd(K).

    Vertex i of the subdivision corresponds to position i in this list
    (faces sorted by cardinality, then lexicographically); this is the
    reversible dictionary between sd labels and original faces.
    """
    return sorted(K.faces, key=lambda f: (len(f), f))


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """Chains of faces of K under strict inclusion, on dense fresh labels.

    Labels follow :func:`sd_vertex_faces`; downstream constructions
    consume only the relabeled complex.
    """
    order = sd_vertex_faces(K)
    index = {f: i for i, f in enumerate(order)}
    # successor lists in the strict-inclusion poset
    above: dict[Face, list[Face]] = {f: [] for f in order}
    for f in order:
        fs = set(f)
        for g in order:
            if len(g) > len(f) and fs < set(g):
                above[f].append(g)

    chains: list[tuple[int, ...]] = []

    def extend(chain: list[Face]):
        chains.append(tuple(index[f] for f in chain))
        for g in above[chain[-1]]:
            extend(chain + [g])

    for f in order:
        extend([f])
    return SimplicialComplex(chains)


def subdivide_involution(Z: Z2Complex) -> Z2Complex:
    """Barycentric subdivision with the induced action on face-vertices."""
    order = sd_vertex_faces(Z.complex)
    index = {f: i for i, f in enumerate(order)}
    act = Z.action
    mapping = {index[f]: index[act.on_face(f)] for f in order}
    sd = barycentric_subdivision(Z.complex)
    return Z2Complex(sd, Involution.from_dict(mapping))


def fresh_labels(K: SimplicialComplex, count: int) -> tuple[int, ...]:
    """The `count` smallest nonnegative integers unused by K."""
    used = set(K.vertices)
    out = []
    v = 0
    while len(out) < count:
        if v not in used:
            out.append(v)
        v += 1
    return tuple(out)


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    """Join with two fresh apexes (never a face containing both).

    suspension(empty) is a two-point sphere, and
    chi(suspension(K)) = 2 - chi(K) always.
    """
    x, y = fresh_labels(K, 2)
    faces: set[Face] = set(K.faces)
    faces.add((x,))
    faces.add((y,))
    for f in K.faces:
        faces.add(tuple(sorted(f + (x,))))
        faces.add(tuple(sorted(f + (y,))))
    return SimplicialComplex(faces)


def z2_suspension(Z: Z2Complex) -> Z2Complex:
    """Suspension whose action swaps the apexes over the given action."""
    x, y = fresh_labels(Z.complex, 2)
    susp = suspension(Z.complex)
    mapping = Z._restricted_map()
    mapping[x] = y
    mapping[y] = x
    return Z2Complex(susp, Involution.from_dict(mapping))


def star(K: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """The subcomplex of faces tau with tau ∪ sigma still a face."""
    s = _canon_face(sigma)
    if s not in K.faces:
        raise ValueError(f"{s} is not a face")
    ss = set(s)
    return SimplicialComplex(
        f for f in K.faces if tuple(sorted(ss.union(f))) in K.faces
    )


def nerve(family: Iterable[tuple[int, Iterable[Hashable]]]) -> SimplicialComplex:
    """Nerve of a labeled set family: faces are subfamilies sharing an element.

    Members may contain any hashable elements (vertex labels, faces, ...).
    """
    labeled = [(label, frozenset(members)) for label, members in family]
    if any(not members for _, members in labeled):
        raise ValueError("every family member must be nonempty")
    universe = frozenset().union(*(m for _, m in labeled)) if labeled else frozenset()
    facets = []
    for e in universe:
        facets.append([label for label, members in labeled if e in members])
    return from_facets(facets)


def cone(K: SimplicialComplex, apex: int) -> SimplicialComplex:
    """Join with a single fresh apex; the result is contractible."""
    if apex in K.vertices:
        raise ValueError(f"apex {apex} already a vertex")
    faces: set[Face] = set(K.faces)
    faces.add((apex,))
    for f in K.faces:
        faces.add(tuple(sorted(f + (apex,))))
    return SimplicialComplex(faces)


def _vertex_signature(K: SimplicialComplex) -> dict[int, tuple]:
    sig: dict[int, list[int]] = {v: [] for v in K.vertices}
    for f in K.faces:
        for v in f:
            sig[v].append(len(f))
    return {v: tuple(sorted(s)) for v, s in sig.items()}


def isomorphic(
    K1: SimplicialComplex,
    K2: SimplicialComplex,
    *,
    max_vertices: int = 12,
    force: bool = False,
) -> bool:
    """Exact isomorphism test by pruned backtracking over vertex bijections.

    Exponential by design; refuses inputs above `max_vertices` unless
    `force` is set.
    """
    if len(K1.vertices) != len(K2.vertices) or K1.f_vector() != K2.f_vector():
        return False
    if len(K1.vertices) > max_vertices and not force:
        raise ValueError(
            f"isomorphism search on {len(K1.vertices)} vertices exceeds the "
            f"guard ({max_vertices}); pass force=True to override"
        )
    sig1 = _vertex_signature(K1)
    sig2 = _vertex_signature(K2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return False

    v1 = sorted(K1.vertices, key=lambda v: (sig1[v], v))
    candidates = {v: [w for w in K2.vertices if sig2[w] == sig1[v]] for v in v1}
    assignment: dict[int, int] = {}
    used: set[int] = set()

    def faces_within(K: SimplicialComplex, dom: set[int]) -> set[Face]:
        return {f for f in K.faces if dom.issuperset(f)}

    def consistent(v: int) -> bool:
        dom = set(assignment)
        for f in K1.faces:
            if v in f and dom.issuperset(f):
                img = tuple(sorted(assignment[u] for u in f))
                if img not in K2.faces:
                    return False
        return True

    def backtrack(i: int) -> bool:
        if i == len(v1):
            return faces_within(K2, used) == {
                tuple(sorted(assignment[u] for u in f)) for f in K1.faces
            }
        v = v1[i]
        for w in candidates[v]:
            if w in used:
                continue
            assignment[v] = w
            used.add(w)
            if consistent(v) and backtrack(i + 1):
                return True
            del assignment[v]
            used.discard(w)
        return False

    return backtrack(0)


# ---------------------------------------------------------------------------
# Canonical free Z2 test complexes
# ---------------------------------------------------------------------------

def two_points_z2() -> Z2Complex:
    """Two swapped points: the 0-sphere with its antipodal action."""
    return Z2Complex(from_facets([[0], [1]]), Involution({0: 1, 1: 0}))


def antipodal_cycle_z2(n: int) -> Z2Complex:
    """The n-cycle (n even, >= 4) with the half-turn vertex rotation."""
    if n < 4 or n % 2:
        raise ValueError("antipodal cycle needs even n >= 4")
    K = from_facets([[i, (i + 1) % n] for i in range(n)])
    return Z2Complex(K, Involution({i: (i + n // 2) % n for i in range(n)}))


def octahedron_z2() -> Z2Complex:
    """Boundary of the octahedron with the antipodal map i -> i+3 (mod 6)."""
    facets = [
        (a, b, c)
        for a in (0, 3)
        for b in (1, 4)
        for c in (2, 5)
    ]
    K = from_facets(facets)
    return Z2Complex(K, Involution({i: (i + 3) % 6 for i in range(6)}))


# ---------------------------------------------------------------------------
# JSON format: {"vertices": [...], "facets": [[...], ...],
#               "involution": {"map": {"v": nu(v), ...}}  (optional)}
# Closure is applied on load, so facets need not be maximal.
# ---------------------------------------------------------------------------

def complex_to_obj(
    K: SimplicialComplex,
    action: Involution | None = None,
    shore_vertices: list[dict] | None = None,
) -> dict:
    obj: dict = {
        "vertices": list(K.vertices),
        "facets": [list(f) for f in K.facets()],
    }
    if action is not None:
        restricted = {v: action.as_dict()[v] for v in K.vertices}
        obj["involution"] = {"map": {str(v): w for v, w in sorted(restricted.items())}}
    if shore_vertices is not None:
        obj["shore_vertices"] = shore_vertices
    return obj


def complex_from_obj(obj: dict) -> tuple[SimplicialComplex, Involution | None]:
    K = from_facets(obj.get("facets", []))
    declared = obj.get("vertices")
    if declared is not None and sorted(declared) != list(K.vertices):
        raise ValueError("declared vertices disagree with the facets")
    action = None
    if "involution" in obj:
        raw = obj["involution"]["map"]
        action = Involution.from_dict({int(v): int(w) for v, w in raw.items()})
    return K, action


def dumps_canonical(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
