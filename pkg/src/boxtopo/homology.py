"""Integer simplicial homology via Smith normal form.

All linear algebra is exact: matrices are plain lists of Python ints,
so elimination entry growth is handled by arbitrary precision
arithmetic.  An elementary-collapse pass runs transparently before the
normal-form work once a complex is large enough; both pipelines compute
the same reduced homology.

The reduced convention is used throughout: a point has trivial homology
in every degree, m components give betti_0 = m - 1, and the empty
complex reports an all-zero profile.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .simplicial import Face, SimplicialComplex

Matrix = list[list[int]]

COLLAPSE_THRESHOLD = 400


# ---------------------------------------------------------------------------
# Chain complexes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainComplex:
    """Boundary matrices D_1..D_dim over canonically ordered face bases.

    matrices[k-1] is D_k, mapping k-chains to (k-1)-chains (rows indexed
    by (k-1)-faces, columns by k-faces); entries are -1, 0, +1.
    """

    bases: tuple[tuple[Face, ...], ...]
    matrices: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.bases) - 1

    def boundary(self, k: int) -> Matrix:
        """D_k as a mutable row-major matrix."""
        if not 1 <= k <= self.dim:
            raise ValueError(f"no boundary matrix D_{k}")
        return [list(row) for row in self.matrices[k - 1]]


def _face_boundary(f: Face) -> list[tuple[Face, int]]:
    return [(f[:i] + f[i + 1:], (-1) ** i) for i in range(len(f))]


def boundary_matrices(K: SimplicialComplex) -> ChainComplex:
    """Build all boundary matrices; asserts that consecutive ones compose to zero.

    Signs come from the position parity of the omitted vertex in the
    sorted vertex order.
    """
    if K.is_empty():
        raise ValueError("the empty complex has no chain complex")
    bases = tuple(tuple(K.k_faces(k)) for k in range(K.dim + 1))
    index = [{f: i for i, f in enumerate(bs)} for bs in bases]
    matrices = []
    for k in range(1, K.dim + 1):
        rows, cols = len(bases[k - 1]), len(bases[k])
        M = [[0] * cols for _ in range(rows)]
        for j, f in enumerate(bases[k]):
            for sub, sign in _face_boundary(f):
                M[index[k - 1][sub]][j] = sign
        matrices.append(tuple(tuple(row) for row in M))
    cc = ChainComplex(bases, tuple(matrices))
    _assert_boundary_squares_to_zero(K, bases)
    return cc


def _assert_boundary_squares_to_zero(K: SimplicialComplex, bases) -> None:
    # sparse check: expand each (k+1)-face twice and confirm cancellation
    for k in range(1, K.dim):
        for f in bases[k + 1]:
            acc: dict[Face, int] = {}
            for sub, s in _face_boundary(f):
                for sub2, s2 in _face_boundary(sub):
                    acc[sub2] = acc.get(sub2, 0) + s * s2
            if any(acc.values()):
                raise RuntimeError(f"boundary of boundary nonzero at {f}")


# ---------------------------------------------------------------------------
# Exact linear algebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SnfResult:
    """Nonzero diagonal of the Smith normal form, in divisibility order."""

    factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(f for f in self.factors if f > 1)


def smith_normal_form(M: Matrix) -> SnfResult:
    """Smith normal form by unimodular row/column operations.

    Pivoting is deterministic: smallest nonzero absolute value, ties
    broken by row-major position.  The divisibility chain is enforced on
    the diagonal afterwards (diag(a,b) ~ diag(gcd, lcm)).
    """
    A = [list(row) for row in M]
    m = len(A)
    n = len(A[0]) if A else 0
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        pivot = None
        best = None
        for i in range(t, m):
            Ai = A[i]
            for j in range(t, n):
                a = Ai[j]
                if a and (best is None or abs(a) < best):
                    best = abs(a)
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            A[t], A[pi] = A[pi], A[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]
        while True:
            # clear column t with floor-division remainders, then row t;
            # a column op only touches row t because the column is clean
            p = A[t][t]
            At = A[t]
            dirty = False
            for i in range(t + 1, m):
                Ai = A[i]
                if Ai[t]:
                    q = Ai[t] // p
                    if q:
                        for j in range(t, n):
                            Ai[j] -= q * At[j]
                    if Ai[t]:
                        dirty = True
            if not dirty:
                for j in range(t + 1, n):
                    if At[j]:
                        q = At[j] // p
                        if q:
                            for i in range(t, m):
                                A[i][j] -= q * A[i][t]
                        if At[j]:
                            dirty = True
            if not dirty:
                break
            # a remainder smaller than the pivot exists; re-pivot on it
            best = abs(p)
            pivot = (t, t)
            for i in range(t, m):
                if A[i][t] and abs(A[i][t]) < best:
                    best = abs(A[i][t])
                    pivot = (i, t)
            for j in range(t, n):
                if A[t][j] and abs(A[t][j]) < best:
                    best = abs(A[t][j])
                    pivot = (t, j)
            pi, pj = pivot
            if pi != t:
                A[t], A[pi] = A[pi], A[t]
            if pj != t:
                for row in A:
                    row[t], row[pj] = row[pj], row[t]
        diag.append(abs(A[t][t]))
        t += 1

    # enforce the divisibility chain on the diagonal
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                a, b = diag[i], diag[j]
                if b % a:
                    g = _gcd(a, b)
                    diag[i], diag[j] = g, a * b // g
                    changed = True
    return SnfResult(tuple(sorted(diag)))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def bareiss_rank(M: Matrix) -> int:
    """Rank over the rationals by fraction-free Gaussian elimination.

    Independent of the Smith normal form path; used to cross-check
    Betti numbers.
    """
    A = [list(row) for row in M]
    m = len(A)
    n = len(A[0]) if A else 0
    prev = 1
    rank = 0
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, m) if A[r][col]), None)
        if piv is None:
            continue
        if piv != row:
            A[row], A[piv] = A[piv], A[row]
        p = A[row][col]
        for r in range(row + 1, m):
            Ar = A[r]
            factor = Ar[col]
            for c in range(col + 1, n):
                Ar[c] = (Ar[c] * p - factor * A[row][c]) // prev
            Ar[col] = 0
        prev = p
        rank += 1
        row += 1
        if row == m:
            break
    return rank


# ---------------------------------------------------------------------------
# Homology profiles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology per dimension: (betti_k, invariant torsion factors)."""

    entries: tuple[tuple[int, tuple[int, ...]], ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, tuple[int, ...]]]) -> "HomologyProfile":
        out = list(pairs)
        while out and out[-1] == (0, ()):
            out.pop()
        return cls(tuple(out))

    def betti(self, k: int) -> int:
        return self.entries[k][0] if 0 <= k < len(self.entries) else 0

    def torsion(self, k: int) -> tuple[int, ...]:
        return self.entries[k][1] if 0 <= k < len(self.entries) else ()

    @property
    def top_dim(self) -> int:
        return len(self.entries) - 1

    def is_trivial(self) -> bool:
        return not self.entries

    def shifted(self) -> "HomologyProfile":
        """The suspension shift for a nonempty underlying complex."""
        return HomologyProfile.from_pairs(((0, ()),) + self.entries)

    def __str__(self) -> str:
        if not self.entries:
            return "trivial"
        parts = []
        for k, (b, tor) in enumerate(self.entries):
            t = "" if not tor else " + " + " + ".join(f"Z/{f}" for f in tor)
            parts.append(f"H~{k} = Z^{b}{t}")
        return ", ".join(parts)


ZERO_PROFILE = HomologyProfile(())

S0_PROFILE = HomologyProfile(((1, ()),))


def profile_to_obj(p: HomologyProfile) -> dict:
    return {
        "dims": [
            {"k": k, "betti": b, "torsion": list(tor)}
            for k, (b, tor) in enumerate(p.entries)
        ]
    }


def profile_from_obj(obj: dict) -> HomologyProfile:
    dims = sorted(obj["dims"], key=lambda d: d["k"])
    entries = []
    for k, d in enumerate(dims):
        if d["k"] != k:
            raise ValueError("profile dims must cover 0..top without gaps")
        entries.append((int(d["betti"]), tuple(int(t) for t in d["torsion"])))
    return HomologyProfile.from_pairs(entries)


# ---------------------------------------------------------------------------
# Elementary collapses
# ---------------------------------------------------------------------------

def collapse_reduce(K: SimplicialComplex) -> SimplicialComplex:
    """Remove free pairs until none remain; preserves the homotopy type.

    A face is free when it has exactly one codimension-one coface (that
    coface is then automatically its only coface, and maximal).
    """
    faces = set(K.faces)
    verts = K.vertices
    count: dict[Face, int] = {f: 0 for f in faces}
    for f in faces:
        if len(f) > 1:
            for i in range(len(f)):
                count[f[:i] + f[i + 1:]] += 1

    def unique_coface(f: Face) -> Face | None:
        fs = set(f)
        for v in verts:
            if v not in fs:
                g = tuple(sorted(f + (v,)))
                if g in faces:
                    return g
        return None

    queue = deque(f for f, c in count.items() if c == 1)
    while queue:
        f = queue.popleft()
        if f not in faces or count[f] != 1:
            continue
        tau = unique_coface(f)
        if tau is None:
            continue
        faces.discard(f)
        faces.discard(tau)
        for g in (f, tau):
            if len(g) > 1:
                for i in range(len(g)):
                    sub = g[:i] + g[i + 1:]
                    if sub in faces:
                        count[sub] -= 1
                        if count[sub] == 1:
                            queue.append(sub)
    return SimplicialComplex(faces)


# ---------------------------------------------------------------------------
# Reduced homology
# ---------------------------------------------------------------------------

def reduced_homology(K: SimplicialComplex, *, collapse: bool | None = None) -> HomologyProfile:
    """Reduced integer homology from Smith normal forms of the boundaries.

    collapse=None applies the elementary-collapse pass only above
    COLLAPSE_THRESHOLD faces; True/False force it on or off.
    """
    if K.is_empty():
        return ZERO_PROFILE
    if collapse is None:
        collapse = len(K.faces) > COLLAPSE_THRESHOLD
    if collapse:
        K = collapse_reduce(K)
    cc = boundary_matrices(K)
    counts = [len(bs) for bs in cc.bases]
    # rank_of[k] = rank D_k, with D_0 the augmentation (rank 1 when nonempty)
    rank_of = [0] * (K.dim + 2)
    torsion_of: list[tuple[int, ...]] = [()] * (K.dim + 2)
    rank_of[0] = 1
    for k in range(1, K.dim + 1):
        snf = smith_normal_form(cc.boundary(k))
        rank_of[k] = snf.rank
        torsion_of[k] = snf.torsion
    entries = []
    for k in range(K.dim + 1):
        betti = counts[k] - rank_of[k] - rank_of[k + 1]
        entries.append((betti, torsion_of[k + 1]))
    return HomologyProfile.from_pairs(entries)


def homological_connectivity(K: SimplicialComplex) -> int:
    """Largest k with vanishing reduced homology through degree k.

    -2 for the empty complex, -1 for a nonempty disconnected one.  When
    every degree up to dim vanishes (an acyclic complex) the result is
    dim; there is nothing above to test.
    """
    if K.is_empty():
        return -2
    prof = reduced_homology(K)
    k = -1
    for i in range(K.dim + 1):
        if prof.betti(i) == 0 and not prof.torsion(i):
            k = i
        else:
            break
    return k


# ---------------------------------------------------------------------------
# Fundamental-group triviality (sound, incomplete)
# ---------------------------------------------------------------------------

def pi1_trivial_heuristic(K: SimplicialComplex) -> bool:
    """True only when the edge-path group provably collapses to nothing.

    Builds the presentation from a spanning tree and the 2-cells, then
    applies bounded relator simplification (free/cyclic reduction,
    length-1 and length-2 eliminations).  A True answer is a proof of
    simple connectivity; False means unknown.
    """
    if K.is_empty():
        raise ValueError("empty complex")
    verts = list(K.vertices)
    edges = K.k_faces(1)
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    root = verts[0]
    parent: dict[int, int] = {root: root}
    order = deque([root])
    tree: set[Face] = set()
    while order:
        u = order.popleft()
        for w in sorted(adj[u]):
            if w not in parent:
                parent[w] = u
                tree.add((min(u, w), max(u, w)))
                order.append(w)
    if len(parent) != len(verts):
        raise ValueError("complex is not connected")

    gens = {e: i for i, e in enumerate(sorted(set(edges) - tree))}

    def letter(u: int, v: int) -> list[int]:
        e = (min(u, v), max(u, v))
        if e in tree:
            return []
        g = gens[e]
        return [g + 1 if u < v else -(g + 1)]  # signed, 1-based

    relators: list[list[int]] = []
    for a, b, c in K.k_faces(2):
        relators.append(letter(a, b) + letter(b, c) + letter(c, a))

    alive = set(range(1, len(gens) + 1))

    def reduce_word(w: list[int]) -> list[int]:
        out: list[int] = []
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        while len(out) >= 2 and out[0] == -out[-1]:
            out = out[1:-1]
        return out

    for _ in range(10 * (len(gens) + len(relators) + 1)):
        relators = [reduce_word(w) for w in relators]
        relators = [w for w in relators if w]
        rule: tuple[int, list[int]] | None = None
        for w in relators:
            if len(w) == 1:
                rule = (abs(w[0]), [])
                break
            if len(w) == 2 and abs(w[0]) != abs(w[1]):
                x, y = w
                # x-part solved for the other letter: x = y^-1 when signs align
                if x > 0:
                    rule = (x, [-y])
                else:
                    rule = (-x, [y])
                break
        if rule is None:
            break
        g, image = rule
        alive.discard(g)
        new_relators = []
        for w in relators:
            nw: list[int] = []
            for x in w:
                if abs(x) == g:
                    nw.extend(image if x > 0 else [-i for i in reversed(image)])
                else:
                    nw.append(x)
            new_relators.append(nw)
        relators = new_relators
    return not alive
