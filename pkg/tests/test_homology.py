"""Homology engine: boundary matrices, Smith normal form, collapses.

Cross-checks run against independent oracles: fraction-free rank over
the rationals for Betti numbers and a GF(2) elimination for the
torsion-sensitive projective-plane case.
"""

from __future__ import annotations

import itertools
import random

import pytest

from boxtopo.builders import box_complex, box0_complex, neighborhood_complex
from boxtopo.graphs import complete_graph, connected_graph_corpus, cycle_graph
from boxtopo.homology import (
    HomologyProfile,
    bareiss_rank,
    boundary_matrices,
    collapse_reduce,
    homological_connectivity,
    pi1_trivial_heuristic,
    profile_from_obj,
    profile_to_obj,
    reduced_homology,
    smith_normal_form,
)
from boxtopo.simplicial import (
    barycentric_subdivision,
    euler_characteristic,
    from_facets,
    nerve,
    star,
)

RP2 = from_facets(
    [
        [0, 1, 4], [0, 1, 5], [0, 2, 3], [0, 2, 4], [0, 3, 5],
        [1, 2, 3], [1, 2, 5], [1, 3, 4], [2, 4, 5], [3, 4, 5],
    ]
)
TRIANGLE_BOUNDARY = from_facets([[0, 1], [1, 2], [0, 2]])
TETRA_BOUNDARY = from_facets(list(itertools.combinations(range(4), 3)))


def gf2_rank(M: list[list[int]]) -> int:
    """Oracle: rank over GF(2) by plain elimination."""
    rows = [sum((x & 1) << j for j, x in enumerate(r)) for r in M]
    rank = 0
    for j in range(len(M[0]) if M else 0):
        pivot = next((i for i in range(rank, len(rows)) if rows[i] >> j & 1), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] >> j & 1:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


def matmul(A, B):
    return [
        [sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
        for i in range(len(A))
    ]


def test_boundary_matrix_single_edge():
    cc = boundary_matrices(from_facets([[1, 2]]))
    assert cc.boundary(1) == [[-1], [1]]


def test_boundary_matrix_triangle_boundary():
    cc = boundary_matrices(TRIANGLE_BOUNDARY)
    D1 = cc.boundary(1)
    assert len(D1) == 3 and len(D1[0]) == 3
    for j in range(3):
        col = [D1[i][j] for i in range(3)]
        assert sorted(col) == [-1, 0, 1]


def test_boundary_matrices_compose_to_zero():
    cc = boundary_matrices(TETRA_BOUNDARY)
    D1, D2 = cc.boundary(1), cc.boundary(2)
    assert len(D2) == 6 and len(D2[0]) == 4
    assert all(x == 0 for row in matmul(D1, D2) for x in row)


def test_boundary_matrices_reject_empty():
    with pytest.raises(ValueError):
        boundary_matrices(from_facets([]))


def test_snf_diag_2_3():
    assert smith_normal_form([[2, 0], [0, 3]]).factors == (1, 6)


def test_snf_zero_matrix():
    res = smith_normal_form([[0, 0], [0, 0]])
    assert res.rank == 0 and res.factors == ()


def test_snf_known_torsion():
    res = smith_normal_form([[2, 4], [6, 10]])
    assert res.factors == (2, 2)


def test_snf_divisibility_chain():
    random.seed(7)
    for _ in range(25):
        m, n = random.randint(1, 5), random.randint(1, 5)
        M = [[random.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        fac = smith_normal_form(M).factors
        assert all(fac[i + 1] % fac[i] == 0 for i in range(len(fac) - 1))
        assert smith_normal_form(M).rank == bareiss_rank(M)


def test_snf_invariant_under_permutations():
    random.seed(11)
    M = [[random.randint(-6, 6) for _ in range(4)] for _ in range(5)]
    base = smith_normal_form(M).factors
    for _ in range(5):
        rows = list(range(5))
        cols = list(range(4))
        random.shuffle(rows)
        random.shuffle(cols)
        P = [[M[i][j] for j in cols] for i in rows]
        assert smith_normal_form(P).factors == base


def test_reduced_homology_two_points():
    prof = reduced_homology(from_facets([[0], [1]]))
    assert prof.betti(0) == 1 and prof.top_dim == 0


def test_reduced_homology_circle():
    prof = reduced_homology(TRIANGLE_BOUNDARY)
    assert prof.betti(0) == 0 and prof.betti(1) == 1


def test_reduced_homology_point_and_empty():
    assert reduced_homology(from_facets([[0]])).is_trivial()
    assert reduced_homology(from_facets([])).is_trivial()


def test_reduced_homology_rp2():
    prof = reduced_homology(RP2)
    assert prof.betti(0) == 0 and prof.betti(1) == 0 and prof.betti(2) == 0
    assert prof.torsion(1) == (2,)
    # cross-check: over GF(2) the degree-1 homology does not vanish
    cc = boundary_matrices(RP2)
    D1, D2 = cc.boundary(1), cc.boundary(2)
    betti1_gf2 = 15 - gf2_rank(D1) - gf2_rank(D2)
    assert betti1_gf2 == 1 != prof.betti(1)


def test_collapse_solid_triangle_to_point():
    K = collapse_reduce(from_facets([[0, 1, 2]]))
    assert len(K.faces) == 1 and K.dim == 0


def test_collapse_leaves_circle_alone():
    assert collapse_reduce(TRIANGLE_BOUNDARY) == TRIANGLE_BOUNDARY


def test_collapse_preserves_homology_on_corpus():
    complexes = [RP2, TETRA_BOUNDARY, barycentric_subdivision(TRIANGLE_BOUNDARY)]
    for G in connected_graph_corpus(4):
        complexes.append(neighborhood_complex(G))
        complexes.append(box_complex(G).complex)
        complexes.append(box0_complex(G).complex)
    for K in complexes:
        assert reduced_homology(K, collapse=True) == reduced_homology(K, collapse=False)


def test_snf_betti_matches_rational_rank_on_corpus():
    for G in connected_graph_corpus(4):
        for K in (box_complex(G).complex, box0_complex(G).complex):
            if K.is_empty():
                continue
            cc = boundary_matrices(K)
            for k in range(1, K.dim + 1):
                M = cc.boundary(k)
                assert smith_normal_form(M).rank == bareiss_rank(M)


def test_homological_connectivity():
    assert homological_connectivity(from_facets([])) == -2
    assert homological_connectivity(from_facets([[0], [1]])) == -1
    assert homological_connectivity(TRIANGLE_BOUNDARY) == 0
    assert homological_connectivity(TETRA_BOUNDARY) == 1
    # acyclic complexes report their dimension (nothing above can fail)
    assert homological_connectivity(from_facets([[0, 1, 2]])) == 2


def test_reduced_euler_relation():
    for G in connected_graph_corpus(4):
        for K in (neighborhood_complex(G), box0_complex(G).complex):
            if K.is_empty():
                continue
            prof = reduced_homology(K)
            alt = sum((-1) ** k * prof.betti(k) for k in range(K.dim + 1))
            assert alt == euler_characteristic(K) - 1


def test_pi1_tetrahedron_boundary_trivial():
    assert pi1_trivial_heuristic(TETRA_BOUNDARY) is True


def test_pi1_circle_unknown():
    assert pi1_trivial_heuristic(TRIANGLE_BOUNDARY) is False


def test_pi1_point_trivial():
    assert pi1_trivial_heuristic(from_facets([[0]])) is True


def test_pi1_rejects_disconnected():
    with pytest.raises(ValueError):
        pi1_trivial_heuristic(from_facets([[0], [1]]))


def test_pi1_sphere_after_subdivision():
    assert pi1_trivial_heuristic(barycentric_subdivision(TETRA_BOUNDARY)) is True


def test_profile_json_roundtrip():
    prof = reduced_homology(RP2)
    assert profile_from_obj(profile_to_obj(prof)) == prof


def test_profile_shift():
    prof = HomologyProfile.from_pairs([(1, ()), (0, (2,))])
    shifted = prof.shifted()
    assert shifted.betti(1) == 1 and shifted.torsion(2) == (2,)
    assert shifted.betti(0) == 0


def test_nerve_theorem_at_desk_scale():
    # closed vertex stars of a subdivision have cone intersections, so the
    # nerve has the homology of the complex itself
    for base in (
        from_facets([[0, 1], [1, 2], [2, 3], [0, 3]]),
        from_facets([[0, 1, 2]]),
        from_facets([[0], [1]]),
        TETRA_BOUNDARY,
    ):
        K = barycentric_subdivision(base)
        family = [(v, star(K, (v,)).vertices) for v in K.vertices]
        assert reduced_homology(nerve(family)) == reduced_homology(K)
