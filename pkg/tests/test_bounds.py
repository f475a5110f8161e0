"""Bound values and theorem-verification outcomes on known graphs."""

from __future__ import annotations

import pytest

from boxtopo.bounds import (
    lovasz_bound,
    neighborhood_realizability_search,
    sarkaria_bound,
    suspension_shift,
    verify_cone_graph,
    verify_construction_roundtrip,
    verify_even_euler,
    verify_hom_equivalence,
    verify_nerve_identity,
    verify_shore_identity,
    verify_shore_retract,
    verify_suspension_relation,
)
from boxtopo.graphs import (
    chromatic_number,
    complete_graph,
    cone_k,
    connected_graph_corpus,
    cycle_graph,
    kneser_graph,
)
from boxtopo.homology import S0_PROFILE, reduced_homology
from boxtopo.simplicial import (
    antipodal_cycle_z2,
    from_facets,
    octahedron_z2,
    two_points_z2,
)

CORPUS = connected_graph_corpus(5)


def test_lovasz_k2():
    rep = lovasz_bound(complete_graph(2))
    assert rep.value == 2 and not rep.caveat


def test_lovasz_c5():
    rep = lovasz_bound(cycle_graph(5))
    assert rep.value == 3 == chromatic_number(cycle_graph(5))


def test_lovasz_petersen():
    rep = lovasz_bound(kneser_graph(5, 2))
    assert rep.value == 3
    # every edge of N(Petersen) lies in exactly one triangle; collapsing
    # leaves 20 edges on 10 vertices, a wedge of 11 circles
    assert rep.evidence.betti(0) == 0
    assert rep.evidence.betti(1) == 11
    assert rep.evidence.betti(2) == 0


def test_lovasz_degenerate_no_edges():
    rep = lovasz_bound(complete_graph(1))
    assert rep.value == 1 and rep.note is not None


def test_sarkaria_k2():
    assert sarkaria_bound(complete_graph(2)).value == 2


def test_sarkaria_k3():
    rep = sarkaria_bound(complete_graph(3))
    assert rep.value == 3
    assert rep.evidence.betti(2) == 1  # a 2-sphere profile


def test_sarkaria_c5():
    assert sarkaria_bound(cycle_graph(5)).value == 3


def test_bounds_sound_on_corpus():
    for G in CORPUS:
        chi = chromatic_number(G)
        lov = lovasz_bound(G)
        sar = sarkaria_bound(G)
        if not lov.caveat:
            assert lov.value <= chi
        if not sar.caveat:
            assert sar.value <= chi
        assert abs(sar.value - lov.value) <= 1


def test_suspension_relation_examples():
    assert verify_suspension_relation(complete_graph(1)).passed
    assert verify_suspension_relation(complete_graph(2)).passed


def test_suspension_shift_helper():
    assert suspension_shift(reduced_homology(from_facets([])), of_empty=True) == S0_PROFILE


def test_shore_retract_examples():
    assert verify_shore_retract(complete_graph(3)).passed
    assert verify_shore_retract(cycle_graph(5)).passed


def test_shore_identity_examples():
    for G in (complete_graph(3), cycle_graph(5), complete_graph(2)):
        assert verify_shore_identity(G).passed


def test_even_euler_examples():
    assert verify_even_euler(complete_graph(2)).passed
    assert verify_even_euler(complete_graph(3)).passed
    assert verify_even_euler(kneser_graph(5, 2)).passed
    with pytest.raises(ValueError):
        verify_even_euler(complete_graph(1))


def test_roundtrip_examples():
    assert verify_construction_roundtrip(two_points_z2()).passed
    assert verify_construction_roundtrip(antipodal_cycle_z2(4)).passed
    assert verify_construction_roundtrip(antipodal_cycle_z2(6)).passed


def test_nerve_identity_examples():
    assert verify_nerve_identity(two_points_z2()).passed
    assert verify_nerve_identity(antipodal_cycle_z2(4)).passed
    assert verify_nerve_identity(octahedron_z2()).passed


def test_cone_graph_examples():
    assert verify_cone_graph(complete_graph(2)).passed
    assert verify_cone_graph(cycle_graph(5)).passed


def test_hom_equivalence_examples():
    for G in (complete_graph(2), complete_graph(3), cycle_graph(5)):
        assert verify_hom_equivalence(G).passed


def test_failure_outcomes_carry_both_tables():
    out = verify_suspension_relation(complete_graph(2))
    assert "expected" in out.details and "observed" in out.details


def test_realizability_search_finds_k2():
    found = neighborhood_realizability_search(from_facets([[0], [1]]), 2)
    assert found == complete_graph(2)


def test_realizability_search_four_cycle_has_no_preimage():
    target = from_facets([[0, 1], [1, 2], [2, 3], [0, 3]])
    assert neighborhood_realizability_search(target, 4) is None


def test_realizability_search_finds_k3():
    target = from_facets([[0, 1], [1, 2], [0, 2]])
    assert neighborhood_realizability_search(target, 3) == complete_graph(3)


def test_realizability_search_guard():
    with pytest.raises(ValueError):
        neighborhood_realizability_search(from_facets([[0]]), 7)


def test_badness_amplifier_on_small_graphs():
    for G in (complete_graph(3), cycle_graph(5)):
        lov = lovasz_bound(G).value
        chi = chromatic_number(G)
        for k in (1, 2, 3):
            Gk = cone_k(G, k)
            assert lovasz_bound(Gk).value == lov + k
            assert chromatic_number(Gk) == chi + k
