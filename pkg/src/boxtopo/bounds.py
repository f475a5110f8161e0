"""Topological chromatic lower bounds and theorem-verification checks.

The bounds use homological connectivity, a surrogate for homotopy
connectivity.  Every report carries a caveat flag; it is cleared only
when the surrogate provably matches: connectivity <= 0 (where the two
notions coincide) or a successful simple-connectivity proof (which
upgrades homology vanishing through the checked range).

The verify_* checks test falsifiable homological consequences of
homotopy equivalences: equal Betti/torsion tables and matching Euler
characteristics.  A pass means "consistent with", not "proves".
"""

from __future__ import annotations

from dataclasses import dataclass

from .builders import (
    box_complex,
    box0_complex,
    hom_k2_order_complex,
    neighborhood_complex,
    shore_subcomplex,
)
from .graphs import (
    Graph,
    add_cone_vertex,
    all_labeled_graphs,
    chromatic_number,
    graph_from_z2_complex,
)
from .homology import (
    HomologyProfile,
    S0_PROFILE,
    collapse_reduce,
    homological_connectivity,
    pi1_trivial_heuristic,
    profile_to_obj,
    reduced_homology,
)
from .simplicial import (
    SimplicialComplex,
    Z2Complex,
    euler_characteristic,
    isomorphic,
    nerve,
    star,
    subdivide_involution,
)


@dataclass(frozen=True)
class BoundReport:
    """A named chromatic lower bound with its homological evidence."""

    graph: str
    bound: str  # "lovasz" | "sarkaria"
    value: int
    caveat: bool
    evidence: HomologyProfile
    exact_chi: int | None = None
    note: str | None = None

    def to_obj(self) -> dict:
        obj = {
            "graph": self.graph,
            "bound": self.bound,
            "value": self.value,
            "caveat": self.caveat,
            "evidence": profile_to_obj(self.evidence),
        }
        if self.exact_chi is not None:
            obj["exact_chi"] = self.exact_chi
        if self.note is not None:
            obj["note"] = self.note
        return obj


@dataclass(frozen=True)
class VerificationOutcome:
    """One check on one input; failures always carry both tables."""

    check: str
    input: str
    passed: bool
    details: dict

    def to_obj(self) -> dict:
        return {
            "check": self.check,
            "input": self.input,
            "passed": self.passed,
            "details": self.details,
        }


def _connectivity_with_caveat(K: SimplicialComplex) -> tuple[int, bool]:
    """Homological connectivity plus the surrogate caveat flag."""
    conn = homological_connectivity(K)
    if conn <= 0:
        return conn, False
    small = collapse_reduce(K)
    return conn, not pi1_trivial_heuristic(small)


def lovasz_bound(G: Graph) -> BoundReport:
    """connectivity(box complex) + 3; a lower bound for the chromatic number."""
    Z = box_complex(G)
    K = Z.complex
    conn, caveat = _connectivity_with_caveat(K)
    note = "degenerate input: box complex is empty (no edges)" if K.is_empty() else None
    return BoundReport(
        graph=G.descriptor(),
        bound="lovasz",
        value=conn + 3,
        caveat=caveat,
        evidence=reduced_homology(K),
        note=note,
    )


def sarkaria_bound(G: Graph) -> BoundReport:
    """connectivity(box complex without CN conditions) + 2."""
    Z = box0_complex(G)
    K = Z.complex
    conn, caveat = _connectivity_with_caveat(K)
    return BoundReport(
        graph=G.descriptor(),
        bound="sarkaria",
        value=conn + 2,
        caveat=caveat,
        evidence=reduced_homology(K),
    )


def _profile_table(p: HomologyProfile) -> dict:
    return profile_to_obj(p)


def suspension_shift(profile: HomologyProfile, *, of_empty: bool) -> HomologyProfile:
    """Expected profile of a suspension: degree shift, or S^0 for empty input."""
    if of_empty:
        return S0_PROFILE
    return profile.shifted()


def verify_suspension_relation(G: Graph) -> VerificationOutcome:
    """Homology of the CN-free box complex must be the suspension shift of
    the box complex's, and the Euler characteristics must mirror (2 - chi)."""
    B = box_complex(G)
    B0 = box0_complex(G)
    prof_b = reduced_homology(B.complex)
    prof_b0 = reduced_homology(B0.complex)
    expected = suspension_shift(prof_b, of_empty=B.complex.is_empty())
    chi_b = euler_characteristic(B.complex)
    chi_b0 = euler_characteristic(B0.complex)
    passed = prof_b0 == expected and chi_b0 == 2 - chi_b
    return VerificationOutcome(
        check="suspension-relation",
        input=G.descriptor(),
        passed=passed,
        details={
            "expected": {"profile": _profile_table(expected), "chi": 2 - chi_b},
            "observed": {"profile": _profile_table(prof_b0), "chi": chi_b0},
        },
    )


def verify_shore_retract(G: Graph) -> VerificationOutcome:
    """The neighborhood complex and the box complex must have equal homology."""
    prof_n = reduced_homology(neighborhood_complex(G))
    prof_b = reduced_homology(box_complex(G).complex)
    return VerificationOutcome(
        check="shore-retract",
        input=G.descriptor(),
        passed=prof_n == prof_b,
        details={
            "expected": {"profile": _profile_table(prof_n)},
            "observed": {"profile": _profile_table(prof_b)},
        },
    )


def verify_even_euler(G: Graph) -> VerificationOutcome:
    """chi of the box complex is even, checked numerically and by pairing
    the faces into orbits of size two under the shore swap."""
    if not G.edges:
        raise ValueError("even-Euler check needs at least one edge")
    Z = box_complex(G)
    K = Z.complex
    chi = euler_characteristic(K)
    act = Z.action
    orbits_ok = all(act.on_face(f) != f and act.on_face(f) in K.faces for f in K.faces)
    per_dim_even = all(c % 2 == 0 for c in K.f_vector())
    passed = chi % 2 == 0 and orbits_ok and per_dim_even
    return VerificationOutcome(
        check="even-euler",
        input=G.descriptor(),
        passed=passed,
        details={
            "expected": {"chi mod 2": 0, "free orbit pairing": True},
            "observed": {
                "chi": chi,
                "free orbit pairing": orbits_ok,
                "per-dimension face counts": list(K.f_vector()),
            },
        },
    )


def verify_construction_roundtrip(Z: Z2Complex) -> VerificationOutcome:
    """Subdivide, build the pair-and-neighbors graph, and compare homology:
    both the neighborhood and box complexes of the graph must match Z."""
    target = reduced_homology(Z.complex)
    sd = subdivide_involution(Z)
    G = graph_from_z2_complex(sd)
    prof_n = reduced_homology(neighborhood_complex(G))
    prof_b = reduced_homology(box_complex(G).complex)
    passed = prof_n == target and prof_b == target
    return VerificationOutcome(
        check="construction-roundtrip",
        input=f"Z2 complex |V|={len(Z.complex.vertices)} f={Z.complex.f_vector()}",
        passed=passed,
        details={
            "expected": {"profile": _profile_table(target)},
            "observed": {
                "neighborhood profile": _profile_table(prof_n),
                "box profile": _profile_table(prof_b),
                "graph": G.descriptor(),
            },
        },
    )


def verify_nerve_identity(Z: Z2Complex) -> VerificationOutcome:
    """Without subdivision: the neighborhood complex of the constructed
    graph equals the nerve of the vertex stars, face set for face set."""
    K = Z.complex
    G = graph_from_z2_complex(Z)
    N = neighborhood_complex(G)
    family = [(v, star(K, (v,)).vertices) for v in K.vertices]
    nerve_K = nerve(family)
    passed = N == nerve_K
    return VerificationOutcome(
        check="nerve-identity",
        input=f"Z2 complex |V|={len(K.vertices)} f={K.f_vector()}",
        passed=passed,
        details={
            "expected": {"faces": sorted(map(list, nerve_K.faces))},
            "observed": {"faces": sorted(map(list, N.faces))},
        },
    )


def verify_cone_graph(G: Graph, *, chi_guard: int = 20) -> VerificationOutcome:
    """Adding a dominating vertex suspends the box complex homology and
    raises the chromatic number by one (the chi check obeys the guard)."""
    Gp = add_cone_vertex(G)
    prof_b = reduced_homology(box_complex(G).complex)
    prof_bp = reduced_homology(box_complex(Gp).complex)
    expected = suspension_shift(prof_b, of_empty=box_complex(G).complex.is_empty())
    homology_ok = prof_bp == expected
    details: dict = {
        "expected": {"profile": _profile_table(expected)},
        "observed": {"profile": _profile_table(prof_bp)},
    }
    chi_ok = True
    if Gp.n <= chi_guard:
        chi_g = chromatic_number(G)
        chi_gp = chromatic_number(Gp)
        chi_ok = chi_gp == chi_g + 1
        details["expected"]["chi"] = chi_g + 1
        details["observed"]["chi"] = chi_gp
    else:
        details["observed"]["chi"] = "skipped (size guard)"
    return VerificationOutcome(
        check="cone-graph",
        input=G.descriptor(),
        passed=homology_ok and chi_ok,
        details=details,
    )


def verify_hom_equivalence(G: Graph) -> VerificationOutcome:
    """The Hom(K2, -) order complex and the box complex have equal homology."""
    prof_hom = reduced_homology(hom_k2_order_complex(G).complex)
    prof_b = reduced_homology(box_complex(G).complex)
    return VerificationOutcome(
        check="hom-equivalence",
        input=G.descriptor(),
        passed=prof_hom == prof_b,
        details={
            "expected": {"profile": _profile_table(prof_b)},
            "observed": {"profile": _profile_table(prof_hom)},
        },
    )


def verify_shore_identity(G: Graph) -> VerificationOutcome:
    """Each shore of the box complex is the neighborhood complex on the nose."""
    Z = box_complex(G)
    N = neighborhood_complex(G)
    s0 = shore_subcomplex(Z, 0)
    s1 = shore_subcomplex(Z, 1)
    passed = s0 == N and s1 == N
    return VerificationOutcome(
        check="shore-identity",
        input=G.descriptor(),
        passed=passed,
        details={
            "expected": {"faces": sorted(map(list, N.faces))},
            "observed": {
                "shore 0 faces": sorted(map(list, s0.faces)),
                "shore 1 faces": sorted(map(list, s1.faces)),
            },
        },
    )


def neighborhood_realizability_search(
    K: SimplicialComplex, n: int, *, max_n: int = 6
) -> Graph | None:
    """Exhaustive search for a graph on n labeled vertices whose
    neighborhood complex is isomorphic to K; None when there is none."""
    if n > max_n:
        raise ValueError(f"search over 2^C({n},2) graphs exceeds the guard ({max_n})")
    for G in all_labeled_graphs(n):
        N = neighborhood_complex(G)
        if len(N.vertices) != len(K.vertices) or N.f_vector() != K.f_vector():
            continue
        if isomorphic(N, K):
            return G
    return None
