"""
Tests signed circuits, equivalence searches and tope graph checks in
`omatroid.py`.
"""
import networkx as nx

from vg_algebra.arrangement import tope_graph
from vg_algebra.omatroid import (
    SignedCircuitSet,
    circuit_cone_is_empty,
    circuits_equivalent,
    degree_profile,
    graph_automorphism_order,
    graph_isomorphic,
    graph_to_dot,
    graph_to_json,
    lattices_isomorphic,
    partial_cube_check,
    reorientation_between,
    set_system_isomorphisms,
    signed_circuits,
    tope_graph_necessary_check,
)


def test_signed_circuits_pencil(pencil3):
    """ Test the single dependency of three concurrent lines """
    circuits = signed_circuits(pencil3)
    assert circuits.sorted_strings() == ["+++", "---"]

def test_signed_circuits_boolean(boolean3):
    """ Test independent normals have no circuits """
    assert len(signed_circuits(boolean3)) == 0

def test_signed_circuits_a3(a3):
    """ Test circuit supports of the braid arrangement """
    circuits = signed_circuits(a3)
    assert len(circuits) == 14
    sizes = sorted(len(s) for s in circuits.supports())
    assert sizes == [3, 3, 3, 3, 4, 4, 4]

def test_circuits_have_empty_cones(pencil3, a3):
    """ Test no point realizes the signs of a circuit """
    for a in (pencil3, a3):
        for circuit in signed_circuits(a).circuits:
            assert circuit_cone_is_empty(a, circuit)
    assert not circuit_cone_is_empty(pencil3, (1, -1, 0))

def test_representatives():
    """ Test representatives start with a plus sign """
    circuits = SignedCircuitSet.from_vectors(3, [(-1, 1, 0)])
    assert len(circuits) == 2
    assert circuits.representatives() == {frozenset({0, 1}): (1, -1, 0)}

def test_permuted_and_reoriented():
    """ Test relabelling and sign flips of circuits """
    circuits = SignedCircuitSet.from_vectors(3, [(1, 1, 0)])
    assert circuits.permuted((2, 0, 1)).sorted_strings() == ["+0+", "-0-"]
    assert circuits.reoriented((1, -1, 1)).sorted_strings() == ["+-0", "-+0"]

def test_set_system_isomorphisms_triangle():
    """ Test all symmetries of the edges of a triangle """
    edges = [frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})]
    assert len(list(set_system_isomorphisms(3, edges, edges))) == 6

def test_set_system_isomorphisms_none():
    """ Test set systems with different size statistics """
    first = [frozenset({0, 1}), frozenset({1, 2})]
    second = [frozenset({0, 1, 2}), frozenset({1})]
    assert list(set_system_isomorphisms(3, first, second)) == []

def test_circuits_equivalent_after_relabelling(a3):
    """ Test reorienting and permuting the normals gives equivalent circuits """
    other = a3.reoriented((1, -1, 1, -1, 1, 1)).permuted((5, 4, 3, 2, 1, 0))
    found = circuits_equivalent(signed_circuits(a3), signed_circuits(other))
    assert found is not None
    perm, eps = found
    assert signed_circuits(a3).permuted(perm).reoriented(eps) == signed_circuits(other)

def test_reorientation_between_same_labels(a3):
    """ Test sign flips are found without relabelling """
    circuits = signed_circuits(a3)
    assert reorientation_between(circuits, circuits) == (1,) * 6
    eps = (1, -1, 1, 1, -1, -1)
    assert reorientation_between(circuits, circuits.reoriented(eps)) == eps
    assert reorientation_between(circuits.reoriented(eps), circuits) == eps

def test_reorientation_between_rejects_relabelling(a3):
    """ Test a relabelled copy is equivalent but not a reorientation """
    circuits = signed_circuits(a3)
    swapped = signed_circuits(a3.permuted((1, 0, 2, 3, 4, 5)))
    assert reorientation_between(circuits, swapped) is None
    assert circuits_equivalent(circuits, swapped) is not None

def test_circuits_inequivalent_six_planes(generic6a, generic6b):
    """ Test the two generic six-plane arrangements are not equivalent """
    assert circuits_equivalent(signed_circuits(generic6a), signed_circuits(generic6b)) is None

def test_lattices_isomorphic(generic6a, generic6b, falk_a, falk_b):
    """ Test lattice isomorphism on both pairs """
    perm = lattices_isomorphic(generic6a, generic6b)
    assert perm is not None and sorted(perm) == list(range(6))
    assert lattices_isomorphic(falk_a, falk_b) is None

def test_degree_profile_six_planes(generic6a, generic6b):
    """ Test the degree-6 vertex fingerprint """
    assert degree_profile(tope_graph(generic6a)).get(6, 0) == 2
    assert degree_profile(tope_graph(generic6b)).get(6, 0) == 0
    assert graph_isomorphic(tope_graph(generic6a), tope_graph(generic6b)) is None

def test_graph_isomorphic_relabelled(a3):
    """ Test the tope graph is unchanged by reorienting the normals """
    other = a3.reoriented((-1, 1, 1, 1, -1, 1))
    mapping = graph_isomorphic(tope_graph(a3), tope_graph(other))
    assert mapping is not None
    assert sorted(mapping.values()) == list(range(24))

def test_graph_automorphism_orders(pencil3, a3):
    """ Test automorphism group orders of small tope graphs """
    assert graph_automorphism_order(tope_graph(pencil3)) == 12
    assert graph_automorphism_order(tope_graph(a3)) == 48

def test_graph_automorphism_order_square(boolean2):
    """ Test the four chambers of two lines form a square """
    assert graph_automorphism_order(tope_graph(boolean2)) == 8

def test_partial_cube_check(a3):
    """ Test Djokovic-Winkler classes of a tope graph and an odd cycle """
    classes = partial_cube_check(tope_graph(a3))
    assert classes is not None and len(classes) == 6
    assert partial_cube_check(nx.cycle_graph(5)) is None

def test_necessary_check_passes(a3):
    """ Test a genuine tope graph passes every necessary check """
    verdict = tope_graph_necessary_check(tope_graph(a3), 6, 3)
    assert verdict.passed
    assert verdict.reasons == []

def test_necessary_check_path():
    """ Test a path fails the antipodal and degree checks """
    verdict = tope_graph_necessary_check(nx.path_graph(4), 3, 2)
    assert not verdict.passed
    assert verdict.reasons == [
        "antipodal: some vertex lacks a unique vertex at distance 3",
        "min_degree: minimum degree 1 < rank 2",
    ]
    assert verdict.to_json()["results"]["partial_cube"]

def test_graph_to_dot(pencil3):
    """ Test canonical DOT output """
    dot = graph_to_dot(tope_graph(pencil3), "pencil3")
    lines = dot.splitlines()
    assert lines[0] == "graph pencil3 {"
    assert lines[1] == '  0 [label="++-"];'
    assert "  0 -- 2;" in lines
    assert lines[-1] == "}"

def test_graph_to_json(pencil3):
    """ Test the JSON form of a tope graph """
    document = graph_to_json(tope_graph(pencil3))
    assert document["nodes"][0] == {"id": 0, "label": "++-"}
    assert document["adjacency"]["0"] == [2, 4]
