"""
Tests chambers, tope graphs, restriction and the intersection lattice in
`arrangement.py`.
"""
import random
from fractions import Fraction

import networkx as nx
import pytest
import sympy

from vg_algebra.arrangement import (
    T,
    _eliminate,
    _strict_solve,
    arrangement_rank,
    betti,
    chambers,
    char_poly,
    char_poly_coefficients,
    closure,
    codim2_flats,
    deletion,
    feasible,
    is_generic_codim2,
    lattice,
    localization,
    random_arrangement,
    restriction,
    sep,
    tope_graph,
    zaslavsky_count,
)
from vg_algebra.errors import DomainException, UsageException
from vg_algebra.utils import sign_vector_str


def test_create_rejects_parallel(create_arrangement):
    """ Test parallel normals, including opposite ones """
    with pytest.raises(UsageException) as e:
        create_arrangement(2, [[1, 2], [-2, -4]])
    assert str(e.value) == "normals 0 and 1 are parallel"

def test_create_rejects_zero(create_arrangement):
    """ Test a zero normal """
    with pytest.raises(UsageException) as e:
        create_arrangement(2, [[0, 0]])
    assert str(e.value) == "normal 0 is zero"

def test_create_rejects_wrong_length(create_arrangement):
    """ Test a normal of the wrong length """
    with pytest.raises(UsageException) as e:
        create_arrangement(2, [[1, 0], [1]])
    assert str(e.value) == "normal 1 has 1 entries, expected 2"

def test_create_soft_limit(create_arrangement):
    """ Test the soft limit on the number of hyperplanes """
    normals = [[1, k] for k in range(17)]
    with pytest.raises(DomainException):
        create_arrangement(2, normals)

def test_create_default_labels(create_arrangement):
    """ Test default labels are 1-based """
    a = create_arrangement(2, [[1, 0], [0, 1]])
    assert a.labels == ("H1", "H2")

def test_hash_ignores_labels(create_arrangement):
    """ Test the content hash depends on the normals only """
    a = create_arrangement(2, [[1, 0], [0, 1]], ["x", "y"], "first")
    b = create_arrangement(2, [[1, 0], [0, 1]], ["u", "v"], "second")
    assert a.hash == b.hash
    assert a.reoriented([1, -1]).hash != a.hash

def test_chambers_boolean(boolean2):
    """ Test the four quadrants in plus-first lexicographic order """
    cs = chambers(boolean2)
    assert [sign_vector_str(sv) for sv in cs.chambers] == ["++", "+-", "-+", "--"]
    assert cs.position((-1, 1)) == 2

def test_chambers_pencil(pencil3):
    """ Test three concurrent lines cut out six chambers """
    cs = chambers(pencil3)
    assert [sign_vector_str(sv) for sv in cs.chambers] == \
        ["++-", "+-+", "+--", "-++", "-+-", "--+"]

def test_chamber_witnesses(a3):
    """ Test every witness realizes its sign vector exactly """
    cs = chambers(a3)
    assert len(cs) == 24
    for sv, point in zip(cs.chambers, cs.witnesses):
        for s, normal in zip(sv, a3.normals):
            value = sum(x * y for x, y in zip(normal, point))
            assert (value > 0) == (s > 0) and value != 0

def test_position_not_a_chamber(pencil3):
    """ Test looking up a sign vector that is not a chamber """
    with pytest.raises(UsageException) as e:
        chambers(pencil3).position((1, 1, 1))
    assert str(e.value) == "+++ is not a chamber"

def test_feasible(boolean2, pencil3):
    """ Test witnesses for faces and infeasible sign vectors """
    point = feasible(boolean2, (1, 0))
    assert point[0] > 0 and point[1] == 0
    assert feasible(pencil3, (1, 1, 1)) is None
    with pytest.raises(UsageException):
        feasible(pencil3, (1, 1))

def test_eliminate_prunes_large_histories():
    """ Test a combination of more input rows than allowed is dropped """
    system = {(Fraction(1), Fraction(1)): frozenset([0, 1]),
              (Fraction(1), Fraction(-1)): frozenset([2, 3])}
    assert _eliminate(system, 1, 2) == {}
    assert _eliminate(system, 1, 3) == {(Fraction(1), Fraction(0)): frozenset(range(4))}

def test_eliminate_keeps_smallest_history():
    """ Test duplicate rows keep the shorter history """
    one, zero = Fraction(1), Fraction(0)
    system = {(one, one, one): frozenset([2, 3]),
              (one, -one, -one): frozenset([4]),
              (one, zero, one): frozenset([0]),
              (one, zero, -one): frozenset([1])}
    combined = _eliminate(system, 2, 3)
    assert combined[(one, zero, zero)] == frozenset([0, 1])
    assert combined[(one, one / 2, zero)] == frozenset([1, 2, 3])
    assert len(combined) == 3

def test_strict_solve_redundant_rows():
    """ Test witnesses survive redundant rows and contradictions are found """
    rng = random.Random(5)
    units = [tuple(Fraction(int(i == j)) for j in range(4)) for i in range(4)]
    rows = units + [tuple(Fraction(rng.randint(0, 3)) for _ in range(4))
                    for _ in range(12)]
    rows = [row for row in rows if any(row)]
    point = _strict_solve(rows, 4)
    assert all(sum(r * x for r, x in zip(row, point)) > 0 for row in rows)
    assert _strict_solve(rows + [tuple(-x for x in rows[-1])], 4) is None
    assert _strict_solve(units + [(Fraction(-1),) * 4], 4) is None

def test_sep(pencil3):
    """ Test separating sets """
    cs = chambers(pencil3)
    assert sep(cs, 0, 0) == frozenset()
    assert sep(cs, 0, 5) == frozenset({0, 1, 2})
    assert sep(cs, 0, 2) == frozenset({1})

def test_tope_graph_pencil(pencil3):
    """ Test the tope graph of three lines is a hexagon """
    graph = tope_graph(pencil3)
    assert graph.number_of_nodes() == 6
    assert graph.number_of_edges() == 6
    assert all(d == 2 for _, d in graph.degree)
    assert nx.is_bipartite(graph)
    assert graph.edges[0, 2]["wall"] == 1

def test_tope_graph_distance_is_separation(a3):
    """ Test graph distance equals the number of separating hyperplanes """
    cs = chambers(a3)
    distances = dict(nx.all_pairs_shortest_path_length(tope_graph(a3)))
    for c1 in range(len(cs)):
        for c2 in range(len(cs)):
            assert distances[c1][c2] == len(sep(cs, c1, c2))

def test_restriction_pencil(pencil3):
    """ Test restricting three lines to one of them merges the others """
    res = restriction(pencil3, 0)
    assert res.arrangement.ell == 1
    assert res.arrangement.n == 1
    assert res.back_reference[0] is None
    assert res.back_reference[1][0] == res.back_reference[2][0] == 0
    assert len(res.lifts) == 2
    cs = chambers(pencil3)
    for plus, minus in res.lifts:
        assert sep(cs, plus, minus) == frozenset({0})
        assert cs.chambers[plus][0] == 1

def test_restriction_out_of_range(pencil3):
    """ Test an invalid hyperplane index """
    with pytest.raises(UsageException) as e:
        restriction(pencil3, 3)
    assert str(e.value) == "hyperplane index 3 out of range for n=3"

def test_deletion_restriction_counts(a3, generic6a):
    """ Test chambers split into those of the deletion and the restriction """
    for a in (a3, generic6a):
        for i in range(a.n):
            assert len(chambers(a)) == \
                len(chambers(deletion(a, i))) + len(chambers(restriction(a, i).arrangement))

def test_lattice_a3(a3):
    """ Test the rank-2 flats of the braid arrangement """
    flats = codim2_flats(a3)
    assert len(flats) == 7
    sizes = sorted(len(flat.hyperplanes) for flat in flats)
    assert sizes == [2, 2, 2, 3, 3, 3, 3]
    lat = lattice(a3)
    assert all(lat.mobius[flat.hyperplanes] == len(flat.hyperplanes) - 1 for flat in flats)

def test_closure(a3):
    """ Test closing a pair of a triple line """
    assert closure(a3, [0, 1]) == frozenset({0, 1, 2})
    assert closure(a3, [0, 3]) == frozenset({0, 3})

def test_localization(a3):
    """ Test localizing at a triple line """
    local = localization(a3, frozenset({0, 1, 2}))
    assert local.n == 3
    assert arrangement_rank(local) == 2

def test_char_poly_a3(a3):
    """ Test the characteristic polynomial of the braid arrangement """
    assert char_poly_coefficients(a3) == (1, -6, 11, -6)
    assert char_poly(a3) == sympy.Poly((T - 1) * (T - 2) * (T - 3), T)
    assert betti(a3) == (1, 6, 11, 6)

def test_zaslavsky(pencil3, a3, generic6a, falk_a):
    """ Test the chamber count from the Betti numbers """
    for a in (pencil3, a3, generic6a, falk_a):
        assert zaslavsky_count(a) == len(chambers(a))

def test_generic_codim2(a3, generic6a, boolean3):
    """ Test the codimension 2 genericity check """
    assert not is_generic_codim2(a3)
    assert is_generic_codim2(generic6a)
    assert is_generic_codim2(boolean3)

def test_random_arrangement_generic():
    """ Test seeded random generic arrangements """
    a = random_arrangement(random.Random(1), 6, 3, generic=True)
    b = random_arrangement(random.Random(1), 6, 3, generic=True)
    assert a == b
    assert a.n == 6
    assert is_generic_codim2(a)

def test_random_arrangement_gives_up():
    """ Test too many normals for the entry bound """
    with pytest.raises(DomainException):
        random_arrangement(random.Random(0), 5, 1, max_attempts=50)
