"""Signed circuits, their equivalence, and tope-graph tests."""

import logging
from collections import Counter, deque
from dataclasses import dataclass
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from vg_algebra.arrangement import (
    QQ,
    Arrangement,
    SignVector,
    arrangement_rank,
    feasible,
    lattice,
)
from vg_algebra.exactla import Matrix, kernel
from vg_algebra.keys import ReportDefs
from vg_algebra.utils import sign, sign_vector_str, size_lex_subsets

log = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


def negate(sv: SignVector) -> SignVector:
    return tuple(-s for s in sv)


def support(sv: SignVector) -> FrozenSet[int]:
    return frozenset(i for i, s in enumerate(sv) if s != 0)


@dataclass(frozen=True)
class SignedCircuitSet:
    """Negation-closed set of signed circuits on the ground set
    range(n)."""

    n: int
    circuits: FrozenSet[SignVector]

    @classmethod
    def from_vectors(cls, n: int, vectors: Iterable[SignVector]) -> "SignedCircuitSet":
        closed = set()
        for vector in vectors:
            closed.add(tuple(vector))
            closed.add(negate(vector))
        return cls(n, frozenset(closed))

    def __len__(self) -> int:
        return len(self.circuits)

    def supports(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(support(c) for c in self.circuits)

    def representatives(self) -> Dict[FrozenSet[int], SignVector]:
        """One circuit per support: the one whose first nonzero entry is
        +."""
        result = {}
        for circuit in self.circuits:
            lead = next(s for s in circuit if s != 0)
            if lead > 0:
                result[support(circuit)] = circuit
        return result

    def reoriented(self, signs: Sequence[int]) -> "SignedCircuitSet":
        return SignedCircuitSet(
            self.n,
            frozenset(tuple(e * s for e, s in zip(signs, c)) for c in self.circuits))

    def permuted(self, perm: Sequence[int]) -> "SignedCircuitSet":
        """Move entry i of every circuit to position perm[i]."""
        moved = set()
        for circuit in self.circuits:
            image = [0] * self.n
            for i, s in enumerate(circuit):
                image[perm[i]] = s
            moved.add(tuple(image))
        return SignedCircuitSet(self.n, frozenset(moved))

    def sorted_strings(self) -> List[str]:
        return sorted(sign_vector_str(c) for c in self.circuits)


def signed_circuits(a: Arrangement) -> SignedCircuitSet:
    """Sign patterns of the minimal linear dependencies among the
    normals."""
    found: List[FrozenSet[int]] = []
    vectors = []
    max_size = min(a.n, arrangement_rank(a) + 1)
    for subset in size_lex_subsets(a.n, 2, max_size):
        members = frozenset(subset)
        if any(circuit <= members for circuit in found):
            continue
        columns = [a.normals[j] for j in subset]
        relations = kernel(Matrix.from_columns(QQ, columns, a.ell))
        if relations.rank != 1 or any(x == 0 for x in relations.rows[0]):
            continue
        circuit = [0] * a.n
        for j, value in zip(subset, relations.rows[0]):
            circuit[j] = sign(value)
        found.append(members)
        vectors.append(tuple(circuit))
    log.debug("%d circuit supports found", len(found))
    return SignedCircuitSet.from_vectors(a.n, vectors)


def circuit_cone_is_empty(a: Arrangement, circuit: SignVector) -> bool:
    """The open cone cut out by a signed circuit has no points."""
    constraints = tuple(s if s != 0 else 0 for s in circuit)
    sub = [i for i, s in enumerate(constraints) if s != 0]
    restricted = Arrangement(a.ell, tuple(a.normals[i] for i in sub),
                             tuple(a.labels[i] for i in sub))
    return feasible(restricted, tuple(constraints[i] for i in sub)) is None


def _fingerprints(n: int, sets: Sequence[FrozenSet[int]]) -> List[Tuple[int, ...]]:
    return [tuple(sorted(len(s) for s in sets if i in s)) for i in range(n)]


def set_system_isomorphisms(n: int, sets1: Iterable[FrozenSet[int]],
                            sets2: Iterable[FrozenSet[int]]) -> Iterator[Permutation]:
    """Permutations perm of range(n) with {perm(S) : S in sets1} = sets2.

    Candidates for each index are restricted to indices with the same
    fingerprint (sorted sizes of the sets through it); a set is checked
    as soon as its last element is assigned.
    """
    sets1 = sorted(set(sets1), key=sorted)
    sets2 = set(sets2)
    if len(sets1) != len(sets2):
        return
    if Counter(len(s) for s in sets1) != Counter(len(s) for s in sets2):
        return

    fp1 = _fingerprints(n, sets1)
    fp2 = _fingerprints(n, list(sets2))
    if Counter(fp1) != Counter(fp2):
        return

    closing: List[List[FrozenSet[int]]] = [[] for _ in range(n)]
    for s in sets1:
        if s:
            closing[max(s)].append(s)

    perm = [-1] * n
    used = [False] * n

    def extend(i: int) -> Iterator[Permutation]:
        if i == n:
            yield tuple(perm)
            return
        for j in range(n):
            if used[j] or fp1[i] != fp2[j]:
                continue
            perm[i] = j
            used[j] = True
            if all(frozenset(perm[x] for x in s) in sets2 for s in closing[i]):
                yield from extend(i + 1)
            used[j] = False
        perm[i] = -1

    yield from extend(0)


def _solve_reorientation(
        n: int, perm: Permutation, reps1: Mapping[FrozenSet[int], SignVector],
        reps2: Mapping[FrozenSet[int], SignVector]) -> Optional[Tuple[int, ...]]:
    """Signs eps with eps * perm(c) = +-c' for every matched pair, by
    propagation along shared supports."""
    neighbours: Dict[int, List[Tuple[int, int]]] = {j: [] for j in range(n)}
    for support1, circuit in reps1.items():
        image = [0] * n
        for i, s in enumerate(circuit):
            image[perm[i]] = s
        target = reps2[frozenset(perm[i] for i in support1)]
        ratio = {j: image[j] * target[j] for j in range(n) if image[j] != 0}
        members = sorted(ratio)
        anchor = members[0]
        for j in members[1:]:
            relative = ratio[anchor] * ratio[j]
            neighbours[anchor].append((j, relative))
            neighbours[j].append((anchor, relative))

    eps = [0] * n
    for start in range(n):
        if eps[start]:
            continue
        eps[start] = 1
        queue = deque([start])
        while queue:
            j = queue.popleft()
            for k, relative in neighbours[j]:
                wanted = eps[j] * relative
                if eps[k] == 0:
                    eps[k] = wanted
                    queue.append(k)
                elif eps[k] != wanted:
                    return None
    return tuple(eps)


def circuits_equivalent(
        c1: SignedCircuitSet,
        c2: SignedCircuitSet) -> Optional[Tuple[Permutation, Tuple[int, ...]]]:
    """Find (perm, eps) with eps * perm(c1) = c2, or None."""
    if c1.n != c2.n or len(c1) != len(c2):
        return None
    reps1 = c1.representatives()
    reps2 = c2.representatives()
    for perm in set_system_isomorphisms(c1.n, reps1.keys(), reps2.keys()):
        eps = _solve_reorientation(c1.n, perm, reps1, reps2)
        if eps is not None and c1.permuted(perm).reoriented(eps) == c2:
            return perm, eps
    return None


def reorientation_between(c1: SignedCircuitSet,
                          c2: SignedCircuitSet) -> Optional[Tuple[int, ...]]:
    """Find eps with eps * c1 = c2 on the same hyperplane labels, or
    None."""
    if c1.n != c2.n or c1.supports() != c2.supports():
        return None
    identity = tuple(range(c1.n))
    eps = _solve_reorientation(c1.n, identity, c1.representatives(),
                               c2.representatives())
    if eps is not None and c1.reoriented(eps) == c2:
        return eps
    return None


def lattices_isomorphic(a1: Arrangement, a2: Arrangement) -> Optional[Permutation]:
    """Relabelling of hyperplanes carrying the flats of a1 onto those of
    a2."""
    if a1.n != a2.n or a1.ell != a2.ell:
        return None
    flats1 = [flat.hyperplanes for flat in lattice(a1).flats]
    flats2 = [flat.hyperplanes for flat in lattice(a2).flats]
    return next(set_system_isomorphisms(a1.n, flats1, flats2), None)


def _refined_copy(g: nx.Graph) -> nx.Graph:
    """Copy of g whose nodes carry a colour made of degree and distance
    profile."""
    colored = nx.Graph()
    colored.add_nodes_from(g.nodes)
    colored.add_edges_from(g.edges)
    for node in g.nodes:
        lengths = nx.single_source_shortest_path_length(g, node)
        profile = tuple(sorted(Counter(lengths.values()).items()))
        colored.nodes[node]["color"] = (g.degree[node], profile)
    return colored


def _color_match(first: Mapping, second: Mapping) -> bool:
    return first["color"] == second["color"]


def degree_profile(g: nx.Graph) -> Dict[int, int]:
    """Number of vertices of each degree."""
    return dict(sorted(Counter(dict(g.degree).values()).items()))


def graph_isomorphic(g1: nx.Graph, g2: nx.Graph) -> Optional[Dict[int, int]]:
    """An isomorphism g1 -> g2, or None."""
    if g1.number_of_nodes() != g2.number_of_nodes() or \
            g1.number_of_edges() != g2.number_of_edges():
        return None
    r1, r2 = _refined_copy(g1), _refined_copy(g2)
    colors1 = Counter(data["color"] for _, data in r1.nodes(data=True))
    colors2 = Counter(data["color"] for _, data in r2.nodes(data=True))
    if colors1 != colors2:
        return None
    matcher = GraphMatcher(r1, r2, node_match=_color_match)
    for mapping in matcher.isomorphisms_iter():
        return dict(sorted(mapping.items()))
    return None


def graph_automorphisms(g: nx.Graph) -> Iterator[Dict[int, int]]:
    refined = _refined_copy(g)
    return GraphMatcher(refined, refined, node_match=_color_match).isomorphisms_iter()


def graph_automorphism_order(g: nx.Graph) -> int:
    return sum(1 for _ in graph_automorphisms(g))


Edge = Tuple[int, int]


def partial_cube_check(g: nx.Graph) -> Optional[List[FrozenSet[Edge]]]:
    """Djokovic-Winkler classes of g, or None if g is not a partial cube.

    Edges uv and xy are related iff d(u,x) + d(v,y) != d(u,y) + d(v,x).
    A connected bipartite graph is a partial cube iff this relation is
    transitive; its classes are then the cube coordinates.
    """
    if g.number_of_nodes() == 0 or not nx.is_connected(g) or not nx.is_bipartite(g):
        return None
    dist = dict(nx.all_pairs_shortest_path_length(g))
    edges = sorted(tuple(sorted(edge)) for edge in g.edges)

    def related(e: Edge, f: Edge) -> bool:
        (u, v), (x, y) = e, f
        return dist[u][x] + dist[v][y] != dist[u][y] + dist[v][x]

    parent = list(range(len(edges)))

    def find(k: int) -> int:
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for p in range(len(edges)):
        for q in range(p + 1, len(edges)):
            if related(edges[p], edges[q]):
                parent[find(p)] = find(q)

    groups: Dict[int, List[int]] = {}
    for k in range(len(edges)):
        groups.setdefault(find(k), []).append(k)

    for members in groups.values():
        for p in range(len(members)):
            for q in range(p + 1, len(members)):
                if not related(edges[members[p]], edges[members[q]]):
                    return None

    classes = [frozenset(edges[k] for k in members) for members in groups.values()]
    return sorted(classes, key=lambda c: min(c))


@dataclass(frozen=True)
class NecessaryCheckVerdict:
    """Outcome of the necessary tope-graph conditions, one entry per
    check."""

    checks: Tuple[Tuple[str, bool, str], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def reasons(self) -> List[str]:
        return [f"{name}: {reason}" for name, ok, reason in self.checks if not ok]

    def to_json(self) -> Dict[str, object]:
        return {
            ReportDefs.PASSED: self.passed,
            ReportDefs.RESULTS: {name: ok for name, ok, _ in self.checks},
            ReportDefs.FAILED: self.reasons,
        }


def tope_graph_necessary_check(g: nx.Graph, n: int, rank: int) -> NecessaryCheckVerdict:
    """Necessary conditions for g to be the tope graph of a rank-`rank`
    oriented matroid on n elements.

    Passing does not prove that g is such a tope graph.
    """
    classes = partial_cube_check(g)
    checks = [("partial_cube", classes is not None,
               "" if classes is not None else
               "Djokovic-Winkler relation is not transitive "
               "or the graph is not connected and bipartite")]

    count = len(classes) if classes is not None else -1
    checks.append(("theta_classes", count == n, f"{count} classes, expected {n}"))

    antipodal = g.number_of_nodes() > 0 and nx.is_connected(g)
    if antipodal:
        for node in g.nodes:
            lengths = nx.single_source_shortest_path_length(g, node)
            if sum(1 for d in lengths.values() if d == n) != 1:
                antipodal = False
                break
    checks.append(("antipodal", antipodal,
                   f"some vertex lacks a unique vertex at distance {n}"))

    min_degree = min((d for _, d in g.degree), default=0)
    checks.append(("min_degree", min_degree >= rank,
                   f"minimum degree {min_degree} < rank {rank}"))

    order = g.number_of_nodes()
    checks.append(("even_order", order % 2 == 0, f"{order} vertices"))

    return NecessaryCheckVerdict(tuple(checks))


def graph_to_dot(g: nx.Graph, name: str = "tope") -> str:
    """DOT text with nodes and edges in canonical order."""
    safe = "".join(ch if ch.isalnum() else "_" for ch in name) or "graph"
    lines = [f"graph {safe} {{"]
    for node in sorted(g.nodes):
        label = g.nodes[node].get("sign", str(node))
        lines.append(f'  {node} [label="{label}"];')
    for u, v in sorted(tuple(sorted(edge)) for edge in g.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: nx.Graph) -> Dict[str, object]:
    adjacency = nx.to_dict_of_lists(g)
    return {
        ReportDefs.NODES: [{
            "id": node,
            "label": g.nodes[node].get("sign", str(node))
        } for node in sorted(g.nodes)],
        ReportDefs.ADJACENCY: {str(node): sorted(adjacency[node])
                               for node in sorted(adjacency)},
    }
