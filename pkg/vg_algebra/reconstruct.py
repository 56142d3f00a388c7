"""Recovering combinatorial data from the filtered and graded algebras.

Reconstruction looks at chamber functions, their degrees and products.
The one place geometry enters is `gheav_bruteforce`, which enumerates
the generalized Heaviside functions by walking the tope graph of the
arrangement. Otherwise the geometric tope graph and signed circuits are
only the comparison target. Recovered signed circuits are indexed by the
hyperplane whose Heaviside class spans each generator line, so they are
compared with the geometric ones up to reorientation alone.
"""

import logging
import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from vg_algebra.arrangement import (
    QQ,
    Arrangement,
    arrangement_rank,
    betti,
    chambers,
    is_generic_codim2,
    tope_graph,
)
from vg_algebra.errors import DomainException, InvariantViolation, UsageException
from vg_algebra.exactla import FieldSpec, Matrix, Vector, kernel, rank
from vg_algebra.keys import ReportDefs
from vg_algebra.omatroid import (
    NecessaryCheckVerdict,
    SignedCircuitSet,
    circuits_equivalent,
    graph_automorphism_order,
    graph_automorphisms,
    graph_isomorphic,
    reorientation_between,
    signed_circuits,
    tope_graph_necessary_check,
)
from vg_algebra.utils import sign_vector_str
from vg_algebra.vgalgebra import (
    FilChain,
    GradedClass,
    VGElement,
    constant,
    fil_chain,
    gheav_bruteforce,
    heaviside,
    primitive_idempotents,
    sqzero,
)

log = logging.getLogger(__name__)

EXHAUSTIVE = "exhaustive"
RANDOM = "random"

GRADED_HEADER = ("unit choices restricted to +-1 times the normalized representative "
                 "of each square-zero line; choices made of Heaviside lines are "
                 "ordered by hyperplane and compared up to reorientation, others up "
                 "to reorientation and relabelling")
FILTERED_HEADER = ("a choice and its complements give the same graph, so choices "
                   "are enumerated as sets of complementary pairs; each represents "
                   "2^n choices")


def _pairs(elements: Sequence[VGElement]) -> List[Tuple[int, int]]:
    """Index pairs (i, j), i < j, with elements[i] + elements[j] = 1."""
    position = {element: k for k, element in enumerate(elements)}
    pairs = []
    for k, element in enumerate(elements):
        partner = position.get(element.complement())
        if partner is None:
            raise InvariantViolation(
                "generalized Heaviside set is not closed under 1 - y")
        if k < partner:
            pairs.append((k, partner))
    return pairs


def recover_tope_graph_from_heav(a: Arrangement, field: FieldSpec = QQ) -> nx.Graph:
    """Tope graph rebuilt from the algebra alone, valid when every
    generalized Heaviside function is a Heaviside function.

    Raises:
        DomainException: if there are not exactly 2n generalized
            Heaviside functions
    """
    idempotents = primitive_idempotents(a, field)
    functions = gheav_bruteforce(a, field)
    if len(functions) != 2 * a.n:
        raise DomainException(
            f"found {len(functions)} generalized Heaviside functions, "
            f"expected {2 * a.n}: "
            "not codim-2 generic; use the conjecture harness")
    _pairs(functions)

    # f * 1_C is f(C) * 1_C, so comparing products reduces to comparing values
    points = [next(k for k, v in enumerate(e.values) if v == field.one)
              for e in idempotents]
    graph = nx.Graph()
    graph.add_nodes_from(range(len(idempotents)))
    for c1, c2 in combinations(range(len(idempotents)), 2):
        differing = sum(1 for f in functions
                        if f.values[points[c1]] != f.values[points[c2]])
        if differing == 2:
            graph.add_edge(c1, c2)
    log.debug("recovered graph with %d edges", graph.number_of_edges())
    return graph


def heaviside_distance(a: Arrangement, c1: int, c2: int, field: FieldSpec = QQ) -> int:
    """Number of Heaviside functions taking different values on two
    chambers; twice their separation."""
    distance = 0
    for i in range(a.n):
        for side in (1, -1):
            h = heaviside(a, i, side, field)
            if h.values[c1] != h.values[c2]:
                distance += 1
    return distance


@dataclass(frozen=True)
class GToGraphChoice:
    """n generalized Heaviside functions, with their indices in the
    enumeration order, and whether {1, y_1, ..., y_n} is a basis of
    Fil^1."""

    elements: Tuple[VGElement, ...]
    indices: Tuple[int, ...]
    is_basis: bool

    @classmethod
    def from_indices(cls, a: Arrangement, field: FieldSpec,
                     indices: Sequence[int]) -> "GToGraphChoice":
        functions = gheav_bruteforce(a, field)
        if len(indices) != a.n or any(not 0 <= k < len(functions) for k in indices):
            raise UsageException(
                f"a choice needs {a.n} indices below {len(functions)}, "
                f"got {list(indices)}")
        return cls.from_elements(a, field, [functions[k] for k in indices], indices)

    @classmethod
    def from_elements(cls,
                      a: Arrangement,
                      field: FieldSpec,
                      elements: Sequence[VGElement],
                      indices: Sequence[int] = ()) -> "GToGraphChoice":
        rows = [constant(a, 1, field).values] + [e.values for e in elements]
        is_basis = (len(elements) == a.n
                    and rank(Matrix.from_rows(field, rows)) == a.n + 1)
        return cls(tuple(elements), tuple(indices), is_basis)


def generalized_tope_graph(a: Arrangement, choice: GToGraphChoice) -> nx.Graph:
    """Chambers joined when exactly one chosen function separates them."""
    size = len(chambers(a))
    patterns = [tuple(e.values[c] for e in choice.elements) for c in range(size)]
    graph = nx.Graph()
    for c in range(size):
        label = "".join("+" if v == 1 else "-" for v in patterns[c])
        graph.add_node(c, sign=label)
    for c1, c2 in combinations(range(size), 2):
        if sum(1 for u, v in zip(patterns[c1], patterns[c2]) if u != v) == 1:
            graph.add_edge(c1, c2)
    return graph


@dataclass
class HarnessReport:
    """Tally of a conjecture harness run; counterexamples carry what is
    needed to replay them."""

    kind: str
    arrangement_hash: str
    field: str
    mode: str
    seed: Optional[int] = None
    trials: Optional[int] = None
    header: str = ""
    counts: Dict[str, int] = dataclass_field(default_factory=dict)
    counterexamples: List[Dict[str, object]] = dataclass_field(default_factory=list)
    choices: List[Dict[str, object]] = dataclass_field(default_factory=list)

    def tally(self, key: str, amount: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + amount

    @property
    def consistent(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> Dict[str, object]:
        return {
            ReportDefs.KIND: self.kind,
            ReportDefs.ARRANGEMENT_HASH: self.arrangement_hash,
            ReportDefs.FIELD: self.field,
            ReportDefs.MODE: self.mode,
            ReportDefs.SEED: self.seed,
            ReportDefs.TRIALS: self.trials,
            ReportDefs.HEADER: self.header,
            ReportDefs.COUNTS: dict(sorted(self.counts.items())),
            ReportDefs.COUNTEREXAMPLES: self.counterexamples,
            ReportDefs.CHOICES: self.choices,
        }


def _filtered_outcome(a: Arrangement, field: FieldSpec,
                      indices: Tuple[int, ...]) -> str:
    """Classify one choice: not-basis, fails-check, isomorphic or
    counterexample."""
    choice = GToGraphChoice.from_indices(a, field, indices)
    if not choice.is_basis:
        return "not_basis"
    graph = generalized_tope_graph(a, choice)
    verdict: NecessaryCheckVerdict = tope_graph_necessary_check(
        graph, a.n, arrangement_rank(a))
    if not verdict.passed:
        return "fails_check"
    if graph_isomorphic(graph, tope_graph(a)) is None:
        return "counterexample"
    return "isomorphic"


def _filtered_batch(
        job: Tuple[Arrangement, FieldSpec, List[Tuple[int, ...]]]) -> List[str]:
    a, field, batch = job
    return [_filtered_outcome(a, field, indices) for indices in batch]


def _run_batches(a: Arrangement, field: FieldSpec, candidates: List[Tuple[int, ...]],
                 jobs: int) -> List[str]:
    """Outcomes in candidate order, optionally computed by worker
    processes."""
    if jobs <= 1 or len(candidates) < 2 * jobs:
        return _filtered_batch((a, field, candidates))
    size = math.ceil(len(candidates) / jobs)
    batches = [(a, field, candidates[k:k + size])
               for k in range(0, len(candidates), size)]
    outcomes: List[str] = []
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        for result in executor.map(_filtered_batch, batches):
            outcomes.extend(result)
    return outcomes


def conjecture_harness_filtered(a: Arrangement,
                                field: FieldSpec = QQ,
                                mode: str = EXHAUSTIVE,
                                seed: int = 0,
                                trials: int = 100,
                                jobs: int = 1) -> HarnessReport:
    """Run the generalized tope graph experiment over choices of n
    generalized Heaviside functions.

    Args:
        a: the arrangement
        field (optional): coefficient field, characteristic 2 is rejected
        mode (optional): 'exhaustive' or 'random'
        seed (optional): seed of the random mode
        trials (optional): number of random samples
        jobs (optional): worker processes; outputs do not depend on it

    Raises:
        UsageException: on an unknown mode
    """
    field.require_odd_characteristic("filtered conjecture harness")
    functions = gheav_bruteforce(a, field)
    pairs = _pairs(functions)
    report = HarnessReport("filtered", a.hash, field.name, mode, header=FILTERED_HEADER)

    if mode == EXHAUSTIVE:
        subsets = list(combinations(range(len(pairs)), a.n))
    elif mode == RANDOM:
        report.seed, report.trials = seed, trials
        rng = random.Random(seed)
        subsets = [tuple(sorted(rng.sample(range(len(pairs)), a.n)))
                   for _ in range(trials)] if len(pairs) >= a.n else []
    else:
        raise UsageException(f"unknown harness mode {mode!r}")

    candidates = [tuple(pairs[p][0] for p in subset) for subset in subsets]
    outcomes = _run_batches(a, field, candidates, jobs)
    heavisides = {heaviside(a, i, side, field) for i in range(a.n) for side in (1, -1)}
    represented = 2**a.n
    for indices, outcome in zip(candidates, outcomes):
        report.tally("examined")
        report.tally("represented_choices", represented)
        if outcome == "not_basis":
            continue
        report.tally("basis_valid")
        if outcome == "fails_check":
            continue
        report.tally("passing")
        if any(functions[k] not in heavisides for k in indices):
            report.tally("passing_generalized")
        if outcome == "isomorphic":
            report.tally("isomorphic")
            continue
        log.warning("choice %s passes every necessary check but is not isomorphic "
                    "to the tope graph", list(indices))
        report.counterexamples.append({
            ReportDefs.ARRANGEMENT_HASH: a.hash,
            ReportDefs.CHOICES: list(indices),
            ReportDefs.SEED: report.seed,
        })
    report.tally("counterexamples", len(report.counterexamples))
    log.debug("filtered harness: %s", report.counts)
    return report


@dataclass(frozen=True)
class AutGroups:
    """Orders of the tope-graph, filtered and set automorphism groups."""

    graph_order: int
    filtered_order: int
    set_order: int
    generic: bool

    @property
    def inclusion_holds(self) -> bool:
        return self.filtered_order % self.graph_order == 0 and \
            self.set_order % self.filtered_order == 0


def _filtered_automorphism_count(a: Arrangement, functions: Sequence[VGElement]) -> int:
    """Tuples (g_1, ..., g_n) whose value patterns are exactly the
    chamber sign patterns, pruned on the multiset of prefixes."""
    cs = chambers(a)
    one = functions[0].field.one if functions else 1
    targets = [
        Counter(tuple(1 if s > 0 else 0 for s in sv[:k]) for sv in cs.chambers)
        for k in range(a.n + 1)
    ]
    bits = [tuple(1 if v == one else 0 for v in g.values) for g in functions]

    def extend(k: int, prefixes: Tuple[Tuple[int, ...], ...]) -> int:
        if k == a.n:
            return 1
        total = 0
        for g in bits:
            extended = tuple(p + (g[c], ) for c, p in enumerate(prefixes))
            if Counter(extended) == targets[k + 1]:
                total += extend(k + 1, extended)
        return total

    return extend(0, tuple(() for _ in cs.chambers))


def aut_groups(a: Arrangement, field: FieldSpec = QQ) -> AutGroups:
    """Compare the automorphism groups of the tope graph, the filtered
    algebra and the chamber set.

    Every tope-graph automorphism is checked to pull each Heaviside
    function back to a generalized Heaviside function.

    Raises:
        InvariantViolation: if an inclusion or, for codim-2 generic input,
            the equality of the first two orders fails
    """
    graph = tope_graph(a)
    functions = gheav_bruteforce(a, field)
    members = set(functions)
    for sigma in graph_automorphisms(graph):
        for i in range(a.n):
            x = heaviside(a, i, 1, field)
            pulled = VGElement(tuple(x.values[sigma[c]] for c in range(len(x.values))),
                               field, a)
            if pulled not in members:
                raise InvariantViolation(
                    "tope graph automorphism does not preserve degree one "
                    f"at {a.labels[i]}")

    result = AutGroups(graph_automorphism_order(graph),
                       _filtered_automorphism_count(a, functions),
                       math.factorial(len(chambers(a))), is_generic_codim2(a))
    if not result.inclusion_holds:
        raise InvariantViolation(f"automorphism orders {result} violate the inclusions")
    if result.generic and field.characteristic != 2 and \
            result.graph_order != result.filtered_order:
        raise InvariantViolation(
            f"codim-2 generic input with graph order {result.graph_order} "
            f"and filtered order {result.filtered_order}")
    return result


def _require_generators(fc: FilChain, f: Sequence[GradedClass]) -> None:
    n = fc.graded_dims[1] if fc.top >= 1 else 0
    if len(f) != n or any(g.degree != 1 for g in f):
        raise DomainException(f"need {n} degree-one generators, got {len(f)}")
    if n and rank(Matrix.from_rows(fc.field, [g.coordinates for g in f])) != n:
        raise DomainException("generators do not span grVG^1")
    for k, g in enumerate(f):
        if not fc.graded_mult(g, g).is_zero():
            raise DomainException(f"generator {k + 1} does not square to zero")


def _products(fc: FilChain,
              f: Sequence[GradedClass]) -> Iterator[Tuple[FrozenSet[int], bool]]:
    """(S, f_S is zero) for subsets S in size-lex order, skipping
    supersets of subsets whose product already vanished."""
    cache: Dict[FrozenSet[int], GradedClass] = {}
    vanished: List[FrozenSet[int]] = []
    for size in range(1, min(len(f), fc.top + 1) + 1):
        for subset in combinations(range(len(f)), size):
            members = frozenset(subset)
            if any(v <= members for v in vanished):
                continue
            if size == 1:
                value = f[subset[0]]
            else:
                value = fc.graded_mult(cache[frozenset(subset[:-1])], f[subset[-1]])
            cache[members] = value
            zero = value.is_zero()
            if zero:
                vanished.append(members)
            yield members, zero


def detect_circuits_from_products(fc: FilChain,
                                  f: Sequence[GradedClass]) -> List[FrozenSet[int]]:
    """Subsets S with f_S = 0 whose proper subsets all have nonzero
    products.

    Raises:
        DomainException: if the generators do not span grVG^1 or some
            generator does not square to zero
    """
    _require_generators(fc, f)
    nonzero = set()
    circuits = []
    for members, zero in _products(fc, f):
        if not zero:
            nonzero.add(members)
        elif all(members - {i} in nonzero for i in members):
            circuits.append(members)
    return circuits


def deleted_product(fc: FilChain, f: Sequence[GradedClass],
                    subset: Sequence[int]) -> GradedClass:
    result = None
    for i in subset:
        result = f[i] if result is None else fc.graded_mult(result, f[i])
    if result is None:
        return fc.graded_class(constant(fc.arrangement, 1, fc.field), 0)
    return result


def circuit_relation(fc: FilChain, f: Sequence[GradedClass],
                     circuit: FrozenSet[int]) -> Tuple[object, ...]:
    """Normalized relation among the products f_{I minus i}, i in I.

    Raises:
        InvariantViolation: if the relation is not unique up to scalar or
            has a zero entry
    """
    members = sorted(circuit)
    columns = [deleted_product(fc, f, [i for i in members if i != m]).coordinates
               for m in members]
    relations = kernel(Matrix.from_columns(fc.field, columns, len(columns[0])))
    if relations.rank != 1:
        raise InvariantViolation(
            f"circuit {[m + 1 for m in members]} has {relations.rank} "
            "independent relations")
    relation = relations.rows[0]
    if any(fc.field.is_zero(x) for x in relation):
        raise InvariantViolation(
            f"relation of circuit {[m + 1 for m in members]} has a zero entry")
    inverse = fc.field.inv(relation[0])
    return tuple(fc.field.mul(inverse, x) for x in relation)


@dataclass(frozen=True)
class RecoveredCircuits:
    """Signed circuits read off good generators, with the relation of
    each circuit support."""

    circuits: SignedCircuitSet
    scalars: Tuple[object, ...]
    relations: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]


def _unit_sign(field: FieldSpec, x: object) -> Optional[int]:
    if x == field.one:
        return 1
    if x == field.neg(field.one):
        return -1
    return None


def check_circuits(fc: FilChain,
                   f: Sequence[GradedClass],
                   scalars: Sequence[object] = ()) -> RecoveredCircuits:
    """Sign vectors of the circuit relations of good generators.

    Raises:
        DomainException: if some relation has an entry other than +-1
    """
    n = len(f)
    vectors = []
    relations = []
    for members in detect_circuits_from_products(fc, f):
        relation = circuit_relation(fc, f, members)
        signs = [_unit_sign(fc.field, x) for x in relation]
        ordered = sorted(members)
        if any(s is None for s in signs):
            raise DomainException(
                f"not good generators: circuit {[m + 1 for m in ordered]} has relation "
                f"{[fc.field.to_str(x) for x in relation]}")
        vector = [0] * n
        for m, s in zip(ordered, signs):
            vector[m] = s
        vectors.append(tuple(vector))
        relations.append((tuple(m + 1 for m in ordered), tuple(signs)))
    return RecoveredCircuits(SignedCircuitSet.from_vectors(n, vectors), tuple(scalars),
                             tuple(relations))


def _line_class(fc: FilChain, line: Sequence[object],
                scalar: object = 1) -> GradedClass:
    cls = GradedClass(1, tuple(line), fc.field, fc.arrangement)
    return cls.scaled(scalar)


def heaviside_lines(fc: FilChain, lines: Sequence[Vector]) -> Tuple[Optional[int], ...]:
    """Hyperplane i whose class x_i spans each line, or None for a line
    through no Heaviside class."""
    a, field = fc.arrangement, fc.field
    spans = {
        fc.graded_class(heaviside(a, i, 1, field), 1).normalized(): i
        for i in range(a.n)
    }
    return tuple(spans.get(tuple(line)) for line in lines)


@dataclass(frozen=True)
class RecoveryVerdict:
    """Recovered circuits and the signs eps with eps * recovered equal to
    the geometric circuits, if any."""

    recovered: RecoveredCircuits
    reorientation: Optional[Tuple[int, ...]]

    @property
    def equivalent(self) -> bool:
        return self.reorientation is not None


def recover_and_compare(a: Arrangement, field: FieldSpec = QQ,
                        scalars: Optional[Sequence[object]] = None) -> RecoveryVerdict:
    """Recover signed circuits from scaled square-zero generators and
    compare them with the geometric ones.

    Raises:
        DomainException: on characteristic 2, non codim-2 generic input or
            generators that are not good
    """
    field.require_odd_characteristic("signed circuit recovery")
    if not is_generic_codim2(a):
        raise DomainException(
            "signed circuit recovery needs a codim-2 generic arrangement")
    fc = fil_chain(a, field)
    lines = sqzero(a, field)
    if len(lines) != a.n:
        raise InvariantViolation(f"{len(lines)} square-zero lines for n={a.n}")
    by_hyperplane = {
        i: line
        for line, i in zip(lines, heaviside_lines(fc, lines)) if i is not None
    }
    if len(by_hyperplane) != a.n:
        raise InvariantViolation(
            f"only {len(by_hyperplane)} of {a.n} square-zero lines carry a "
            "Heaviside class")
    if scalars is None:
        scalars = [1] * a.n
    if len(scalars) != a.n:
        raise UsageException(f"{len(scalars)} scalars given for {a.n} generators")
    scalars = [field.element(mu) for mu in scalars]
    if any(field.is_zero(mu) for mu in scalars):
        raise UsageException("scalars must be units")
    generators = [_line_class(fc, by_hyperplane[i], mu) for i, mu in enumerate(scalars)]
    recovered = check_circuits(fc, generators, scalars)
    reorientation = reorientation_between(recovered.circuits, signed_circuits(a))
    return RecoveryVerdict(recovered, reorientation)


def conjecture_harness_graded(a: Arrangement,
                              field: FieldSpec = QQ,
                              mode: str = EXHAUSTIVE,
                              seed: int = 0,
                              trials: int = 100) -> HarnessReport:
    """Classify generator choices drawn from the square-zero lines as
    not good, good and equivalent, or good and inequivalent.

    Raises:
        UsageException: on an unknown mode
    """
    field.require_odd_characteristic("graded conjecture harness")
    fc = fil_chain(a, field)
    lines = sqzero(a, field)
    n = fc.graded_dims[1] if fc.top >= 1 else 0
    target = signed_circuits(a)
    report = HarnessReport("graded", a.hash, field.name, mode, header=GRADED_HEADER)

    spanning = [
        subset for subset in combinations(range(len(lines)), n)
        if n == 0 or rank(Matrix.from_rows(field, [lines[k] for k in subset])) == n
    ]
    if mode == EXHAUSTIVE:
        candidates = [(subset, signs) for subset in spanning
                      for signs in product((1, -1), repeat=n)]
    elif mode == RANDOM:
        report.seed, report.trials = seed, trials
        rng = random.Random(seed)
        candidates = [(rng.choice(spanning),
                       tuple(rng.choice((1, -1)) for _ in range(n)))
                      for _ in range(trials)] if spanning else []
    else:
        raise UsageException(f"unknown harness mode {mode!r}")

    labels = heaviside_lines(fc, lines)
    for subset, signs in candidates:
        report.tally("examined")
        hyperplanes = [labels[k] for k in subset]
        labelled = None not in hyperplanes
        # generator i of a labelled choice spans the line of x_i
        order = sorted(range(n), key=hyperplanes.__getitem__) if labelled else range(n)
        generators = [_line_class(fc, lines[subset[p]], signs[p]) for p in order]
        entry: Dict[str, object] = {
            "lines": [k + 1 for k in subset],
            "signs": list(signs),
            "hyperplanes": [i + 1 for i in hyperplanes] if labelled else None,
        }
        try:
            recovered = check_circuits(fc, generators, [signs[p] for p in order])
        except DomainException:
            report.tally("not_good")
            entry["outcome"] = "not_good"
            report.choices.append(entry)
            continue
        if labelled:
            matched = reorientation_between(recovered.circuits, target) is not None
        else:
            matched = circuits_equivalent(recovered.circuits, target) is not None
        if matched:
            report.tally("good_equivalent")
            entry["outcome"] = "good_equivalent"
        else:
            report.tally("good_inequivalent")
            entry["outcome"] = "good_inequivalent"
            log.warning(
                "good generators %s with signs %s recover inequivalent circuits",
                entry["lines"], list(signs))
            report.counterexamples.append({
                ReportDefs.ARRANGEMENT_HASH: a.hash,
                ReportDefs.CHOICES: entry["lines"],
                ReportDefs.SCALARS: list(signs),
                ReportDefs.CIRCUITS: recovered.circuits.sorted_strings(),
                ReportDefs.SEED: report.seed,
            })
        report.choices.append(entry)
    report.tally("counterexamples", len(report.counterexamples))
    log.debug("graded harness: %s", report.counts)
    return report


@dataclass(frozen=True)
class Char2Comparison:
    """Graded invariants of two arrangements over F_2."""

    betti: Tuple[Tuple[int, ...], Tuple[int, ...]]
    graded_dims: Tuple[Tuple[int, ...], Tuple[int, ...]]
    sqzero_points: Tuple[int, int]
    circuits_equivalent: bool

    @property
    def coincide(self) -> bool:
        return self.betti[0] == self.betti[1] and \
            self.graded_dims[0] == self.graded_dims[1] and \
            self.sqzero_points[0] == self.sqzero_points[1]


def char2_graded_comparison(a1: Arrangement, a2: Arrangement) -> Char2Comparison:
    """Compare Betti numbers, graded dimensions and square-zero counts
    over F_2, where every square vanishes."""
    field = FieldSpec.prime(2, allow_char2=True)
    chains = (fil_chain(a1, field), fil_chain(a2, field))
    return Char2Comparison(
        (betti(a1), betti(a2)),
        (chains[0].graded_dims, chains[1].graded_dims),
        (len(sqzero(a1, field)), len(sqzero(a2, field))),
        circuits_equivalent(signed_circuits(a1), signed_circuits(a2)) is not None,
    )


def circuit_strings(circuits: SignedCircuitSet) -> List[str]:
    return [sign_vector_str(c) for c in sorted(circuits.circuits)]
