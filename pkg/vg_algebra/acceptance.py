"""Acceptance suites run by ``vg verify``.

Every criterion is a function that raises ``VGException`` with a
diagnostic when the property does not hold. Criteria are grouped by the
module whose behaviour they exercise so a run can be restricted.
"""

import logging
import random
from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from vg_algebra.arrangement import (
    QQ,
    Arrangement,
    betti,
    chambers,
    char_poly_coefficients,
    deletion,
    is_generic_codim2,
    random_arrangement,
    restriction,
    sep,
    tope_graph,
    zaslavsky_count,
)
from vg_algebra.catalog import (
    CatalogEntry,
    catalog_names,
    compare_printed_sqzero,
    load_entry,
    product_table,
    verify_entry,
)
from vg_algebra.errors import InvariantViolation, UsageException, VGException
from vg_algebra.exactla import FieldSpec, Matrix, Subspace, dot, kernel, rank, vector
from vg_algebra.keys import ReportDefs, SCHEMA_VERSION
from vg_algebra.omatroid import (
    degree_profile,
    graph_isomorphic,
    lattices_isomorphic,
    signed_circuits,
)
from vg_algebra.reconstruct import (
    EXHAUSTIVE,
    aut_groups,
    check_circuits,
    conjecture_harness_filtered,
    conjecture_harness_graded,
    heaviside_distance,
    recover_and_compare,
    recover_tope_graph_from_heav,
)
from vg_algebra.vgalgebra import (
    fil_chain,
    gheav_bruteforce,
    gheav_structural,
    heaviside,
    sqzero,
    sqzero_oracle,
    verify_presentations,
)

log = logging.getLogger(__name__)

MODULES = ("catalog", "exactla", "arrangement", "omatroid", "vgalgebra", "reconstruct")

RANDOM_ARRANGEMENTS = 50
RANDOM_MAX_N = 8
RANDOM_ELL = 3
MAX_SIGN_SCAN_N = 6
ORACLE_PRIMES = (3, 5)


@lru_cache(maxsize=None)
def _entry(name: str) -> CatalogEntry:
    return load_entry(name, verify=False)


def _entries() -> List[CatalogEntry]:
    return [_entry(name) for name in catalog_names()]


@lru_cache(maxsize=None)
def _random_arrangements(seed: int, generic: bool) -> Tuple[Arrangement, ...]:
    rng = random.Random(f"{seed}:{'generic' if generic else 'any'}")
    result = []
    for k in range(RANDOM_ARRANGEMENTS):
        n = rng.randint(RANDOM_ELL, RANDOM_MAX_N)
        a = random_arrangement(rng,
                               n,
                               RANDOM_ELL,
                               generic=generic,
                               bound=3 if generic else 2)
        result.append(Arrangement.create(a.ell, a.normals, a.labels, f"random-{k}"))
    return tuple(result)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvariantViolation(message)


def check_catalog(seed: int) -> None:
    """Every catalog entry re-derives its tagged invariants."""
    for entry in _entries():
        verify_entry(entry)


def check_exactla(seed: int) -> None:
    """Rank-nullity and the dimension formula for sums and intersections
    over Q and small prime fields."""
    rng = random.Random(seed)
    for field in (QQ, FieldSpec.prime(3), FieldSpec.prime(5), FieldSpec.prime(7)):
        for _ in range(20):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            m = Matrix.from_rows(field, [[rng.randint(-3, 3) for _ in range(cols)]
                                         for _ in range(rows)], cols=cols)
            k = kernel(m)
            _require(rank(m) + k.rank == cols,
                     f"rank-nullity fails over {field.name} for {rows}x{cols}")
            for v in k.rows:
                _require(all(field.is_zero(dot(field, row, v)) for row in m.rows),
                         f"kernel vector is not annihilated over {field.name}")
            s1 = Subspace.span(field, cols, m.rows)
            s2 = Subspace.span(field, cols, [
                vector(field, [rng.randint(-3, 3) for _ in range(cols)])
                for _ in range(rng.randint(1, 4))
            ])
            _require(s1.sum(s2).rank + s1.intersection(s2).rank == s1.rank + s2.rank,
                     f"dimension formula fails over {field.name}")


def check_a3_basics(seed: int) -> None:
    """A3 has 24 chambers and characteristic polynomial (t-1)(t-2)(t-3)."""
    a = _entry("a3").arrangement
    _require(len(chambers(a)) == 24, f"a3 has {len(chambers(a))} chambers")
    _require(char_poly_coefficients(a) == (1, -6, 11, -6),
             f"a3 has characteristic polynomial {list(char_poly_coefficients(a))}")


def check_product_table(seed: int) -> None:
    """The 10 x 24 product table of A3 is reproduced: its labels respect
    opposite chambers and its y rows are exactly the computed
    non-Heaviside generalized Heaviside functions up to 1 - y."""
    rows = product_table(_entry("a3"))
    _require(len(rows) == 10, f"product table has {len(rows)} rows")
    _require(all(len(row) == 24 for row in rows.values()),
             "product table rows are not 24 wide")


def check_pencil(seed: int) -> None:
    """Three lines through a point: 8 generalized Heaviside functions,
    filtered automorphisms 48, tope graph automorphisms 12."""
    a = _entry("pencil3").arrangement
    functions = gheav_bruteforce(a)
    _require(len(functions) == 8,
             f"pencil3 has {len(functions)} generalized Heaviside functions")
    groups = aut_groups(a)
    _require(groups.filtered_order == 48,
             f"pencil3 filtered order {groups.filtered_order}")
    _require(groups.graph_order == 12, f"pencil3 graph order {groups.graph_order}")


def check_six_planes(seed: int) -> None:
    """The two generic six-plane arrangements share a lattice but not a
    tope graph."""
    a1, a2 = _entry("generic6a").arrangement, _entry("generic6b").arrangement
    _require(lattices_isomorphic(a1, a2) is not None,
             "six-plane lattices are not isomorphic")
    g1, g2 = tope_graph(a1), tope_graph(a2)
    _require(graph_isomorphic(g1, g2) is None, "six-plane tope graphs are isomorphic")
    counts = (degree_profile(g1).get(6, 0), degree_profile(g2).get(6, 0))
    _require(counts == (2, 0), f"degree-6 vertex counts are {counts}, expected (2, 0)")
    for a in (a1, a2):
        _require(len(chambers(a)) == 32 == zaslavsky_count(a),
                 f"{a.name} has {len(chambers(a))} chambers")


def _generic_targets(seed: int) -> List[Arrangement]:
    targets = [entry.arrangement for entry in _entries()]
    targets = [a for a in targets if is_generic_codim2(a)]
    return targets + list(_random_arrangements(seed, True))


def check_generic_pipeline(seed: int) -> None:
    """On codim-2 generic input the generalized Heaviside functions are
    the 2n Heaviside functions and they recover the tope graph."""
    for a in _generic_targets(seed):
        found = set(gheav_bruteforce(a))
        expected = {heaviside(a, i, side) for i in range(a.n) for side in (1, -1)}
        _require(found == expected,
                 f"{a.name}: generalized Heaviside set is not the 2n "
                 f"Heaviside functions ({len(found)} found)")
        recovered = recover_tope_graph_from_heav(a)
        _require(graph_isomorphic(recovered, tope_graph(a)) is not None,
                 f"{a.name}: recovered graph is not the tope graph")


def check_structural_oracle(seed: int) -> None:
    """The structural and brute-force generalized Heaviside sets agree."""
    targets = [entry.arrangement for entry in _entries()]
    targets += list(_random_arrangements(seed, False))
    for a in targets:
        brute, structural = set(gheav_bruteforce(a)), set(gheav_structural(a))
        _require(brute == structural,
                 f"{a.name}: {len(brute)} brute-force vs {len(structural)} structural "
                 "generalized Heaviside functions")


def check_presentations(seed: int) -> None:
    """Circuit relations vanish and graded dimensions are the Betti
    numbers over Q and F_3."""
    for entry in _entries():
        for field in (QQ, FieldSpec.prime(3)):
            report = verify_presentations(entry.arrangement, field)
            _require(report.passed,
                     f"{entry.name} over {field.name}: {'; '.join(report.failures)}")


def check_sqzero_oracle(seed: int) -> None:
    """Over F_3 and F_5 the exhaustive square-zero scan equals the union
    of the generalized Heaviside lines."""
    for entry in _entries():
        a = entry.arrangement
        if a.n > RANDOM_MAX_N:
            continue
        for p in ORACLE_PRIMES:
            field = FieldSpec.prime(p)
            lines = {tuple(field.element(x) for x in line) for line in sqzero(a, field)}
            scanned = {tuple(field.element(x) for x in point)
                       for point in sqzero_oracle(fil_chain(a, field))}
            _require(lines == scanned,
                     f"{a.name} over {field.name}: {len(lines)} lines vs "
                     f"{len(scanned)} scanned points")


def check_falk_pair(seed: int) -> None:
    """The two Falk arrangements share Betti numbers but have 11 and 10
    square-zero lines."""
    falk_a, falk_b = _entry("falk-a"), _entry("falk-b")
    _require(betti(falk_a.arrangement) == betti(falk_b.arrangement),
             "Falk pair Betti numbers differ")
    counts = (len(sqzero(falk_a.arrangement)), len(sqzero(falk_b.arrangement)))
    _require(counts == (11, 10), f"Falk pair square-zero counts are {counts}")
    for entry in (falk_a, falk_b):
        compare_printed_sqzero(entry)


def check_circuit_recovery(seed: int) -> None:
    """Heaviside classes give back the signed circuits literally, and every
    sign rescaling of the generators is good and recovers them up to
    reorientation."""
    for entry in _entries():
        a = entry.arrangement
        fc = fil_chain(a)
        classes = [fc.graded_class(heaviside(a, i), 1) for i in range(a.n)]
        _require(check_circuits(fc, classes).circuits == signed_circuits(a),
                 f"{a.name}: Heaviside classes do not give back the signed circuits")
        if not is_generic_codim2(a) or a.n > MAX_SIGN_SCAN_N:
            continue
        for signs in product((1, -1), repeat=a.n):
            verdict = recover_and_compare(a, QQ, signs)
            _require(verdict.reorientation in (signs, tuple(-s for s in signs)),
                     f"{a.name}: scalars {list(signs)} recover inequivalent circuits")


def check_harnesses(seed: int) -> None:
    """Exhaustive harnesses classify every choice and find no
    counterexample."""
    for name in ("pencil3", "a3"):
        a = _entry(name).arrangement
        report = conjecture_harness_filtered(a, QQ, EXHAUSTIVE)
        pairs = len(gheav_bruteforce(a)) // 2
        examined = report.counts.get("examined", 0)
        _require(examined == len(list(combinations(range(pairs), a.n))),
                 f"{name}: filtered harness examined {examined} choices")
        _require(report.consistent, f"{name}: filtered harness found "
                 f"{len(report.counterexamples)} counterexamples")
    for entry in _entries():
        if not is_generic_codim2(entry.arrangement):
            continue
        report = conjecture_harness_graded(entry.arrangement, QQ, EXHAUSTIVE)
        keys = ("not_good", "good_equivalent", "good_inequivalent")
        classified = sum(report.counts.get(key, 0) for key in keys)
        _require(classified == report.counts.get("examined", 0),
                 f"{entry.name}: graded harness left choices unclassified")
        _require(report.consistent, f"{entry.name}: graded harness found "
                 f"{len(report.counterexamples)} counterexamples")


def _fil_dim(a: Arrangement, k: int) -> int:
    if k < 0:
        return 0
    fc = fil_chain(a)
    return fc.dims[min(k, fc.top)]


def check_consistency(seed: int) -> None:
    """Zaslavsky count, deletion-restriction for the filtration and
    tope-graph distance equal to separation size."""
    targets = [entry.arrangement for entry in _entries()] + \
        list(_random_arrangements(seed, True)[:5])
    for a in targets:
        cs = chambers(a)
        _require(zaslavsky_count(a) == len(cs), f"{a.name}: Zaslavsky count differs")
        top = fil_chain(a).top
        for i in range(a.n):
            smaller, induced = deletion(a, i), restriction(a, i).arrangement
            for k in range(top + 1):
                left = _fil_dim(a, k)
                right = _fil_dim(smaller, k) + _fil_dim(induced, k - 1)
                _require(left == right, f"{a.name}: deleting H{i + 1} gives Fil^{k} "
                         f"dimension {left} != {right}")
        distances = dict(nx.all_pairs_shortest_path_length(tope_graph(a)))
        for c1, c2 in combinations(range(len(cs)), 2):
            separated = len(sep(cs, c1, c2))
            _require(distances[c1][c2] == separated,
                     f"{a.name}: chambers {c1} and {c2} at distance "
                     f"{distances[c1][c2]} but separated by {separated}")
        c2 = len(cs) - 1
        _require(heaviside_distance(a, 0, c2) == 2 * len(sep(cs, 0, c2)),
                 f"{a.name}: Heaviside distance is not twice the separation")


@dataclass(frozen=True)
class Criterion:
    number: int
    module: str
    title: str
    check: Callable[[int], None]


CRITERIA: Tuple[Criterion, ...] = (
    Criterion(0, "catalog", "catalog entries re-verify", check_catalog),
    Criterion(0, "exactla", "exact linear algebra identities", check_exactla),
    Criterion(1, "arrangement", "A3 chambers and characteristic polynomial",
              check_a3_basics),
    Criterion(2, "vgalgebra", "A3 product table", check_product_table),
    Criterion(3, "reconstruct", "pencil of three lines", check_pencil),
    Criterion(4, "omatroid", "six generic planes", check_six_planes),
    Criterion(5, "reconstruct", "codim-2 generic tope graph recovery",
              check_generic_pipeline),
    Criterion(6, "vgalgebra", "structural generalized Heaviside oracle",
              check_structural_oracle),
    Criterion(7, "vgalgebra", "presentations", check_presentations),
    Criterion(8, "vgalgebra", "square-zero scan over F_3 and F_5", check_sqzero_oracle),
    Criterion(9, "vgalgebra", "Falk pair square-zero counts", check_falk_pair),
    Criterion(10, "reconstruct", "signed circuit recovery", check_circuit_recovery),
    Criterion(11, "reconstruct", "conjecture harnesses", check_harnesses),
    Criterion(12, "arrangement", "cross-module consistency", check_consistency),
)


@dataclass
class AcceptanceReport:
    """Outcome of an acceptance run, in criterion order."""

    seed: int
    results: List[Dict[str, object]] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result[ReportDefs.PASSED] for result in self.results)

    @property
    def first_failure(self) -> Optional[Dict[str, object]]:
        return next((r for r in self.results if not r[ReportDefs.PASSED]), None)

    def to_json(self) -> Dict[str, object]:
        return {
            ReportDefs.SCHEMA_VERSION: SCHEMA_VERSION,
            ReportDefs.KIND: "acceptance",
            ReportDefs.SEED: self.seed,
            ReportDefs.PASSED: self.passed,
            ReportDefs.RESULTS: self.results,
        }


def select(modules: Iterable[str] = ()) -> List[Criterion]:
    """Criteria of the given modules, all of them when none are named.

    Raises:
        UsageException: on an unknown module name
    """
    modules = list(modules)
    unknown = sorted(set(modules) - set(MODULES))
    if unknown:
        raise UsageException(
            f"unknown module(s) {', '.join(unknown)}, choose from {', '.join(MODULES)}")
    return [c for c in CRITERIA if not modules or c.module in modules]


def run(modules: Sequence[str] = (), seed: int = 0) -> AcceptanceReport:
    """Run the selected criteria, recording each outcome."""
    report = AcceptanceReport(seed)
    for criterion in select(modules):
        log.info("criterion %d (%s): %s", criterion.number, criterion.module,
                 criterion.title)
        result: Dict[str, object] = {
            "criterion": criterion.number,
            "module": criterion.module,
            "title": criterion.title,
        }
        try:
            criterion.check(seed)
            result[ReportDefs.PASSED] = True
        except VGException as error:
            log.error("criterion %d failed: %s", criterion.number, error)
            result[ReportDefs.PASSED] = False
            result["message"] = str(error)
        report.results.append(result)
    return report
