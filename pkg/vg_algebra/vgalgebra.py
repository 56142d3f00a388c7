"""Chamber functions, the degree filtration and its associated graded
algebra.

Hyperplanes are indexed from 0. A chamber function is a dense vector of
field elements indexed by the chamber order of
``arrangement.chambers``.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from functools import cmp_to_key, lru_cache
from fractions import Fraction
from itertools import combinations
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

import networkx as nx

from vg_algebra.arrangement import (
    QQ,
    Arrangement,
    chambers,
    lattice,
    restriction,
    subset_rank,
    tope_graph,
    arrangement_rank,
    betti,
)
from vg_algebra.errors import DomainException, InvariantViolation, UsageException
from vg_algebra.exactla import FieldSpec, Matrix, TrackedEchelon, Vector, rank
from vg_algebra.omatroid import signed_circuits, support as sign_support
from vg_algebra.utils import sign

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class VGElement:
    """Function on the chambers of an arrangement with values in a
    field."""

    values: Vector
    field: FieldSpec
    arrangement: Arrangement = dataclass_field(repr=False)

    def _check(self, other: "VGElement") -> None:
        if other.field != self.field or other.arrangement != self.arrangement:
            raise UsageException("chamber functions live on different algebras")

    def _pointwise(self, op: Callable[[Any, Any], Any],
                   other: "VGElement") -> "VGElement":
        self._check(other)
        return VGElement(tuple(op(a, b) for a, b in zip(self.values, other.values)),
                         self.field, self.arrangement)

    def __add__(self, other: "VGElement") -> "VGElement":
        return self._pointwise(self.field.add, other)

    def __sub__(self, other: "VGElement") -> "VGElement":
        return self._pointwise(self.field.sub, other)

    def __mul__(self, other: "VGElement") -> "VGElement":
        return self._pointwise(self.field.mul, other)

    def scaled(self, c: object) -> "VGElement":
        c = self.field.element(c)
        return VGElement(tuple(self.field.mul(c, a) for a in self.values), self.field,
                         self.arrangement)

    def complement(self) -> "VGElement":
        """1 - f."""
        return VGElement(tuple(self.field.sub(self.field.one, a) for a in self.values),
                         self.field, self.arrangement)

    def is_zero_one(self) -> bool:
        return all(a == self.field.zero or a == self.field.one for a in self.values)

    def is_constant(self) -> bool:
        return len(set(self.values)) <= 1

    def sort_key(self) -> Tuple[int, ...]:
        return tuple(int(a) for a in self.values) if self.is_zero_one() else tuple(
            Fraction(a) for a in self.values)


def constant(a: Arrangement, value: object, field: FieldSpec = QQ) -> VGElement:
    return VGElement(tuple(field.element(value) for _ in chambers(a).chambers),
                     field, a)


def heaviside(a: Arrangement,
              i: int,
              side: int = 1,
              field: FieldSpec = QQ) -> VGElement:
    """Indicator of the side `side` (+1 or -1) of hyperplane i.

    Raises:
        UsageException: if i is out of range or side is not +-1
    """
    if not 0 <= i < a.n:
        raise UsageException(f"hyperplane index {i} out of range for n={a.n}")
    if side not in (1, -1):
        raise UsageException(f"side must be +1 or -1, got {side}")
    return VGElement(
        tuple(field.one if sv[i] == side else field.zero
              for sv in chambers(a).chambers),
        field, a)


def monomial(a: Arrangement, subset: Iterable[int], field: FieldSpec = QQ) -> VGElement:
    """Product of the positive Heaviside functions of the subset."""
    subset = tuple(subset)
    return VGElement(
        tuple(field.one if all(sv[i] > 0 for i in subset) else field.zero
              for sv in chambers(a).chambers), field, a)


def primitive_idempotents(a: Arrangement,
                          field: FieldSpec = QQ) -> Tuple[VGElement, ...]:
    """The chamber indicators, in chamber order."""
    size = len(chambers(a))
    return tuple(
        VGElement(tuple(field.one if k == c else field.zero for k in range(size)),
                  field, a)
        for c in range(size))


def rho(a: Arrangement, i: int, f: VGElement) -> VGElement:
    """Difference f(C+) - f(C-) across hyperplane i, as a function on the
    chambers of the restriction to H_i."""
    res = restriction(a, i)
    return VGElement(tuple(f.field.sub(f.values[plus], f.values[minus])
                           for plus, minus in res.lifts), f.field, res.arrangement)


def in_fil1(a: Arrangement, f: VGElement) -> bool:
    """Degree-one membership test by constancy of every wall
    difference."""
    return all(rho(a, i, f).is_constant() for i in range(a.n))


def support(a: Arrangement, f: VGElement) -> FrozenSet[int]:
    """Hyperplanes across which f jumps.

    Raises:
        DomainException: if f is not of degree at most one
    """
    result = set()
    for i in range(a.n):
        difference = rho(a, i, f)
        if not difference.is_constant():
            raise DomainException(
                f"function is not in Fil^1: its difference across {a.labels[i]} varies")
        if difference.values and not f.field.is_zero(difference.values[0]):
            result.add(i)
    return frozenset(result)


@dataclass(frozen=True)
class GradedClass:
    """Class of a degree-k function in Fil^k / Fil^(k-1), in coordinates
    of the chosen complement monomials."""

    degree: int
    coordinates: Vector
    field: FieldSpec
    arrangement: Arrangement = dataclass_field(repr=False)

    def is_zero(self) -> bool:
        return all(self.field.is_zero(x) for x in self.coordinates)

    def __add__(self, other: "GradedClass") -> "GradedClass":
        if other.degree != self.degree or other.field != self.field:
            raise UsageException("graded classes of different degree or field")
        return GradedClass(self.degree,
                           tuple(self.field.add(x, y)
                                 for x, y in zip(self.coordinates, other.coordinates)),
                           self.field, self.arrangement)

    def scaled(self, c: object) -> "GradedClass":
        c = self.field.element(c)
        return GradedClass(self.degree,
                           tuple(self.field.mul(c, x) for x in self.coordinates),
                           self.field, self.arrangement)

    def normalized(self) -> Vector:
        """Coordinates scaled so the first nonzero entry is 1."""
        lead = next((x for x in self.coordinates if not self.field.is_zero(x)), None)
        if lead is None:
            return self.coordinates
        inverse = self.field.inv(lead)
        return tuple(self.field.mul(inverse, x) for x in self.coordinates)


class FilChain:
    """Echelon bases of Fil^0, Fil^1, ... inside the chamber-function space.

    Fil^k is spanned by the monomials of at most k positive Heaviside
    functions. Each level keeps the monomials x_S, taken in size-lex
    order, that extend a basis of the level below; those monomials form
    the basis of the graded piece in which class coordinates are given.
    """

    def __init__(self, arrangement: Arrangement, field: FieldSpec = QQ):
        self.__arrangement = arrangement
        self.__field = field
        self.__size = len(chambers(arrangement))
        self.__levels: List[TrackedEchelon] = []
        self.__complements: List[Tuple[Tuple[int, ...], ...]] = []
        self.__monomials: Dict[Tuple[int, ...], Vector] = {}

        previous: List[Vector] = []
        for k in range(arrangement_rank(arrangement) + 1):
            echelon = TrackedEchelon(field, self.__size)
            for row in previous:
                echelon.add(row)
            chosen: List[Tuple[int, ...]] = []
            for subset in combinations(range(arrangement.n), k):
                if echelon.is_full:
                    break
                if echelon.add(self._monomial(subset), tag=len(chosen)):
                    chosen.append(subset)
            self.__levels.append(echelon)
            self.__complements.append(tuple(chosen))
            previous = echelon.vectors()
            log.debug("Fil^%d has dimension %d over %s", k, echelon.rank, field.name)

        if not self.__levels[-1].is_full:
            raise InvariantViolation(
                f"top filtration level has dimension {self.__levels[-1].rank}, "
                f"expected {self.__size}")

    def _monomial(self, subset: Tuple[int, ...]) -> Vector:
        if subset not in self.__monomials:
            self.__monomials[subset] = monomial(self.__arrangement, subset,
                                                self.__field).values
        return self.__monomials[subset]

    @property
    def arrangement(self) -> Arrangement:
        return self.__arrangement

    @property
    def field(self) -> FieldSpec:
        return self.__field

    @property
    def top(self) -> int:
        return len(self.__levels) - 1

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(level.rank for level in self.__levels)

    @property
    def graded_dims(self) -> Tuple[int, ...]:
        return tuple(len(chosen) for chosen in self.__complements)

    def complement(self, k: int) -> Tuple[Tuple[int, ...], ...]:
        """Monomial subsets whose classes form the basis of grVG^k."""
        return self.__complements[k] if k <= self.top else ()

    def contains(self, f: VGElement, k: int) -> bool:
        if k < 0:
            return all(self.__field.is_zero(x) for x in f.values)
        residual, _ = self.__levels[min(k, self.top)].reduce(f.values)
        return all(self.__field.is_zero(x) for x in residual)

    def graded_class(self, f: VGElement, k: int) -> GradedClass:
        """Class of f in grVG^k.

        Raises:
            UsageException: if k is negative or f lives on another algebra
            DomainException: if f is not in Fil^k
        """
        if k < 0:
            raise UsageException(f"degree must be >= 0, got {k}")
        if f.field != self.__field or f.arrangement != self.__arrangement:
            raise UsageException("function lives on a different algebra")
        if k > self.top:
            return GradedClass(k, (), self.__field, self.__arrangement)
        residual, consumed = self.__levels[k].reduce(f.values)
        if any(not self.__field.is_zero(x) for x in residual):
            raise DomainException(f"function is not in Fil^{k}")
        coordinates = tuple(
            consumed.get(j, self.__field.zero)
            for j in range(len(self.__complements[k])))
        return GradedClass(k, coordinates, self.__field, self.__arrangement)

    def lift(self, u: GradedClass) -> VGElement:
        """Representative of a class as a combination of its complement
        monomials."""
        field = self.__field
        values = [field.zero] * self.__size
        for c, subset in zip(u.coordinates, self.complement(u.degree)):
            if field.is_zero(c):
                continue
            term = self._monomial(subset)
            values = [field.add(v, field.mul(c, t)) for v, t in zip(values, term)]
        return VGElement(tuple(values), field, self.__arrangement)

    def monomial_class(self, subset: Iterable[int]) -> GradedClass:
        subset = tuple(subset)
        return self.graded_class(monomial(self.__arrangement, subset, self.__field),
                                 len(subset))

    def graded_mult(self, u: GradedClass, v: GradedClass) -> GradedClass:
        """Product of classes by lifting, multiplying and reducing."""
        degree = u.degree + v.degree
        if degree > self.top:
            return GradedClass(degree, (), self.__field, self.__arrangement)
        return self.graded_class(self.lift(u) * self.lift(v), degree)


@lru_cache(maxsize=64)
def fil_chain(a: Arrangement, field: FieldSpec = QQ) -> FilChain:
    return FilChain(a, field)


def graded_class(fc: FilChain, f: VGElement, k: int) -> GradedClass:
    return fc.graded_class(f, k)


def graded_mult(fc: FilChain, u: GradedClass, v: GradedClass) -> GradedClass:
    return fc.graded_mult(u, v)


def algebraic_invariants(fc: FilChain) -> Tuple[int, int]:
    """(n, rank) read off the graded dimensions alone."""
    dims = fc.graded_dims
    n = dims[1] if len(dims) > 1 else 0
    top = max(k for k, d in enumerate(dims) if d > 0)
    return n, top


def _heaviside_order(a: Arrangement) -> List[Tuple[int, int, int, int]]:
    """BFS tree of the tope graph from chamber 0 as (parent, child, wall,
    side of child)."""
    graph = tope_graph(a)
    cs = chambers(a)
    order = []
    for parent, child in nx.bfs_edges(graph, 0):
        wall = graph.edges[parent, child]["wall"]
        order.append((parent, child, wall, cs.chambers[child][wall]))
    return order


@lru_cache(maxsize=64)
def gheav_bruteforce(a: Arrangement, field: FieldSpec = QQ) -> Tuple[VGElement, ...]:
    """All non-constant 0/1-valued functions of degree at most one.

    A degree-one function is b + sum c_i x_i^+, so it is fixed by its
    value on chamber 0 and one jump per hyperplane. Walking a BFS tree
    of the tope graph (whose root paths are geodesics, so every
    hyperplane is crossed once on the way to the antipode) each jump is
    chosen at the first edge crossing its wall and every later value is
    forced.
    """
    field.require_char2_override("generalized Heaviside enumeration")
    size = len(chambers(a))
    order = _heaviside_order(a)
    zero, one = field.zero, field.one
    found: List[VGElement] = []

    values: List[object] = [zero] * size
    jumps: List[Optional[object]] = [None] * a.n

    def signed(side: int, x: object) -> object:
        return x if side > 0 else field.neg(x)

    def extend(step: int) -> Iterator[Tuple[object, ...]]:
        if step == len(order):
            if any(not field.is_zero(j) for j in jumps):
                yield tuple(values)
            return
        parent, child, wall, side = order[step]
        if jumps[wall] is not None:
            value = field.add(values[parent], signed(side, jumps[wall]))
            if value == zero or value == one:
                values[child] = value
                yield from extend(step + 1)
            return
        for value in (zero, one):
            jumps[wall] = signed(side, field.sub(value, values[parent]))
            values[child] = value
            yield from extend(step + 1)
        jumps[wall] = None

    for start in (zero, one):
        values[0] = start
        for result in extend(0):
            found.append(VGElement(result, field, a))

    found.sort(key=VGElement.sort_key)
    log.debug("%d generalized Heaviside functions over %s", len(found), field.name)
    return tuple(found)


def _ray_half(ray: Tuple[Fraction, Fraction]) -> int:
    x, y = ray
    return 0 if y > 0 or (y == 0 and x > 0) else 1


def _ray_compare(r1: Tuple[Fraction, Fraction], r2: Tuple[Fraction, Fraction]) -> int:
    h1, h2 = _ray_half(r1), _ray_half(r2)
    if h1 != h2:
        return h1 - h2
    cross = r1[0] * r2[1] - r1[1] * r2[0]
    return -sign(cross)


def _plane_coordinates(a: Arrangement,
                       flat: Sequence[int]) -> Dict[int, Tuple[Fraction, Fraction]]:
    """Write each normal of the flat as p * alpha_a + q * alpha_b."""
    first, second = a.normals[flat[0]], a.normals[flat[1]]
    r, s = next((r, s) for r, s in combinations(range(a.ell), 2)
                if first[r] * second[s] - first[s] * second[r] != 0)
    det = first[r] * second[s] - first[s] * second[r]
    coordinates = {}
    for j in flat:
        alpha = a.normals[j]
        p = (alpha[r] * second[s] - alpha[s] * second[r]) / det
        q = (first[r] * alpha[s] - first[s] * alpha[r]) / det
        if any(alpha[t] != p * first[t] + q * second[t] for t in range(a.ell)):
            raise InvariantViolation(f"normal {j} does not lie in the span of the flat")
        coordinates[j] = (p, q)
    return coordinates


def alt_function(a: Arrangement,
                 flat: Iterable[int],
                 subset: Iterable[int],
                 base: int = 1,
                 field: FieldSpec = QQ) -> Optional[VGElement]:
    """Function alternating 0/1 across the walls of `subset` around a
    rank-2 flat and constant across the other walls.

    The sectors around the flat are ordered by exact angle in the plane
    of two of its normals. The candidate is the affine combination of
    the positive Heavisides of the subset with the jumps read off that
    walk, so it is returned only if both crossings of every wall agree,
    the result is 0/1-valued and it passes the degree-one test.

    Args:
        a: the arrangement
        flat: hyperplanes containing a rank-2 flat
        subset: odd subset of those hyperplanes
        base (optional): value on chamber 0; the other value gives 1 - f
        field (optional): coefficient field

    Raises:
        UsageException: if the flat is not a rank-2 flat, or the subset is
            not an odd subset of it
    """
    flat = tuple(sorted(set(flat)))
    subset = frozenset(subset)
    if len(flat) < 2 or subset_rank(a, frozenset(flat)) != 2 or \
            frozenset(flat) not in lattice(a).mobius:
        raise UsageException(f"{list(flat)} is not the hyperplane set of a rank-2 flat")
    if not subset <= frozenset(flat) or len(subset) % 2 == 0:
        raise UsageException(f"{sorted(subset)} is not an odd subset of {list(flat)}")

    coordinates = _plane_coordinates(a, flat)
    rays = []
    for j, (p, q) in coordinates.items():
        rays.append(((-q, p), j))
        rays.append(((q, -p), j))
    rays.sort(key=cmp_to_key(lambda u, v: _ray_compare(u[0], v[0])))

    sectors = []
    for k in range(len(rays)):
        (x1, y1), _ = rays[k]
        (x2, y2), _ = rays[(k + 1) % len(rays)]
        point = (x1 + x2, y1 + y2)
        sectors.append({j: sign(p * point[0] + q * point[1])
                        for j, (p, q) in coordinates.items()})

    values = [1]
    for k in range(1, len(sectors)):
        values.append(values[-1] ^ (rays[k][1] in subset))

    jumps: Dict[int, int] = {}
    for k in range(len(sectors)):
        before, after = (k - 1) % len(sectors), k
        wall = rays[k][1]
        delta = values[after] - values[before]
        jump = delta if sectors[after][wall] > 0 else -delta
        if wall in jumps and jumps[wall] != jump:
            log.debug("inconsistent crossings of %s around %s", a.labels[wall],
                      list(flat))
            return None
        jumps[wall] = jump

    offset = values[0] - sum(jumps[j] for j in subset if sectors[0][j] > 0)
    result = constant(a, offset, field)
    for j in sorted(subset):
        result = result + heaviside(a, j, 1, field).scaled(jumps[j])

    if not result.is_zero_one() or not in_fil1(a, result):
        return None
    if result.values[0] != field.element(base):
        result = result.complement()
    return result


def gheav_structural(a: Arrangement, field: FieldSpec = QQ) -> Tuple[VGElement, ...]:
    """Heaviside functions together with every alternating function on
    an odd subset (of size >= 3) of a rank-2 flat."""
    field.require_odd_characteristic("structural generalized Heaviside enumeration")
    found = set()
    for i in range(a.n):
        found.add(heaviside(a, i, 1, field))
        found.add(heaviside(a, i, -1, field))
    for flat in lattice(a).by_rank(2):
        members = sorted(flat.hyperplanes)
        for size in range(3, len(members) + 1, 2):
            for subset in combinations(members, size):
                for base in (1, 0):
                    alt = alt_function(a, members, subset, base, field)
                    if alt is not None:
                        found.add(alt)
    result = sorted(found, key=VGElement.sort_key)
    log.debug("%d structural generalized Heaviside functions", len(result))
    return tuple(result)


Line = Vector


def sqzero(a: Arrangement, field: FieldSpec = QQ) -> Tuple[Line, ...]:
    """Lines of square-zero classes in grVG^1, each given by its
    coordinates normalized to a leading 1.

    Outside characteristic 2 these are the lines through the classes of
    the generalized Heaviside functions, each checked to square to zero.
    In characteristic 2 the prime-field scan is used instead.

    Raises:
        InvariantViolation: if some returned line does not square to zero
    """
    fc = fil_chain(a, field)
    if field.characteristic == 2:
        field.require_char2_override("square-zero locus")
        return sqzero_oracle(fc)

    lines = set()
    for y in gheav_bruteforce(a, field):
        cls = fc.graded_class(y, 1)
        if cls.is_zero():
            continue
        if not fc.graded_mult(cls, cls).is_zero():
            raise InvariantViolation(f"class {cls.coordinates} does not square to zero")
        lines.add(cls.normalized())
    result = tuple(sorted(lines, key=lambda line: tuple(Fraction(x) for x in line)))
    log.debug("%d square-zero lines over %s", len(result), field.name)
    return result


def sqzero_oracle(fc: FilChain) -> Tuple[Line, ...]:
    """Every projective point of grVG^1 over F_p whose square vanishes.

    Raises:
        DomainException: over the rationals
    """
    field = fc.field
    p = field.characteristic
    if p == 0:
        raise DomainException("the exhaustive square-zero scan needs a prime field")
    n = fc.graded_dims[1] if fc.top >= 1 else 0
    width = len(fc.complement(2))

    products: Dict[Tuple[int, int], Vector] = {}
    if p != 2:
        basis = [GradedClass(1, tuple(1 if t == i else 0 for t in range(n)), field,
                             fc.arrangement) for i in range(n)]
        for i, j in combinations(range(n), 2):
            products[i, j] = fc.graded_mult(basis[i], basis[j]).coordinates

    found: List[Line] = []
    coords = [0] * n

    def scan(k: int, leading: bool, acc: Tuple[int, ...]) -> None:
        if k == n:
            if leading and all(x == 0 for x in acc):
                found.append(tuple(coords))
            return
        cross = [0] * width
        if p != 2:
            for i in range(k):
                if coords[i]:
                    row = products[i, k]
                    cross = [(c + coords[i] * r) % p for c, r in zip(cross, row)]
        for value in (range(p) if leading else (0, 1)):
            coords[k] = value
            updated = tuple((x + value * c) % p for x, c in zip(acc, cross))
            scan(k + 1, leading or value == 1, updated)
        coords[k] = 0

    scan(0, False, tuple([0] * width))
    found.sort()
    log.debug("%d square-zero points over F_%d", len(found), p)
    return tuple(found)


@dataclass
class PresentationReport:
    """Outcome of checking the circuit relations in VG(A) and grVG(A)."""

    field: str
    circuits: int = 0
    graded_dims: Tuple[int, ...] = ()
    betti: Tuple[int, ...] = ()
    failures: List[str] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_presentations(a: Arrangement, field: FieldSpec = QQ) -> PresentationReport:
    """Check, for every signed circuit, that the product relation
    vanishes as a function, that the leading-term relation vanishes in
    the graded algebra, that the deleted-index monomials satisfy a
    unique relation, and in characteristic 2 that the leading-term signs
    agree with the alternating boundary signs."""
    fc = fil_chain(a, field)
    report = PresentationReport(field.name, graded_dims=fc.graded_dims, betti=betti(a))
    expected = tuple(report.betti[:fc.top + 1])
    if report.graded_dims != expected or any(report.betti[fc.top + 1:]):
        report.failures.append(
            f"graded dimensions {list(report.graded_dims)} differ from Betti numbers "
            f"{list(report.betti)}")

    circuits = signed_circuits(a)
    report.circuits = len(circuits)
    one = constant(a, 1, field)
    for circuit in sorted(circuits.circuits):
        positive = [i for i, s in enumerate(circuit) if s > 0]
        negative = [i for i, s in enumerate(circuit) if s < 0]
        first, second = one, one
        for i in positive:
            first = first * heaviside(a, i, 1, field)
            second = second * (heaviside(a, i, 1, field) - one)
        for i in negative:
            first = first * (heaviside(a, i, 1, field) - one)
            second = second * heaviside(a, i, 1, field)
        if any(not field.is_zero(x) for x in (first - second).values):
            report.failures.append(f"product relation of circuit {circuit} is nonzero")

        if circuit[min(sign_support(circuit))] < 0:
            continue
        members = sorted(sign_support(circuit))
        classes = [fc.monomial_class([i for i in members if i != m]) for m in members]
        total = classes[0].scaled(0)
        for m, cls in zip(members, classes):
            total = total + cls.scaled(circuit[m])
        if not total.is_zero():
            report.failures.append(
                f"leading-term relation of circuit {circuit} is nonzero")
        if classes[0].coordinates:
            r = rank(Matrix.from_rows(field, [c.coordinates for c in classes]))
            if r != len(members) - 1:
                report.failures.append(
                    f"deleted monomials of circuit {circuit} have rank {r}, "
                    f"expected {len(members) - 1}")
        if field.characteristic == 2:
            for p, m in enumerate(members):
                if field.element(circuit[m]) != field.element((-1)**p):
                    report.failures.append(
                        f"circuit {circuit} disagrees with the boundary relation "
                        f"at {m}")

    log.debug("presentation check over %s: %d circuits, %d failures", field.name,
              report.circuits, len(report.failures))
    return report
