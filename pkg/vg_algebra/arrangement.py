"""Central real arrangements: chambers, tope graph, restriction, lattice.

Normals are exact rationals. A sign vector is a tuple over {1, -1, 0};
chambers carry no zero entries and are kept in lexicographic order with
``+`` before ``-``.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import sympy

from vg_algebra.errors import DomainException, InvariantViolation, UsageException
from vg_algebra.exactla import FieldSpec, Matrix, kernel, rank
from vg_algebra.keys import ArrangementDefs, Limits
from vg_algebra.utils import canonical_hash, format_rational, sign, sign_vector_str

log = logging.getLogger(__name__)

QQ = FieldSpec.rationals()

T = sympy.Symbol("t")

SignVector = Tuple[int, ...]
Point = Tuple[Fraction, ...]


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _projective_key(v: Sequence[Fraction]) -> Tuple[Tuple[Fraction, ...], int]:
    """Representative scaled so the first nonzero entry is 1, and the sign
    of that scaling."""
    lead = next(x for x in v if x != 0)
    return tuple(x / lead for x in v), sign(lead)


@dataclass(frozen=True)
class Arrangement:
    """Central arrangement given by exact rational normals."""

    ell: int
    normals: Tuple[Point, ...]
    labels: Tuple[str, ...]
    name: str = field(default="", compare=False)

    @classmethod
    def create(cls,
               ell: int,
               normals: Iterable[Iterable[object]],
               labels: Optional[Sequence[str]] = None,
               name: str = "") -> "Arrangement":
        """Build and check an arrangement.

        Args:
            ell: ambient dimension
            normals: one normal vector per hyperplane, entries exact rationals
            labels (optional): hyperplane labels, defaults to H1..Hn
            name (optional): display name

        Raises:
            UsageException: on zero, parallel or wrongly sized normals
            DomainException: if the soft size limits are exceeded
        """
        converted = tuple(tuple(QQ.element(x) for x in normal) for normal in normals)
        if ell < 0:
            raise UsageException(f"ambient dimension must be >= 0, got {ell}")
        if ell > Limits.MAX_DIMENSION or len(converted) > Limits.MAX_HYPERPLANES:
            raise DomainException(
                f"soft limits exceeded: n={len(converted)} "
                f"(max {Limits.MAX_HYPERPLANES}), "
                f"ell={ell} (max {Limits.MAX_DIMENSION})")

        keys: Dict[Tuple[Fraction, ...], int] = {}
        for i, normal in enumerate(converted):
            if len(normal) != ell:
                raise UsageException(
                    f"normal {i} has {len(normal)} entries, expected {ell}")
            if all(x == 0 for x in normal):
                raise UsageException(f"normal {i} is zero")
            key, _ = _projective_key(normal)
            if key in keys:
                raise UsageException(f"normals {keys[key]} and {i} are parallel")
            keys[key] = i

        if labels is None:
            labels = [f"H{i + 1}" for i in range(len(converted))]
        if len(labels) != len(converted):
            raise UsageException(
                f"{len(labels)} labels given for {len(converted)} normals")

        return cls(ell, converted, tuple(str(label) for label in labels), name)

    @property
    def n(self) -> int:
        return len(self.normals)

    def to_document(self) -> Dict[str, object]:
        return {
            ArrangementDefs.ELL: self.ell,
            ArrangementDefs.NORMALS: [[format_rational(x) for x in normal]
                                      for normal in self.normals],
            ArrangementDefs.LABELS: list(self.labels),
        }

    @property
    def hash(self) -> str:
        """Content hash of the normals, used to tag serialized
        functions."""
        document = self.to_document()
        document.pop(ArrangementDefs.LABELS)
        return canonical_hash(document)

    def reoriented(self, signs: Sequence[int]) -> "Arrangement":
        """Flip the normals whose sign entry is -1."""
        return Arrangement(self.ell,
                           tuple(tuple(s * x for x in normal)
                                 for s, normal in zip(signs, self.normals)),
                           self.labels, self.name)

    def permuted(self, order: Sequence[int]) -> "Arrangement":
        """Arrangement whose i-th hyperplane is the order[i]-th one of
        self."""
        return Arrangement(self.ell, tuple(self.normals[j] for j in order),
                           tuple(self.labels[j] for j in order), self.name)


def _normalized(row: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    lead = next((abs(x) for x in row if x != 0), None)
    if lead is None:
        return tuple(row)
    return tuple(x / lead for x in row)


def _eliminate(system: Dict[Tuple[Fraction, ...], FrozenSet[int]], k: int,
               eliminated: int) -> Dict[Tuple[Fraction, ...], FrozenSet[int]]:
    """One Fourier-Motzkin step on variable k.

    Each row carries the set of input rows it was combined from. After
    `eliminated` steps a row built from more than `eliminated` + 1 input
    rows is a positive combination of the others and is dropped.
    """
    lower = [row for row in system if row[k] > 0]
    upper = [row for row in system if row[k] < 0]
    combined = {row: history for row, history in system.items() if row[k] == 0}
    for p in lower:
        for q in upper:
            history = system[p] | system[q]
            if len(history) > eliminated + 1:
                continue
            row = _normalized(tuple(-q[k] * a + p[k] * b for a, b in zip(p, q)))
            known = combined.get(row)
            if known is None or len(history) < len(known):
                combined[row] = history
    return combined


def _strict_solve(rows: Sequence[Sequence[Fraction]], dim: int) -> Optional[Point]:
    """Find v with r.v > 0 for every row, by Fourier-Motzkin elimination.

    Rows are normalized by a positive scalar and deduplicated at every
    stage, and combinations of too many input rows are pruned as
    redundant. The witness is rebuilt by back-substitution, taking the
    midpoint of the admissible interval when it is bounded on both
    sides.
    """
    inputs = sorted({_normalized(row) for row in rows})
    system = {row: frozenset([n]) for n, row in enumerate(inputs)}
    if any(all(x == 0 for x in row) for row in system):
        return None

    stages = []
    for eliminated, k in enumerate(reversed(range(dim)), start=1):
        stages.append((k, [row for row in sorted(system) if row[k] > 0],
                       [row for row in sorted(system) if row[k] < 0]))
        system = _eliminate(system, k, eliminated)
        if any(all(x == 0 for x in row) for row in system):
            return None

    x = [Fraction(0)] * dim
    for k, lower, upper in reversed(stages):
        # row[k] * x_k + rest > 0
        lows = [-_dot(row[:k], x[:k]) / row[k] for row in lower]
        highs = [-_dot(row[:k], x[:k]) / row[k] for row in upper]
        if lows and highs:
            x[k] = (max(lows) + min(highs)) / 2
        elif lows:
            x[k] = max(lows) + 1
        elif highs:
            x[k] = min(highs) - 1
    return tuple(x)


def _strict_point(ell: int, constraints: Sequence[Tuple[Point, int]],
                  equalities: Sequence[Point] = ()) -> Optional[Point]:
    """Point v with sgn(normal.v) = s for every (normal, s), lying on all
    equality hyperplanes."""
    if equalities:
        basis = list(kernel(Matrix.from_rows(QQ, equalities, cols=ell)).rows)
    else:
        basis = [tuple(Fraction(int(i == j)) for j in range(ell)) for i in range(ell)]

    rows = [tuple(s * _dot(normal, b) for b in basis) for normal, s in constraints]
    w = _strict_solve(rows, len(basis))
    if w is None:
        return None
    point = tuple(sum((wk * b[j] for wk, b in zip(w, basis)), Fraction(0))
                  for j in range(ell))
    for normal, s in constraints:
        if sign(_dot(normal, point)) != s:
            raise InvariantViolation(f"witness {point} violates its own constraint")
    for normal in equalities:
        if _dot(normal, point) != 0:
            raise InvariantViolation(f"witness {point} leaves an equality hyperplane")
    return point


def feasible(a: Arrangement, sv: SignVector) -> Optional[Point]:
    """Exact witness point realizing the sign vector, or None.

    Zero entries are treated as equality constraints.

    Raises:
        UsageException: if the sign vector has the wrong length
    """
    if len(sv) != a.n:
        raise UsageException(f"sign vector of length {len(sv)} for {a.n} hyperplanes")
    constraints = [(normal, s) for normal, s in zip(a.normals, sv) if s != 0]
    equalities = [normal for normal, s in zip(a.normals, sv) if s == 0]
    return _strict_point(a.ell, constraints, equalities)


def chamber_order_key(sv: SignVector) -> Tuple[int, ...]:
    return tuple(0 if s > 0 else 1 for s in sv)


@dataclass(frozen=True)
class ChamberSet:
    """Chambers in deterministic order, each with an exact witness."""

    arrangement: Arrangement
    chambers: Tuple[SignVector, ...]
    witnesses: Tuple[Point, ...]
    index: Dict[SignVector, int] = field(compare=False, hash=False, repr=False)

    def __len__(self) -> int:
        return len(self.chambers)

    def position(self, sv: SignVector) -> int:
        """Index of a chamber.

        Raises:
            UsageException: if sv is not a chamber
        """
        try:
            return self.index[tuple(sv)]
        except KeyError as error:
            raise UsageException(f"{sign_vector_str(sv)} is not a chamber") from error


@lru_cache(maxsize=128)
def chambers(a: Arrangement) -> ChamberSet:
    """All chambers, by inserting the hyperplanes one at a time."""
    origin = tuple(Fraction(0) for _ in range(a.ell))
    current: List[Tuple[SignVector, Point]] = [((), origin)]
    for i, normal in enumerate(a.normals):
        refined: List[Tuple[SignVector, Point]] = []
        prefix = a.normals[:i + 1]
        for sv, witness in current:
            value = sign(_dot(normal, witness))
            for s in (1, -1):
                target = sv + (s, )
                if value == s:
                    refined.append((target, witness))
                    continue
                point = _strict_point(a.ell, list(zip(prefix, target)))
                if point is not None:
                    refined.append((target, point))
        current = refined
        log.debug("after inserting hyperplane %d: %d chambers", i, len(current))

    current.sort(key=lambda entry: chamber_order_key(entry[0]))
    svs = tuple(sv for sv, _ in current)
    return ChamberSet(a, svs, tuple(w for _, w in current),
                      {sv: k
                       for k, sv in enumerate(svs)})


def sep(cs: ChamberSet, c1: int, c2: int) -> FrozenSet[int]:
    """Hyperplanes separating two chambers (given by index)."""
    first, second = cs.chambers[c1], cs.chambers[c2]
    return frozenset(i for i, (s, t) in enumerate(zip(first, second)) if s != t)


def flip(sv: SignVector, i: int) -> SignVector:
    return sv[:i] + (-sv[i], ) + sv[i + 1:]


def tope_graph(a: Arrangement) -> nx.Graph:
    """Graph on chamber indices; edges join chambers separated by one
    hyperplane, labelled by that hyperplane in the 'wall' attribute."""
    cs = chambers(a)
    graph = nx.Graph()
    for k, sv in enumerate(cs.chambers):
        graph.add_node(k, sign=sign_vector_str(sv))
    for k, sv in enumerate(cs.chambers):
        for i in range(a.n):
            other = cs.index.get(flip(sv, i))
            if other is not None and other > k:
                graph.add_edge(k, other, wall=i)
    return graph


@dataclass(frozen=True)
class Restriction:
    """Arrangement induced on a hyperplane, with its lift map.

    Attributes:
        hyperplane: index of the restricting hyperplane
        arrangement: induced arrangement in coordinates of the hyperplane
        basis: kernel basis of the restricting normal (the coordinates)
        back_reference: for each original index j, (induced index,
            orientation) or None for the restricting hyperplane itself
        lifts: for each induced chamber, indices (C+, C-) of its lifts
    """

    hyperplane: int
    arrangement: Arrangement
    basis: Tuple[Point, ...]
    back_reference: Tuple[Optional[Tuple[int, int]], ...]
    lifts: Tuple[Tuple[int, int], ...]


@lru_cache(maxsize=256)
def restriction(a: Arrangement, i: int) -> Restriction:
    """Restrict to H_i, merging parallel induced normals.

    Raises:
        UsageException: if i is out of range
    """
    if not 0 <= i < a.n:
        raise UsageException(f"hyperplane index {i} out of range for n={a.n}")

    basis = kernel(Matrix.from_rows(QQ, [a.normals[i]], cols=a.ell)).rows
    induced: List[Point] = []
    labels: List[List[str]] = []
    keys: Dict[Tuple[Fraction, ...], Tuple[int, int]] = {}
    back_reference: List[Optional[Tuple[int, int]]] = []
    for j, normal in enumerate(a.normals):
        if j == i:
            back_reference.append(None)
            continue
        projected = tuple(_dot(normal, b) for b in basis)
        if all(x == 0 for x in projected):
            raise InvariantViolation(f"normal {j} vanishes on hyperplane {i}")
        key, orientation = _projective_key(projected)
        if key in keys:
            target, first_orientation = keys[key]
            back_reference.append((target, orientation * first_orientation))
            labels[target].append(a.labels[j])
            continue
        keys[key] = (len(induced), orientation)
        back_reference.append((len(induced), 1))
        induced.append(projected)
        labels.append([a.labels[j]])

    restricted = Arrangement(a.ell - 1, tuple(induced),
                             tuple("=".join(x) for x in labels),
                             f"{a.name}^{a.labels[i]}")

    cs = chambers(a)
    lifts = []
    for witness in chambers(restricted).witnesses:
        point = tuple(
            sum((wk * b[j] for wk, b in zip(witness, basis)), Fraction(0))
            for j in range(a.ell))
        signs = [sign(_dot(normal, point)) for normal in a.normals]
        signs[i] = 1
        plus = cs.index.get(tuple(signs))
        signs[i] = -1
        minus = cs.index.get(tuple(signs))
        if plus is None or minus is None:
            raise InvariantViolation(
                f"restricted chamber at {witness} has no lift pair")
        lifts.append((plus, minus))

    return Restriction(i, restricted, tuple(basis), tuple(back_reference), tuple(lifts))


def deletion(a: Arrangement, i: int) -> Arrangement:
    """Arrangement with H_i removed."""
    if not 0 <= i < a.n:
        raise UsageException(f"hyperplane index {i} out of range for n={a.n}")
    keep = [j for j in range(a.n) if j != i]
    return Arrangement(a.ell, tuple(a.normals[j] for j in keep),
                       tuple(a.labels[j] for j in keep), f"{a.name}-{a.labels[i]}")


def localization(a: Arrangement, flat: FrozenSet[int]) -> Arrangement:
    """Subarrangement of the hyperplanes containing a flat (given by its
    hyperplane set)."""
    keep = sorted(flat)
    return Arrangement(a.ell, tuple(a.normals[j] for j in keep),
                       tuple(a.labels[j] for j in keep), f"{a.name}_X")


@lru_cache(maxsize=4096)
def subset_rank(a: Arrangement, subset: FrozenSet[int]) -> int:
    if not subset:
        return 0
    rows = [a.normals[j] for j in sorted(subset)]
    return rank(Matrix.from_rows(QQ, rows, cols=a.ell))


def arrangement_rank(a: Arrangement) -> int:
    return subset_rank(a, frozenset(range(a.n)))


def closure(a: Arrangement, subset: Iterable[int]) -> FrozenSet[int]:
    """All j whose normal lies in the span of the normals of subset."""
    subset = frozenset(subset)
    r = subset_rank(a, subset)
    return frozenset(j for j in range(a.n)
                     if j in subset or subset_rank(a, subset | {j}) == r)


@dataclass(frozen=True)
class Flat:
    """Intersection of hyperplanes, identified by the hyperplanes containing
    it."""

    hyperplanes: FrozenSet[int]
    rank: int
    dim: int


@dataclass(frozen=True)
class Lattice:
    """Intersection lattice ordered by reverse inclusion of flats."""

    flats: Tuple[Flat, ...]
    mobius: Dict[FrozenSet[int], int] = field(compare=False, hash=False)
    rank: int = 0

    def by_rank(self, r: int) -> List[Flat]:
        return [flat for flat in self.flats if flat.rank == r]


@lru_cache(maxsize=128)
def lattice(a: Arrangement) -> Lattice:
    """Flats by closure of growing subsets, Mobius values by recursion."""
    total_rank = arrangement_rank(a)
    levels: List[List[FrozenSet[int]]] = [[frozenset()]]
    for r in range(1, total_rank + 1):
        found = set()
        for flat in levels[-1]:
            for j in range(a.n):
                if j not in flat:
                    found.add(closure(a, flat | {j}))
        levels.append(sorted(found, key=lambda s: sorted(s)))

    flats = []
    mobius: Dict[FrozenSet[int], int] = {}
    for r, level in enumerate(levels):
        for hyperplanes in level:
            mobius[hyperplanes] = 1 if r == 0 else -sum(
                value for other, value in mobius.items() if other < hyperplanes)
            flats.append(Flat(hyperplanes, r, a.ell - r))
    return Lattice(tuple(flats), mobius, total_rank)


def char_poly_coefficients(a: Arrangement) -> Tuple[int, ...]:
    """Coefficients of the characteristic polynomial, from t^ell down to
    t^0."""
    lat = lattice(a)
    coefficients = [0] * (a.ell + 1)
    for flat in lat.flats:
        coefficients[a.ell - flat.dim] += lat.mobius[flat.hyperplanes]
    return tuple(coefficients)


def char_poly(a: Arrangement) -> sympy.Poly:
    return sympy.Poly(list(char_poly_coefficients(a)), T)


def betti(a: Arrangement) -> Tuple[int, ...]:
    """Betti numbers b_0..b_ell read off the characteristic polynomial."""
    return tuple((-1)**k * c for k, c in enumerate(char_poly_coefficients(a)))


def zaslavsky_count(a: Arrangement) -> int:
    return sum(betti(a))


def codim2_flats(a: Arrangement) -> List[Flat]:
    return lattice(a).by_rank(2)


def is_generic_codim2(a: Arrangement) -> bool:
    """True iff every rank-2 flat lies on exactly two hyperplanes."""
    if arrangement_rank(a) < 2:
        return True
    return all(len(flat.hyperplanes) == 2 for flat in codim2_flats(a))


def random_arrangement(rng: random.Random,
                       n: int,
                       ell: int,
                       generic: bool = False,
                       bound: int = 3,
                       max_attempts: int = 10000) -> Arrangement:
    """Arrangement with small random integer normals.

    Args:
        rng: seeded random source
        n: number of hyperplanes
        ell: ambient dimension
        generic (optional): require codim-2 genericity
        bound (optional): entries are drawn from [-bound, bound]
        max_attempts (optional): draws allowed before giving up

    Raises:
        DomainException: if no arrangement was found within max_attempts
    """
    normals: List[Tuple[int, ...]] = []
    keys = set()
    attempts = 0
    while len(normals) < n:
        attempts += 1
        if attempts > max_attempts:
            raise DomainException(
                f"could not draw {n} {'generic ' if generic else ''}normals "
                f"in ell={ell}")
        candidate = tuple(rng.randint(-bound, bound) for _ in range(ell))
        if not any(candidate):
            continue
        key, _ = _projective_key([Fraction(x) for x in candidate])
        if key in keys:
            continue
        if generic and any(
                rank(Matrix.from_rows(QQ, [normals[p], normals[q], candidate],
                                      cols=ell)) < 3
                for p, q in combinations(range(len(normals)), 2)):
            continue
        keys.add(key)
        normals.append(candidate)
    return Arrangement.create(ell, normals, name=f"random-{n}-{ell}")
