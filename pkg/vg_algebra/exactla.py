"""Exact linear algebra over the rationals or a prime field.

Every vector in the toolkit is a tuple of field elements. Rational
elements are ``fractions.Fraction`` instances, prime field elements are
plain ints reduced into ``range(p)``. Nothing here ever touches floating
point.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from vg_algebra.errors import DomainException, UsageException
from vg_algebra.utils import format_rational, parse_rational

log = logging.getLogger(__name__)

MAX_PRIME = 2**31

Vector = Tuple[Any, ...]


def is_prime(p: int) -> bool:
    """Deterministic trial division, adequate for p <= 2^31."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """Coefficient field: the rationals, or a prime field F_p."""

    def __init__(self, characteristic: int = 0, allow_char2: bool = False):
        """
        Args:
            characteristic: 0 for the rationals, otherwise a prime p <= 2^31
            allow_char2 (optional): override required to build F_2

        Raises:
            UsageException: if the characteristic is not 0 or a prime in range
            DomainException: if F_2 is requested without the override
        """
        if characteristic != 0:
            if characteristic > MAX_PRIME or not is_prime(characteristic):
                raise UsageException(
                    "field characteristic must be 0 or a prime <= 2^31, "
                    f"got {characteristic}")
            if characteristic == 2 and not allow_char2:
                raise DomainException(
                    "characteristic 2 requires the explicit override (--allow-char2)")

        self.__p: int = characteristic
        self.__allow_char2: bool = allow_char2

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int, allow_char2: bool = False) -> "FieldSpec":
        return cls(p, allow_char2=allow_char2)

    @classmethod
    def parse(cls, text: str, allow_char2: bool = False) -> "FieldSpec":
        """Parse 'Q' or 'Fp:<p>'.

        Raises:
            UsageException: on any other string
        """
        cleaned = text.strip()
        if cleaned.upper() in ("Q", "QQ"):
            return cls.rationals()
        if cleaned[:3].lower() == "fp:":
            try:
                p = int(cleaned[3:])
            except ValueError as error:
                raise UsageException(f"invalid field {text!r}") from error
            return cls.prime(p, allow_char2=allow_char2)
        raise UsageException(f"invalid field {text!r}, expected Q or Fp:<p>")

    @property
    def characteristic(self) -> int:
        return self.__p

    @property
    def allow_char2(self) -> bool:
        return self.__allow_char2

    @property
    def is_rational(self) -> bool:
        return self.__p == 0

    @property
    def name(self) -> str:
        return "Q" if self.__p == 0 else f"Fp:{self.__p}"

    @property
    def zero(self) -> Any:
        return Fraction(0) if self.__p == 0 else 0

    @property
    def one(self) -> Any:
        return Fraction(1) if self.__p == 0 else 1

    def require_odd_characteristic(self, operation: str) -> None:
        """Reject characteristic 2 for operations that rely on 2 being a
        unit.

        Raises:
            DomainException: in characteristic 2, regardless of the override
        """
        if self.__p == 2:
            raise DomainException(f"{operation} requires characteristic != 2")

    def require_char2_override(self, operation: str) -> None:
        """Reject characteristic 2 unless the override was given."""
        if self.__p == 2 and not self.__allow_char2:
            raise DomainException(
                f"{operation} in characteristic 2 requires the override")

    def element(self, value: Any) -> Any:
        """Convert an int, Fraction or rational string into a field
        element."""
        if self.__p == 0:
            return parse_rational(value)
        value = parse_rational(value)
        denominator = value.denominator % self.__p
        if denominator == 0:
            raise DomainException(f"{value} is not defined in {self.name}")
        return value.numerator * pow(denominator, -1, self.__p) % self.__p

    def add(self, a: Any, b: Any) -> Any:
        if self.__p:
            return (a + b) % self.__p
        return a + b

    def sub(self, a: Any, b: Any) -> Any:
        if self.__p:
            return (a - b) % self.__p
        return a - b

    def neg(self, a: Any) -> Any:
        if self.__p:
            return -a % self.__p
        return -a

    def mul(self, a: Any, b: Any) -> Any:
        if self.__p:
            return a * b % self.__p
        return a * b

    def inv(self, a: Any) -> Any:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.__p:
            return pow(a, -1, self.__p)
        return Fraction(1) / a

    def div(self, a: Any, b: Any) -> Any:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Any) -> bool:
        return a == 0

    def to_str(self, a: Any) -> str:
        return format_rational(a)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and other.characteristic == self.__p

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.__p))

    def __repr__(self) -> str:
        return f"FieldSpec({self.name})"


def vector(field: FieldSpec, values: Iterable[Any]) -> Vector:
    return tuple(field.element(value) for value in values)


def dot(field: FieldSpec, u: Sequence[Any], v: Sequence[Any]) -> Any:
    total = field.zero
    for a, b in zip(u, v):
        total = field.add(total, field.mul(a, b))
    return total


def axpy(field: FieldSpec, a: Any, x: Sequence[Any], y: Sequence[Any]) -> Vector:
    """a*x + y."""
    return tuple(field.add(field.mul(a, xi), yi) for xi, yi in zip(x, y))


def scale(field: FieldSpec, a: Any, x: Sequence[Any]) -> Vector:
    return tuple(field.mul(a, xi) for xi in x)


def is_zero_vector(field: FieldSpec, x: Sequence[Any]) -> bool:
    return all(field.is_zero(xi) for xi in x)


@dataclass(frozen=True)
class Matrix:
    """Rectangular matrix of exact field elements, stored by rows."""

    field: FieldSpec
    rows: Tuple[Vector, ...]
    cols: int

    @classmethod
    def from_rows(cls,
                  field: FieldSpec,
                  rows: Iterable[Iterable[Any]],
                  cols: Optional[int] = None) -> "Matrix":
        """Build a matrix, converting entries into field elements.

        Raises:
            UsageException: if the rows are ragged
        """
        converted = tuple(vector(field, row) for row in rows)
        if cols is None:
            cols = len(converted[0]) if converted else 0
        for row in converted:
            if len(row) != cols:
                raise UsageException(
                    f"ragged matrix: row of length {len(row)}, expected {cols}")
        return cls(field, converted, cols)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence[Any]],
                     nrows: int) -> "Matrix":
        rows = [[column[i] for column in columns] for i in range(nrows)]
        return cls.from_rows(field, rows, cols=len(columns))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.field,
                      tuple(tuple(row[j] for row in self.rows)
                            for j in range(self.cols)),
                      self.nrows)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)


def _rref_rows(field: FieldSpec, rows: Sequence[Sequence[Any]],
               ncols: int) -> Tuple[List[Vector], List[int]]:
    """Gauss-Jordan elimination with leftmost pivots and unit leading
    entries."""
    work = [list(row) for row in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        pivot_row = next(
            (i for i in range(r, len(work)) if not field.is_zero(work[i][c])), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inverse = field.inv(work[r][c])
        work[r] = [field.mul(inverse, x) for x in work[r]]
        for i, row in enumerate(work):
            if i != r and not field.is_zero(row[c]):
                factor = row[c]
                work[i] = [field.sub(x, field.mul(factor, y))
                           for x, y in zip(row, work[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in work[:r]], pivots


@dataclass(frozen=True)
class Subspace:
    """Subspace of field^dim given by a reduced row-echelon basis."""

    field: FieldSpec
    dim: int
    rows: Tuple[Vector, ...]
    pivots: Tuple[int, ...]

    @classmethod
    def span(cls, field: FieldSpec, dim: int,
             vectors: Iterable[Sequence[Any]]) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != dim:
                raise UsageException(
                    f"vector of length {len(v)} in ambient dimension {dim}")
        rows, pivots = _rref_rows(field, vectors, dim)
        return cls(field, dim, tuple(rows), tuple(pivots))

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _check_dim(self, length: int) -> None:
        if length != self.dim:
            raise UsageException(
                f"dimension mismatch: vector of length {length}, "
                f"subspace in {self.dim}")

    def reduce(self, v: Sequence[Any]) -> Vector:
        """Residual of v after elimination against the basis."""
        self._check_dim(len(v))
        residual = tuple(v)
        for row, pivot in zip(self.rows, self.pivots):
            if not self.field.is_zero(residual[pivot]):
                residual = axpy(self.field, self.field.neg(residual[pivot]), row,
                                residual)
        return residual

    def contains(self, v: Sequence[Any]) -> bool:
        return is_zero_vector(self.field, self.reduce(v))

    def coordinates(self, v: Sequence[Any]) -> Optional[Vector]:
        """Coefficients of v in the echelon basis, or None if v is
        outside."""
        if not self.contains(v):
            return None
        return tuple(v[pivot] for pivot in self.pivots)

    def equals(self, other: "Subspace") -> bool:
        self._check_dim(other.dim)
        return self.rows == other.rows

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_dim(other.dim)
        return Subspace.span(self.field, self.dim, self.rows + other.rows)

    def intersection(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of [U | -W] acting on
        coefficients."""
        self._check_dim(other.dim)
        if not self.rows or not other.rows:
            return Subspace(self.field, self.dim, (), ())
        minus_one = self.field.neg(self.field.one)
        columns = list(self.rows)
        columns += [scale(self.field, minus_one, w) for w in other.rows]
        relations = kernel(Matrix.from_columns(self.field, columns, self.dim))
        vectors = []
        for relation in relations.rows:
            combination = tuple(self.field.zero for _ in range(self.dim))
            for coefficient, row in zip(relation[:self.rank], self.rows):
                combination = axpy(self.field, coefficient, row, combination)
            vectors.append(combination)
        return Subspace.span(self.field, self.dim, vectors)


def rref(m: Matrix) -> Tuple[int, Subspace]:
    """Reduced row-echelon form of the row space of m."""
    rows, pivots = _rref_rows(m.field, m.rows, m.cols)
    return len(rows), Subspace(m.field, m.cols, tuple(rows), tuple(pivots))


def rank(m: Matrix) -> int:
    return rref(m)[0]


def kernel(m: Matrix) -> Subspace:
    """Null space {x : m x = 0}, returned in reduced echelon form."""
    field = m.field
    rows, pivots = _rref_rows(field, m.rows, m.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        x = [field.zero] * m.cols
        x[free] = field.one
        for row, pivot in zip(rows, pivots):
            x[pivot] = field.neg(row[free])
        basis.append(tuple(x))
    return Subspace.span(field, m.cols, basis)


def contains(s: Subspace, v: Sequence[Any]) -> bool:
    return s.contains(v)


def equal(s1: Subspace, s2: Subspace) -> bool:
    return s1.equals(s2)


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    return s1.sum(s2)


def intersection(s1: Subspace, s2: Subspace) -> Subspace:
    return s1.intersection(s2)


class TrackedEchelon:
    """Incrementally grown echelon basis whose rows remember, as sparse
    tags, how they combine the tagged generators that were added.

    Generators added without a tag contribute nothing to coordinates,
    so reducing a vector against the basis yields its coordinates in
    the tagged generators modulo the span of the untagged ones.
    """

    def __init__(self, field: FieldSpec, dim: int):
        self.__field = field
        self.__dim = dim
        self.__rows: List[Tuple[int, Vector, Dict[int, Any]]] = []

    @property
    def rank(self) -> int:
        return len(self.__rows)

    @property
    def dim(self) -> int:
        return self.__dim

    @property
    def is_full(self) -> bool:
        return len(self.__rows) == self.__dim

    def vectors(self) -> List[Vector]:
        return [row for _, row, _ in self.__rows]

    def reduce(self, v: Sequence[Any]) -> Tuple[Vector, Dict[int, Any]]:
        """Eliminate v against the rows, in increasing pivot order.

        Returns:
            residual and the tag combination consumed, so that
            v = residual + sum of consumed rows
        """
        if len(v) != self.__dim:
            raise UsageException(
                f"dimension mismatch: vector of length {len(v)}, "
                f"echelon in {self.__dim}")
        field = self.__field
        residual = tuple(v)
        consumed: Dict[int, Any] = {}
        for pivot, row, tag in self.__rows:
            coefficient = residual[pivot]
            if field.is_zero(coefficient):
                continue
            residual = axpy(field, field.neg(coefficient), row, residual)
            for key, value in tag.items():
                updated = field.add(consumed.get(key, field.zero),
                                    field.mul(coefficient, value))
                if field.is_zero(updated):
                    consumed.pop(key, None)
                else:
                    consumed[key] = updated
        return residual, consumed

    def add(self, v: Sequence[Any], tag: Optional[int] = None) -> bool:
        """Add a generator; returns False if it was already in the span."""
        field = self.__field
        residual, consumed = self.reduce(v)
        lead = next((i for i, x in enumerate(residual) if not field.is_zero(x)), None)
        if lead is None:
            return False
        row_tag = {key: field.neg(value) for key, value in consumed.items()}
        if tag is not None:
            row_tag[tag] = field.add(row_tag.get(tag, field.zero), field.one)
        inverse = field.inv(residual[lead])
        row = scale(field, inverse, residual)
        row_tag = {
            key: field.mul(inverse, value)
            for key, value in row_tag.items() if not field.is_zero(value)
        }
        self.__rows.append((lead, row, row_tag))
        self.__rows.sort(key=lambda entry: entry[0])
        return True
