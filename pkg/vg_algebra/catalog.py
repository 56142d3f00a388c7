"""Built-in example arrangements with their expected invariants.

Each entry is a versioned JSON resource under ``vg_algebra/catalog_data``
and is re-verified when loaded.
"""

import logging
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Dict, List, Optional, Tuple

from vg_algebra.arrangement import (
    Arrangement,
    chambers,
    char_poly_coefficients,
    is_generic_codim2,
    tope_graph,
)
from vg_algebra.errors import InvariantViolation, UsageException
from vg_algebra.exactla import FieldSpec
from vg_algebra.keys import ArrangementDefs, CatalogDefs
from vg_algebra.loader import ArrangementLoader, parse_json
from vg_algebra.omatroid import graph_automorphism_order, signed_circuits
from vg_algebra.reconstruct import aut_groups
from vg_algebra.utils import parse_sign_vector
from vg_algebra.vgalgebra import (
    VGElement,
    gheav_bruteforce,
    gheav_structural,
    heaviside,
    sqzero,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Expected:
    value: Any
    provenance: str


@dataclass(frozen=True)
class CatalogEntry:
    """A named arrangement with provenance-tagged expected invariants."""

    name: str
    version: int
    arrangement: Arrangement
    expected: Dict[str, Expected] = field(hash=False)
    description: str = ""
    chamber_labels: Tuple[Tuple[str, str], ...] = ()
    functions: Dict[str, Tuple[int, ...]] = field(default_factory=dict, hash=False)
    printed_sqzero: Tuple[Tuple[int, ...], ...] = ()
    notes: Tuple[str, ...] = ()

    @classmethod
    def from_document(cls, document: Dict[str, Any]) -> "CatalogEntry":
        arrangement_doc = dict(document[CatalogDefs.ARRANGEMENT])
        arrangement_doc.setdefault(ArrangementDefs.NAME, document[CatalogDefs.NAME])
        arrangement = ArrangementLoader().load_document(arrangement_doc,
                                                        document[CatalogDefs.NAME])
        return cls(
            name=document[CatalogDefs.NAME],
            version=document[CatalogDefs.VERSION],
            arrangement=arrangement,
            expected={
                key: Expected(item[CatalogDefs.VALUE], item[CatalogDefs.PROVENANCE])
                for key, item in document[CatalogDefs.EXPECTED].items()
            },
            description=document.get(CatalogDefs.DESCRIPTION, ""),
            chamber_labels=tuple(
                (label, bits)
                for label, bits in document.get(CatalogDefs.CHAMBER_LABELS, [])),
            functions={
                key: tuple(values)
                for key, values in document.get(CatalogDefs.FUNCTIONS, {}).items()
            },
            printed_sqzero=tuple(
                tuple(line) for line in document.get(CatalogDefs.PRINTED_SQZERO, [])),
            notes=tuple(document.get(CatalogDefs.NOTES, [])),
        )

    def to_document(self) -> Dict[str, Any]:
        document = self.arrangement.to_document()
        document[ArrangementDefs.NAME] = self.name
        return document


def catalog_names() -> List[str]:
    root = resources.files("vg_algebra") / "catalog_data"
    return sorted(item.name[:-len(".json")] for item in root.iterdir()
                  if item.name.endswith(".json"))


def load_entry(name: str, verify: bool = True) -> CatalogEntry:
    """Load a catalog entry by name.

    Raises:
        UsageException: if there is no entry of that name
        InvariantViolation: if verification is requested and fails
    """
    resource = resources.files("vg_algebra") / "catalog_data" / f"{name}.json"
    if not resource.is_file():
        raise UsageException(
            f"unknown catalog entry {name!r}, available: {', '.join(catalog_names())}")
    source = f"catalog_data/{name}.json"
    document = parse_json(resource.read_text(encoding="utf-8"), source)
    document = ArrangementLoader.for_catalog().validate(document, source)
    entry = CatalogEntry.from_document(document)
    if verify:
        verify_entry(entry)
    return entry


def measure(entry: CatalogEntry,
            key: str,
            field: FieldSpec = FieldSpec.rationals()) -> Any:
    """Recompute one expected invariant from scratch."""
    a = entry.arrangement
    if key == CatalogDefs.CHAMBERS:
        return len(chambers(a))
    if key == CatalogDefs.CHAR_POLY:
        return list(char_poly_coefficients(a))
    if key == CatalogDefs.GHEAV:
        return len(gheav_bruteforce(a, field))
    if key == CatalogDefs.SQZERO:
        return len(sqzero(a, field))
    if key == CatalogDefs.AUT_GRAPH:
        return graph_automorphism_order(tope_graph(a))
    if key == CatalogDefs.AUT_FILT:
        return aut_groups(a, field).filtered_order
    if key == CatalogDefs.GENERIC:
        return is_generic_codim2(a)
    if key == CatalogDefs.DEGREE6:
        return sum(1 for _, d in tope_graph(a).degree if d == 6)
    if key == CatalogDefs.CIRCUITS:
        return len(signed_circuits(a))
    raise UsageException(f"unknown catalog invariant {key!r}")


def verify_entry(entry: CatalogEntry) -> None:
    """Re-derive every tagged invariant.

    Raises:
        InvariantViolation: naming the first invariant that does not match
    """
    for key in sorted(entry.expected):
        expected = entry.expected[key]
        found = measure(entry, key)
        if found != expected.value:
            raise InvariantViolation(
                f"catalog entry {entry.name}: {key} is {found}, "
                f"expected {expected.value} "
                f"[{expected.provenance}]")
        log.debug("%s: %s = %s [%s]", entry.name, key, found, expected.provenance)
    if entry.printed_sqzero:
        compare_printed_sqzero(entry)


def compare_printed_sqzero(entry: CatalogEntry) -> Optional[List[str]]:
    """Compare the computed square-zero lines with the printed ones.

    Returns:
        None when the sets agree, otherwise the discrepancy lines (also
        logged as a warning); the line counts are checked by the caller
    """
    computed = {tuple(int(x) for x in line) for line in sqzero(entry.arrangement)}
    printed = set(entry.printed_sqzero)
    if computed == printed:
        return None
    discrepancy = [f"only computed: {list(line)}"
                   for line in sorted(computed - printed)]
    discrepancy += [f"only printed: {list(line)}"
                    for line in sorted(printed - computed)]
    log.warning("%s: computed square-zero lines differ from the printed list: %s",
                entry.name,
                "; ".join(discrepancy + list(entry.notes)))
    return discrepancy


def _printed_order(entry: CatalogEntry) -> List[int]:
    """Chamber index of every printed column, with each primed label
    checked to be the chamber opposite its unprimed one."""
    cs = chambers(entry.arrangement)
    order = []
    for label, bits in entry.chamber_labels:
        sv = parse_sign_vector(bits.replace("1", "+").replace("0", "-"))
        if sv not in cs.index:
            raise InvariantViolation(
                f"label {label} ({bits}) is not a chamber of {entry.name}")
        order.append(cs.index[sv])
    if sorted(order) != list(range(len(cs))):
        raise InvariantViolation(f"chamber labels of {entry.name} are not a bijection")

    bits_of = dict(entry.chamber_labels)
    for label, bits in entry.chamber_labels:
        base = bits_of.get(label[:-1]) if label.endswith("'") else None
        if base is not None and any(x == y for x, y in zip(base, bits)):
            raise InvariantViolation(
                f"label {label} is not opposite {label[:-1]} in {entry.name}")
    return order


def product_table(entry: CatalogEntry) -> Dict[str, Tuple[int, ...]]:
    """Rows of the printed product table in printed column order.

    The x rows are the Heaviside functions. The named rows must be, up
    to taking 1 - y, exactly the generalized Heaviside functions built
    from the rank-2 flats that are not Heaviside functions.

    Raises:
        InvariantViolation: if a label is not a chamber, the labels are
            not a bijection or break opposite pairs, or the named rows
            differ from the computed functions
    """
    a = entry.arrangement
    order = _printed_order(entry)

    def printed(element: VGElement) -> Tuple[int, ...]:
        return tuple(int(element.values[c]) for c in order)

    rows: Dict[str, Tuple[int, ...]] = {
        f"x{i + 1}": printed(heaviside(a, i)) for i in range(a.n)
    }

    heavisides = {heaviside(a, i, side) for i in range(a.n) for side in (1, -1)}
    computed = {
        frozenset((printed(y), printed(y.complement())))
        for y in gheav_structural(a) if y not in heavisides
    }
    covered = set()
    for name, row in entry.functions.items():
        pair = next((p for p in computed if tuple(row) in p), None)
        if pair is None:
            raise InvariantViolation(
                f"row {name} is not a generalized Heaviside function")
        covered.add(pair)
        rows[name] = tuple(row)
    if entry.functions and covered != computed:
        raise InvariantViolation(
            f"{len(computed) - len(covered)} generalized Heaviside functions of "
            f"{entry.name} are missing from the printed rows")
    return rows


def named_function(entry: CatalogEntry, name: str) -> VGElement:
    """A printed row as a chamber function over Q.

    Raises:
        UsageException: if the entry has no row of that name
    """
    if name not in entry.functions:
        raise UsageException(f"catalog entry {entry.name} has no function {name!r}")
    order = _printed_order(entry)
    values = [0] * len(order)
    for c, value in zip(order, entry.functions[name]):
        values[c] = value
    field = FieldSpec.rationals()
    return VGElement(tuple(field.element(v) for v in values), field, entry.arrangement)
