"""JSON documents for chamber functions, graded classes and harness
results."""

import json
from typing import Any, Dict

from vg_algebra.arrangement import Arrangement, chambers
from vg_algebra.errors import UsageException
from vg_algebra.exactla import FieldSpec
from vg_algebra.keys import CHAMBER_ORDER_VERSION, SCHEMA_VERSION, ReportDefs
from vg_algebra.reconstruct import HarnessReport, RecoveredCircuits
from vg_algebra.vgalgebra import GradedClass, VGElement


def envelope(kind: str, body: Dict[str, Any]) -> Dict[str, Any]:
    document = {ReportDefs.SCHEMA_VERSION: SCHEMA_VERSION, ReportDefs.KIND: kind}
    document.update(body)
    return document


def dumps(document: Any) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def element_to_json(f: VGElement) -> Dict[str, Any]:
    return envelope(
        "vg_element", {
            ReportDefs.ARRANGEMENT_HASH: f.arrangement.hash,
            ReportDefs.CHAMBER_ORDER: CHAMBER_ORDER_VERSION,
            ReportDefs.FIELD: f.field.name,
            ReportDefs.VALUES: [f.field.to_str(x) for x in f.values],
        })


def _check_tags(document: Dict[str, Any], a: Arrangement) -> FieldSpec:
    if document.get(ReportDefs.ARRANGEMENT_HASH) != a.hash:
        raise UsageException("saved function belongs to a different arrangement")
    if document.get(ReportDefs.CHAMBER_ORDER) != CHAMBER_ORDER_VERSION:
        raise UsageException(
            "saved function uses chamber order "
            f"{document.get(ReportDefs.CHAMBER_ORDER)!r}, "
            f"expected {CHAMBER_ORDER_VERSION!r}")
    return FieldSpec.parse(document.get(ReportDefs.FIELD, "Q"), allow_char2=True)


def element_from_json(document: Dict[str, Any], a: Arrangement) -> VGElement:
    """Rebuild a saved chamber function on its arrangement.

    Raises:
        UsageException: if the hash, chamber order or length does not match
    """
    field = _check_tags(document, a)
    values = tuple(field.element(x) for x in document.get(ReportDefs.VALUES, []))
    if len(values) != len(chambers(a)):
        raise UsageException(f"{len(values)} values for {len(chambers(a))} chambers")
    return VGElement(values, field, a)


def graded_class_to_json(u: GradedClass) -> Dict[str, Any]:
    return envelope(
        "graded_class", {
            ReportDefs.ARRANGEMENT_HASH: u.arrangement.hash,
            ReportDefs.CHAMBER_ORDER: CHAMBER_ORDER_VERSION,
            ReportDefs.FIELD: u.field.name,
            ReportDefs.DEGREE: u.degree,
            ReportDefs.COORDINATES: [u.field.to_str(x) for x in u.coordinates],
        })


def graded_class_from_json(document: Dict[str, Any], a: Arrangement) -> GradedClass:
    field = _check_tags(document, a)
    return GradedClass(int(document[ReportDefs.DEGREE]),
                       tuple(field.element(x)
                             for x in document[ReportDefs.COORDINATES]),
                       field, a)


def harness_report_to_json(report: HarnessReport) -> Dict[str, Any]:
    return envelope(f"{report.kind}_harness", report.to_json())


def recovered_circuits_to_json(recovered: RecoveredCircuits,
                               field: FieldSpec) -> Dict[str, Any]:
    return envelope(
        "recovered_circuits", {
            ReportDefs.FIELD: field.name,
            ReportDefs.SCALARS: [field.to_str(x) for x in recovered.scalars],
            ReportDefs.CIRCUITS: recovered.circuits.sorted_strings(),
            ReportDefs.RELATIONS: [{
                "support": list(members),
                "signs": list(signs)
            } for members, signs in recovered.relations],
        })
