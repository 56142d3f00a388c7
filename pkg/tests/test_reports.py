"""
Tests the JSON documents written by `reports.py`.
"""
import json

import pytest

from vg_algebra.errors import UsageException
from vg_algebra.keys import CHAMBER_ORDER_VERSION
from vg_algebra.reconstruct import check_circuits, conjecture_harness_filtered
from vg_algebra.reports import (
    dumps,
    element_from_json,
    element_to_json,
    graded_class_from_json,
    graded_class_to_json,
    harness_report_to_json,
    recovered_circuits_to_json,
)
from vg_algebra.vgalgebra import heaviside


def test_dumps_is_canonical():
    """ Test sorted keys and the trailing newline """
    assert dumps({"b": 1, "a": [1]}) == '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'

def test_element_document(pencil3):
    """ Test the tags and values of a saved function """
    y = heaviside(pencil3, 0).scaled("2/3")
    document = element_to_json(y)
    assert document["schema_version"] == "1.0"
    assert document["kind"] == "vg_element"
    assert document["chamber_order"] == CHAMBER_ORDER_VERSION
    assert document["values"] == ["2/3", "2/3", "2/3", "0", "0", "0"]
    assert element_from_json(json.loads(dumps(document)), pencil3) == y

def test_element_wrong_arrangement(pencil3, boolean2):
    """ Test loading a function onto another arrangement """
    document = element_to_json(heaviside(boolean2, 0))
    with pytest.raises(UsageException) as e:
        element_from_json(document, pencil3)
    assert str(e.value) == "saved function belongs to a different arrangement"

def test_element_wrong_chamber_order(pencil3):
    """ Test a function saved under another chamber order """
    document = element_to_json(heaviside(pencil3, 0))
    document["chamber_order"] = "lex-minus-first/1"
    with pytest.raises(UsageException) as e:
        element_from_json(document, pencil3)
    assert str(e.value) == ("saved function uses chamber order 'lex-minus-first/1', "
                            "expected 'lex-plus-first/1'")

def test_element_wrong_length(pencil3):
    """ Test a truncated value list """
    document = element_to_json(heaviside(pencil3, 0))
    document["values"] = document["values"][:4]
    with pytest.raises(UsageException) as e:
        element_from_json(document, pencil3)
    assert str(e.value) == "4 values for 6 chambers"

def test_graded_class_document(a3, create_fil_chain, f3):
    """ Test a class over F_3 keeps its degree and field """
    fc = create_fil_chain(a3, f3)
    cls = fc.graded_class(heaviside(a3, 1, -1, f3), 1)
    document = graded_class_to_json(cls)
    assert document["field"] == "Fp:3"
    assert document["degree"] == 1
    assert graded_class_from_json(document, a3) == cls

def test_harness_document(pencil3):
    """ Test the kind of a harness report """
    document = harness_report_to_json(conjecture_harness_filtered(pencil3))
    assert document["kind"] == "filtered_harness"
    assert document["counts"]["examined"] == 4
    assert document["counterexamples"] == []

def test_recovered_circuits_document(pencil3, create_fil_chain):
    """ Test relations are written with 1-based supports """
    fc = create_fil_chain(pencil3)
    generators = [fc.graded_class(heaviside(pencil3, i), 1) for i in range(3)]
    recovered = check_circuits(fc, generators, [1, 1, 1])
    document = recovered_circuits_to_json(recovered, fc.field)
    assert document["kind"] == "recovered_circuits"
    assert document["scalars"] == ["1", "1", "1"]
    assert document["relations"][0]["support"] == [1, 2, 3]
    assert len(document["circuits"]) == 2
