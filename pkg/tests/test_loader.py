"""
Tests parsing and validating input documents in `loader.py`.
"""
import pytest

from vg_algebra.loader import ArrangementLoader, LoaderException, format_errors, parse_json


def test_parse_json_malformed():
    """ Test the location of a syntax error """
    with pytest.raises(LoaderException) as e:
        parse_json('{"ell": 2,\n "normals": }', "bad.json")
    assert str(e.value).startswith("bad.json: malformed JSON at line 2, column 13: ")

def test_format_errors_nested():
    """ Test nested cerberus errors are flattened with dotted keys """
    errors = {'expected': [{'gheav': [{'provenance': ['unallowed value GUESS']}]}],
              'name': ['required field']}
    assert format_errors(errors) == [
        "expected.gheav.provenance: unallowed value GUESS",
        "name: required field",
    ]

def test_load_text():
    """ Test building an arrangement from JSON text """
    text = '{"ell": 2, "normals": [[1, 0], ["1/2", 1]], "labels": ["x", "y"], "name": "two"}'
    a = ArrangementLoader().load_text(text, "two.json")
    assert a.n == 2
    assert a.labels == ("x", "y")
    assert a.name == "two"

def test_validate_not_an_object():
    """ Test a top-level list """
    with pytest.raises(LoaderException) as e:
        ArrangementLoader().load_text("[1, 2]", "list.json")
    assert str(e.value) == "list.json: expected a JSON object"

def test_validate_lists_every_error():
    """ Test all failed rules are reported together """
    with pytest.raises(LoaderException) as e:
        ArrangementLoader().load_text('{"ell": 2, "normals": [[0, 0], [1, 0]], "labels": []}',
                                      "bad.json")
    assert str(e.value) == ("bad.json: invalid document\n"
                            "  labels: 0 labels given for 2 vectors\n"
                            "  normals: vector 1 is zero")

def test_schema_error():
    """ Test an invalid schema """
    with pytest.raises(LoaderException) as e:
        ArrangementLoader({'ell': {'no_such_rule': True}})
    assert str(e.value).startswith("Schema Error - ")

def test_catalog_loader(load_catalog):
    """ Test the catalog schema accepts a shipped entry shape """
    document = {
        'name': 'pencil3',
        'version': 1,
        'arrangement': load_catalog('pencil3').arrangement.to_document(),
        'expected': {'chambers': {'value': 6, 'provenance': 'PUBLISHED'}},
    }
    assert ArrangementLoader.for_catalog().validate(document, "entry") == document
    document['name'] = 'Pencil 3'
    with pytest.raises(LoaderException):
        ArrangementLoader.for_catalog().validate(document, "entry")
