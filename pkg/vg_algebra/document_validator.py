"""Cerberus rules for arrangement and catalog documents."""

import logging
from typing import Any, Dict, List, Mapping, Optional, Tuple

from cerberus.validator import Validator

from vg_algebra.errors import ErrorDefs
from vg_algebra.keys import ArrangementDefs, CatalogDefs
from vg_algebra.utils import is_rational_literal, parse_rational

log = logging.getLogger(__name__)

ARRANGEMENT_SCHEMA: Dict[str, Mapping[str, object]] = {
    ArrangementDefs.ELL: {
        "type": "integer",
        "min": 0,
        "required": True,
    },
    ArrangementDefs.NORMALS: {
        "type": "list",
        "required": True,
        "schema": {
            "type": "list"
        },
        "rational_entries": True,
        "nonzero_vectors": True,
        "length_matches": ArrangementDefs.ELL,
        "pairwise_nonparallel": True,
    },
    ArrangementDefs.LABELS: {
        "type": "list",
        "schema": {
            "type": "string"
        },
        "label_count": ArrangementDefs.NORMALS,
    },
    ArrangementDefs.NAME: {
        "type": "string"
    },
}

EXPECTED_SCHEMA: Dict[str, Mapping[str, object]] = {
    CatalogDefs.VALUE: {
        "required": True,
        "nullable": False
    },
    CatalogDefs.PROVENANCE: {
        "type": "string",
        "required": True,
        "allowed": ["PUBLISHED", "DERIVED", "TRIVIAL"],
        "meta": {
            "errmsg": "must be one of PUBLISHED, DERIVED or TRIVIAL"
        },
    },
}

CATALOG_SCHEMA: Dict[str, Mapping[str, object]] = {
    CatalogDefs.NAME: {
        "type": "string",
        "required": True,
        "regex": "^[a-z0-9-]+$"
    },
    CatalogDefs.VERSION: {
        "type": "integer",
        "min": 1,
        "required": True
    },
    CatalogDefs.DESCRIPTION: {
        "type": "string"
    },
    CatalogDefs.ARRANGEMENT: {
        "type": "dict",
        "required": True,
        "schema": ARRANGEMENT_SCHEMA,
    },
    CatalogDefs.EXPECTED: {
        "type": "dict",
        "required": True,
        "valuesrules": {
            "type": "dict",
            "schema": EXPECTED_SCHEMA
        },
    },
    CatalogDefs.CHAMBER_LABELS: {
        "type": "list",
        "schema": {
            "type": "list",
            "minlength": 2,
            "maxlength": 2,
        },
    },
    CatalogDefs.FUNCTIONS: {
        "type": "dict",
        "valuesrules": {
            "type": "list",
            "schema": {
                "type": "integer",
                "allowed": [0, 1]
            }
        },
    },
    CatalogDefs.PRINTED_SQZERO: {
        "type": "list",
        "schema": {
            "type": "list",
            "schema": {
                "type": "integer"
            }
        },
    },
    CatalogDefs.NOTES: {
        "type": "list",
        "schema": {
            "type": "string"
        }
    },
}


class ArrangementValidator(Validator):
    """Validator with the exactness and shape rules of arrangement
    documents."""

    def __init__(self, schema: Mapping, *args, **kwargs):
        """
        Args:
            schema: Validation schema as Dict[attribute, rule objects]
        """

        super().__init__(schema=schema, *args, **kwargs)

    def __parsed(self, value: List[Any]) -> List[Optional[Tuple[Any, ...]]]:
        """Vectors with every entry exact, None for any other vector."""
        parsed = []
        for vector in value:
            if isinstance(vector, list) and all(is_rational_literal(x) for x in vector):
                parsed.append(tuple(parse_rational(x) for x in vector))
            else:
                parsed.append(None)
        return parsed

    def _validate_rational_entries(self, rational_entries: bool, field: str,
                                   value: object):
        """Check that every vector entry is an int or a 'p/q' string.

        Args:
            rational_entries: Constraint value specified in the schema def
            field: Attribute name
            value: Attribute value

        Note: Don't remove below docstring,
        Cerberus uses it to validate the schema definition.

        The rule's arguments are validated against this schema:
            {'type': 'boolean'}
        """

        if not rational_entries or not isinstance(value, list):
            return

        for i, vector in enumerate(value):
            if not isinstance(vector, list):
                continue
            for j, entry in enumerate(vector):
                if isinstance(entry, float):
                    self._error(field, ErrorDefs.FLOAT_ENTRY, j + 1, i + 1)
                elif not is_rational_literal(entry):
                    self._error(field, ErrorDefs.RATIONAL, j + 1, i + 1)

    def _validate_nonzero_vectors(self, nonzero_vectors: bool, field: str,
                                  value: object):
        """
        Note: Don't remove below docstring,
        Cerberus uses it to validate the schema definition.

        The rule's arguments are validated against this schema:
            {'type': 'boolean'}
        """

        if not nonzero_vectors or not isinstance(value, list):
            return

        for i, vector in enumerate(self.__parsed(value)):
            if vector is not None and all(x == 0 for x in vector):
                self._error(field, ErrorDefs.ZERO_VECTOR, i + 1)

    def _validate_length_matches(self, length_field: str, field: str, value: object):
        """Compare the length of every vector with the value of another
        attribute.

        Note: Don't remove below docstring,
        Cerberus uses it to validate the schema definition.

        The rule's arguments are validated against this schema:
            {'type': 'string'}
        """

        if not isinstance(value, list):
            return

        expected = self.document.get(length_field)
        if not isinstance(expected, int) or isinstance(expected, bool):
            self._error(field, ErrorDefs.NO_DIMENSION, length_field)
            return

        for i, vector in enumerate(value):
            if isinstance(vector, list) and len(vector) != expected:
                self._error(field, ErrorDefs.LENGTH, i + 1, len(vector), expected)

    def _validate_pairwise_nonparallel(self, pairwise_nonparallel: bool, field: str,
                                       value: object):
        """
        Note: Don't remove below docstring,
        Cerberus uses it to validate the schema definition.

        The rule's arguments are validated against this schema:
            {'type': 'boolean'}
        """

        if not pairwise_nonparallel or not isinstance(value, list):
            return

        seen: Dict[Tuple[Any, ...], int] = {}
        for i, vector in enumerate(self.__parsed(value)):
            if vector is None or all(x == 0 for x in vector):
                continue
            lead = next(x for x in vector if x != 0)
            key = (len(vector), ) + tuple(x / lead for x in vector)
            if key in seen:
                self._error(field, ErrorDefs.PARALLEL, seen[key] + 1, i + 1)
            else:
                seen[key] = i

    def _validate_label_count(self, count_field: str, field: str, value: object):
        """Compare the number of labels with the length of another list.

        Note: Don't remove below docstring,
        Cerberus uses it to validate the schema definition.

        The rule's arguments are validated against this schema:
            {'type': 'string'}
        """

        other = self.document.get(count_field)
        if not isinstance(value, list) or not isinstance(other, list):
            return
        if len(value) != len(other):
            self._error(field, ErrorDefs.LABEL_COUNT, len(value), len(other))
