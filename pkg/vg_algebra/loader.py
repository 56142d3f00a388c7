"""Module for loading arrangement and catalog documents."""

import json
import logging
from typing import Any, Dict, List, Mapping

from cerberus.schema import SchemaError

from vg_algebra.arrangement import Arrangement
from vg_algebra.document_validator import (
    ARRANGEMENT_SCHEMA,
    CATALOG_SCHEMA,
    ArrangementValidator,
)
from vg_algebra.errors import CustomErrorHandler, UsageException
from vg_algebra.keys import ArrangementDefs

log = logging.getLogger(__name__)


class LoaderException(UsageException):
    """Raised if a document cannot be parsed or fails validation."""


def parse_json(text: str, source: str = "<input>") -> Any:
    """Parse JSON text.

    Raises:
        LoaderException: with the line and column of a syntax error
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise LoaderException(
            f"{source}: malformed JSON at line {error.lineno}, column {error.colno}: "
            f"{error.msg}") from error


def format_errors(errors: Mapping[str, List[Any]], prefix: str = "") -> List[str]:
    """Flatten a cerberus error dict into 'attribute: message' lines."""
    lines = []
    for key in sorted(errors, key=str):
        for entry in errors[key]:
            if isinstance(entry, dict):
                lines.extend(format_errors(entry, f"{prefix}{key}."))
            else:
                lines.append(f"{prefix}{key}: {entry}")
    return lines


class ArrangementLoader:
    """Class to validate input documents and build arrangements from
    them."""

    def __init__(self, schema: Mapping = None):
        """

        Args:
            schema (optional): Validation schema, defaults to the arrangement schema

        Raises:
            LoaderException: If the schema itself is invalid
        """

        self.__schema: Mapping = schema if schema is not None else ARRANGEMENT_SCHEMA
        try:
            self.__validator = ArrangementValidator(
                self.__schema, error_handler=CustomErrorHandler(self.__schema))
        except (SchemaError, RuntimeError) as error:
            raise LoaderException(f"Schema Error - {error}") from error

    @classmethod
    def for_catalog(cls) -> "ArrangementLoader":
        return cls(CATALOG_SCHEMA)

    @property
    def validator(self) -> ArrangementValidator:
        return self.__validator

    def validate(self, document: Any, source: str = "<input>") -> Dict[str, Any]:
        """Validate a parsed document.

        Raises:
            LoaderException: listing every failed rule
        """
        if not isinstance(document, dict):
            raise LoaderException(f"{source}: expected a JSON object")
        if not self.__validator.validate(document):
            lines = format_errors(self.__validator.errors)
            raise LoaderException(f"{source}: invalid document\n  " +
                                  "\n  ".join(lines))
        return document

    def load_document(self, document: Any, source: str = "<input>") -> Arrangement:
        document = self.validate(document, source)
        return Arrangement.create(document[ArrangementDefs.ELL],
                                  document[ArrangementDefs.NORMALS],
                                  document.get(ArrangementDefs.LABELS),
                                  document.get(ArrangementDefs.NAME, ""))

    def load_text(self, text: str, source: str = "<input>") -> Arrangement:
        return self.load_document(parse_json(text, source), source)
