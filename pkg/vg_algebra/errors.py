"""Exception hierarchy and document-validation error definitions."""

from typing import Mapping

from cerberus.errors import (
    BasicErrorHandler,
    ErrorDefinition,
    ErrorTree,
    ValidationError,
)

# pylint: disable=(too-few-public-methods)


class VGException(Exception):
    """Base class for errors raised by the toolkit."""

    exit_code = 3


class UsageException(VGException):
    """Raised when an input document, argument or dimension is malformed."""

    exit_code = 1


class DomainException(VGException):
    """Raised when an operation is invoked outside its hypothesis."""

    exit_code = 2


class InvariantViolation(VGException):
    """Raised when an internal consistency check fails."""

    exit_code = 3


class ErrorDefs:
    """Class to define custom document validation errors."""

    # IMPORTANT - When adding a new error DON'T change the existing codes
    # Cerberus uses bit 5 and bit 7 to mark specific error types
    # Check https://docs.python-cerberus.org/customize.html for more info
    RATIONAL = ErrorDefinition(0x1000, "rational_entries")
    FLOAT_ENTRY = ErrorDefinition(0x1001, "rational_entries")
    ZERO_VECTOR = ErrorDefinition(0x1002, "nonzero_vectors")
    LENGTH = ErrorDefinition(0x1003, "length_matches")
    PARALLEL = ErrorDefinition(0x1004, "pairwise_nonparallel")
    LABEL_COUNT = ErrorDefinition(0x1005, "label_count")
    NO_DIMENSION = ErrorDefinition(0x1006, "length_matches")


class CustomErrorHandler(BasicErrorHandler):
    """Class to provide custom error messages."""

    def __init__(self, schema: Mapping = None, tree: ErrorTree = None):
        """

        Args:
            schema (optional): Validation schema as dict[field, rule objects].
            tree (optional): Validation errors tree.
        """

        super().__init__(tree)
        self.__set_custom_error_codes()
        self._custom_schema = schema

    def __set_custom_error_codes(self):
        """Add custom error codes specific to arrangement documents."""
        # Error messages are synced with ErrorDefs using the error code
        custom_errors = {
            0x1000: "entry {0} of vector {1} is not an exact rational",
            0x1001: "entry {0} of vector {1} is a float, use a string 'p/q'",
            0x1002: "vector {0} is zero",
            0x1003: "vector {0} has {1} entries, expected {2}",
            0x1004: "vectors {0} and {1} are parallel",
            0x1005: "{0} labels given for {1} vectors",
            0x1006: "cannot check vector lengths, field '{0}' is missing",
        }

        self.messages.update(custom_errors)

    def _format_message(self, field: str, error: ValidationError):
        """Display custom error message. Use the 'meta' tag in the schema to
        specify a custom error message e.g. "meta": {"errmsg": "<custom
        message>"}

        Args:
            field: Variable name
            error: Error object generated by applying validation rules
        """

        if self._custom_schema and field in self._custom_schema:
            error_msg = self._custom_schema[field].get("meta", {}).get("errmsg", "")
            if error_msg:
                return field + ": " + error_msg

        return super()._format_message(field, error)
