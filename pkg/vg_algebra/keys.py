"""Module for commonly used keys."""

# pylint: disable=(too-few-public-methods)


class ArrangementDefs:
    """Class to store arrangement document attribute labels."""

    ELL = "ell"
    NORMALS = "normals"
    LABELS = "labels"
    NAME = "name"


class CatalogDefs:
    """Class to store catalog entry attribute labels."""

    NAME = "name"
    VERSION = "version"
    DESCRIPTION = "description"
    ARRANGEMENT = "arrangement"
    EXPECTED = "expected"
    VALUE = "value"
    PROVENANCE = "provenance"
    CHAMBER_LABELS = "chamber_labels"
    FUNCTIONS = "functions"
    PRINTED_SQZERO = "printed_sqzero"
    NOTES = "notes"

    # expected invariant names
    CHAMBERS = "chambers"
    CHAR_POLY = "char_poly"
    GHEAV = "gheav"
    SQZERO = "sqzero"
    AUT_GRAPH = "aut_graph"
    AUT_FILT = "aut_filt"
    GENERIC = "generic_codim2"
    DEGREE6 = "degree6_vertices"
    CIRCUITS = "circuits"


class ReportDefs:
    """Class to store report attribute labels."""

    SCHEMA_VERSION = "schema_version"
    KIND = "kind"
    ARRANGEMENT_HASH = "arrangement_hash"
    CHAMBER_ORDER = "chamber_order"
    FIELD = "field"
    DEGREE = "degree"
    VALUES = "values"
    COORDINATES = "coordinates"
    MODE = "mode"
    SEED = "seed"
    TRIALS = "trials"
    COUNTS = "counts"
    COUNTEREXAMPLES = "counterexamples"
    CHOICES = "choices"
    HEADER = "header"
    CIRCUITS = "circuits"
    SCALARS = "scalars"
    RELATIONS = "relations"
    NODES = "nodes"
    ADJACENCY = "adjacency"
    RESULTS = "results"
    PASSED = "passed"
    FAILED = "failed"


class Limits:
    """Soft limits for exact enumeration."""

    MAX_HYPERPLANES = 16
    MAX_DIMENSION = 5


class EnvDefs:
    """Environment variables read by the command line front end."""

    SEED = "VG_SEED"
    LOG_LEVEL = "VG_LOG_LEVEL"


SCHEMA_VERSION = "1.0"

# bumped whenever the deterministic chamber order changes
CHAMBER_ORDER_VERSION = "lex-plus-first/1"
