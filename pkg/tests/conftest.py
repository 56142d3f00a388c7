"""
Fixtures shared by the test modules.
"""
from functools import lru_cache
from typing import Optional, Sequence

import pytest

from vg_algebra.arrangement import Arrangement
from vg_algebra.catalog import CatalogEntry, load_entry
from vg_algebra.document_validator import ARRANGEMENT_SCHEMA, ArrangementValidator
from vg_algebra.errors import CustomErrorHandler
from vg_algebra.exactla import FieldSpec
from vg_algebra.vgalgebra import FilChain, fil_chain


@pytest.fixture(scope="session")
def create_arrangement():
    def _create_arrangement(ell: int,
                            normals: Sequence[Sequence[object]],
                            labels: Optional[Sequence[str]] = None,
                            name: str = "") -> Arrangement:
        """ Creates an arrangement from plain normals """
        return Arrangement.create(ell, normals, labels, name)
    return _create_arrangement


@pytest.fixture(scope="session")
def create_validator():
    def _create_validator(schema=ARRANGEMENT_SCHEMA) -> ArrangementValidator:
        """ Creates a validator with the custom error messages """
        return ArrangementValidator(schema, error_handler=CustomErrorHandler(schema))
    return _create_validator


@pytest.fixture(scope="session")
def load_catalog():
    @lru_cache(maxsize=None)
    def _load_catalog(name: str) -> CatalogEntry:
        """ Loads a catalog entry without re-verifying it """
        return load_entry(name, verify=False)
    return _load_catalog


@pytest.fixture(scope="session")
def create_fil_chain():
    def _create_fil_chain(a: Arrangement, field: FieldSpec = FieldSpec.rationals()) -> FilChain:
        """ Builds (or reuses) the filtration of an arrangement """
        return fil_chain(a, field)
    return _create_fil_chain


@pytest.fixture(scope="session")
def boolean2(create_arrangement):
    """ The two coordinate lines of the plane, 4 chambers """
    return create_arrangement(2, [[1, 0], [0, 1]], name="boolean2")


@pytest.fixture(scope="session")
def boolean3(create_arrangement):
    """ The three coordinate planes, 8 chambers """
    return create_arrangement(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], name="boolean3")


@pytest.fixture(scope="session")
def pencil3(load_catalog):
    return load_catalog("pencil3").arrangement


@pytest.fixture(scope="session")
def a3(load_catalog):
    return load_catalog("a3").arrangement


@pytest.fixture(scope="session")
def generic6a(load_catalog):
    return load_catalog("generic6a").arrangement


@pytest.fixture(scope="session")
def generic6b(load_catalog):
    return load_catalog("generic6b").arrangement


@pytest.fixture(scope="session")
def falk_a(load_catalog):
    return load_catalog("falk-a").arrangement


@pytest.fixture(scope="session")
def falk_b(load_catalog):
    return load_catalog("falk-b").arrangement


@pytest.fixture(scope="session")
def f3():
    return FieldSpec.prime(3)
