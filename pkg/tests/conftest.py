"""Pytest configuration and fixtures."""
import pytest

from turaev.services.builders import build_from_code
from turaev.services.catalog import ingest_catalog
from turaev.services.diagram import parse_pd

TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
KINK_PD = "X(1,2,2,1)"


@pytest.fixture
def trefoil():
    """Right-handed trefoil, writhe +3."""
    return parse_pd(TREFOIL_PD)


@pytest.fixture
def kink():
    """One-crossing unknot."""
    return parse_pd(KINK_PD)


@pytest.fixture
def figure_eight():
    return build_from_code("conway:22")


@pytest.fixture
def pretzel_8_19():
    """P(3,3,-2), a genus-one diagram of 8_19."""
    return build_from_code("conway:3,3,-2")


@pytest.fixture(scope="session")
def catalog():
    """The bundled knot table."""
    return ingest_catalog()


@pytest.fixture(scope="session")
def catalog_by_name(catalog):
    return {entry.name: entry for entry in catalog}
