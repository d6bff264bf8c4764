import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semirings import (
    boolean_semiring,
    matrix_semiring,
    poly_quotient,
    triangular_semiring,
    zmod,
)


@pytest.fixture(scope="session")
def bool_sr():
    return boolean_semiring()


@pytest.fixture(scope="session")
def z2():
    return zmod(2)


@pytest.fixture(scope="session")
def z4():
    return zmod(4)


@pytest.fixture(scope="session")
def z2x():
    return poly_quotient(zmod(2), [0, 0, 1])


@pytest.fixture(scope="session")
def z3x():
    return poly_quotient(zmod(3), [-1, 0, 1])


@pytest.fixture(scope="session")
def t2b():
    return triangular_semiring(boolean_semiring(), 2)


@pytest.fixture(scope="session")
def m2z2():
    return matrix_semiring(zmod(2), 2)
