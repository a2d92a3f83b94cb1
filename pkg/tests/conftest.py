import pytest

from thetacodes.quadfield import RingKind, make_level
from thetacodes.ringcodes import code_c32, code_c33


@pytest.fixture
def lv7():
    return make_level(7)


@pytest.fixture
def lv15():
    return make_level(15)


@pytest.fixture(scope="session")
def c32():
    return code_c32(RingKind.F2xF2)


@pytest.fixture(scope="session")
def c33():
    return code_c33(RingKind.F2xF2)
