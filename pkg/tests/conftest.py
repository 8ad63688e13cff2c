import pytest

from og4 import families
from og4.elements import make_a5, make_psl2


@pytest.fixture(scope="session")
def A5():
    return make_a5()


@pytest.fixture(scope="session")
def PSL27():
    return make_psl2(7)


@pytest.fixture(scope="session")
def aff_un_3_5():
    return families.construct_aff_unoriented(3, 5)


@pytest.fixture(scope="session")
def aff_or_5_3():
    return families.construct_aff_oriented(5, 3)


@pytest.fixture(scope="session")
def nonab_un_3(A5):
    return families.construct_nonabelian_unoriented(3, A5)


@pytest.fixture(scope="session")
def nonab_or_24(A5):
    return families.construct_nonabelian_oriented_24(A5)
