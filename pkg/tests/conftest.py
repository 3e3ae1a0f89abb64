import pytest

from hopfdouble.config import hopf_config
from hopfdouble.lib import bosonization, catalog, repmod, ydcat


@pytest.fixture(scope='session')
def C():
    return catalog.build_C('plus')


@pytest.fixture(scope='session')
def algebra(C):
    return repmod.DoubleAlgebra.build('plus', C)


@pytest.fixture(scope='session')
def tables():
    return hopf_config.load_printed_tables()


@pytest.fixture(scope='session')
def yds(algebra):
    return ydcat.yd_catalog(algebra)


@pytest.fixture(scope='session')
def suite(algebra, tables):
    return bosonization.BosonizationSuite(algebra, tables)


@pytest.fixture(scope='session', params=['plus', 'minus'])
def signed_algebra(request):
    if request.param == 'plus':
        return request.getfixturevalue('algebra')
    return repmod.DoubleAlgebra.build('minus')
