import pytest
from hypothesis import HealthCheck, settings

from morsejones import diagram as dg

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def trefoil():
    return dg.trefoil()


@pytest.fixture
def unknot():
    return dg.unknot()
