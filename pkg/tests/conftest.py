import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from codimlab.algebra import build_paper_algebra, build_sl2  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def L():
    return build_paper_algebra()


@pytest.fixture(scope="session")
def sl2():
    return build_sl2()
