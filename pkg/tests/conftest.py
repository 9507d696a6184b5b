import pytest

from sandpiles import cone, path
from sandpiles.families import verification_family


def cone_of_path(k):
    """Cone over a k-vertex path; the k = 1 case degenerates to one edge."""
    return path(2) if k == 1 else cone(path(k))


@pytest.fixture(scope="session")
def family():
    return verification_family(6)


@pytest.fixture(scope="session")
def small_family(family):
    return [g for g in family if len(g.non_sink) <= 3]
