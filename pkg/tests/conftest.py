import pytest

from stasheff.polytope import PolytopeSpec


def tuples(*labels):
    """Parse compact labels such as "135" into vertex tuples."""
    return tuple(tuple(int(c) for c in label) for label in labels)


@pytest.fixture
def pentagon():
    return PolytopeSpec(5, 2)
