import pytest

from cmtilt.fields import FieldSpec
from cmtilt.quotient import QuotientRing
from cmtilt.ring import GradedRing, WeightedPoly


@pytest.fixture(scope="session")
def F101():
    return FieldSpec.prime(101)


@pytest.fixture(scope="session")
def F7():
    return FieldSpec.prime(7)


def make_ring(field, text, weights):
    return GradedRing(field, WeightedPoly.parse(field, text, weights))


@pytest.fixture(scope="session")
def quotient_cache(F101):
    """Shared quotient-ring data for the catalog polynomials."""
    cache = {}

    def get(text, weights, field=None):
        key = (text, weights, field.describe() if field else "fp:101")
        if key not in cache:
            f = field or F101
            cache[key] = QuotientRing(make_ring(f, text, weights))
        return cache[key]

    return get
