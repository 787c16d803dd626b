import random

import pytest

from natprod import Matrix, Q


def row(values, domain=Q):
    return Matrix.from_rows([list(values)], domain)


def col(values, domain=Q):
    return Matrix.from_rows([[v] for v in values], domain)


def sq(rows, domain=Q):
    return Matrix.from_rows(rows, domain)


@pytest.fixture
def rng():
    return random.Random(0)
