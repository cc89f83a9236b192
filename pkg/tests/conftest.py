import numpy as np
import pytest

from drsd.bch import build_code
from drsd.product import ProductCodeSpec


@pytest.fixture(scope="session")
def bch15():
    return build_code(4, 2)


@pytest.fixture(scope="session")
def even15():
    return build_code(4, 2, even_weight=True)


@pytest.fixture(scope="session")
def even127():
    return build_code(7, 2, even_weight=True)


@pytest.fixture(scope="session")
def pc15(bch15):
    return ProductCodeSpec(bch15)


@pytest.fixture(scope="session")
def pc31():
    return ProductCodeSpec(build_code(5, 2, even_weight=True))


@pytest.fixture(scope="session")
def pc127(even127):
    return ProductCodeSpec(even127)


@pytest.fixture
def rng():
    return np.random.default_rng(20221019)


def all_codewords(spec):
    """Every codeword, by encoding all 2^k messages."""
    from drsd.bch import encode_many

    k = spec.k
    msgs = (np.arange(1 << k)[:, None] >> np.arange(k)) & 1
    return encode_many(spec, msgs)
