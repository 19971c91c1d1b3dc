import pytest

from modone import (
    ExtremalSpec,
    SturmianSpec,
    Variant,
    extremal_word,
    fibonacci_spec,
    rational_value,
    real_sub,
    sqrt_value,
    sturmian_prefix,
)


@pytest.fixture(scope="session")
def fib_spec():
    return fibonacci_spec()


@pytest.fixture(scope="session")
def sqrt2m1_spec():
    """Second driver: theta = sqrt(2) - 1."""
    theta = real_sub(sqrt_value(2), rational_value(1))
    return SturmianSpec(theta=theta, rho=rational_value(0), variant=Variant.FLOOR)


@pytest.fixture(scope="session")
def fib_word_10k(fib_spec):
    return sturmian_prefix(fib_spec, 10_000)


@pytest.fixture(scope="session")
def extremal_k2(fib_spec):
    return ExtremalSpec(k=2, driver=fib_spec)


@pytest.fixture(scope="session")
def extremal_word_20k(extremal_k2):
    """20 200 letters: a 20 000 window plus 200 letters of lookahead."""
    return extremal_word(extremal_k2, 20_200)


@pytest.fixture(scope="session")
def extremal_word_10k(extremal_word_20k):
    return extremal_word_20k[:10_000]
