import random
from typing import Any, Tuple

from hypothesis import strategies as st

from pysrone.intmat import IntMatrix, random_unimodular


def _rows(n: int, bound: int) -> Any:
    return st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=n, max_size=n)


@st.composite
def int_matrices(draw: Any, min_size: int = 1, max_size: int = 4, bound: int = 9) -> IntMatrix:
    n = draw(st.integers(min_size, max_size))
    return IntMatrix.from_rows(draw(_rows(n, bound)))


@st.composite
def matrix_tuples(draw: Any, count: int, min_size: int = 1, max_size: int = 3, bound: int = 9) -> Tuple[IntMatrix, ...]:
    n = draw(st.integers(min_size, max_size))
    return tuple(IntMatrix.from_rows(draw(_rows(n, bound))) for _ in range(count))


@st.composite
def unimodular_matrices(draw: Any, n: int) -> IntMatrix:
    return random_unimodular(random.Random(draw(st.integers(0, 2**32))), n)


@st.composite
def singular_matrices(draw: Any, n: int = 3, bound: int = 5) -> IntMatrix:
    """U diag(d1, ..., d_{n-1}, 0) V with random unimodular U and V."""
    rng = random.Random(draw(st.integers(0, 2**32)))
    entries = [draw(st.integers(-bound, bound)) for _ in range(n - 1)] + [0]
    return random_unimodular(rng, n) @ IntMatrix.diag(*entries) @ random_unimodular(rng, n)
