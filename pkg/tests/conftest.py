from typing import Iterator

import pytest

from pysrone.srone import CERTIFICATES


@pytest.fixture(scope="session", autouse=True)
def certificate_ledger() -> Iterator[None]:
    CERTIFICATES.reset()
    yield
    assert CERTIFICATES.rejected == 0, f"{CERTIFICATES.rejected} certificates failed verification"
