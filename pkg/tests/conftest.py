import os
import random

import pytest

from sboxkit import SBox, get_classical


def pytest_collection_modifyitems(config, items):
    if os.environ.get("SBOXKIT_RUN_SLOW"):
        return
    skip = pytest.mark.skip(reason="slow smoke test; set SBOXKIT_RUN_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def random_permutation(n: int, rnd: random.Random) -> SBox:
    table = list(range(1 << n))
    rnd.shuffle(table)
    return SBox(n=n, m=n, table=tuple(table))


def random_truth_table(n: int, rnd: random.Random) -> list[int]:
    return [rnd.randint(0, 1) for _ in range(1 << n)]


def rel_close(a: float, b: float, rel: float = 1e-9) -> bool:
    return abs(a - b) <= rel * max(abs(a), abs(b), 1.0)


@pytest.fixture(scope="session")
def aes() -> SBox:
    return get_classical("AES").sbox
