"""Random bijective S-box generation and equivalence-preserving derivations."""
from __future__ import annotations

import secrets

import numpy as np

from .sbox import SBox, SBoxError

# Resource bound for random generation; tables above this get unwieldy.
MAX_GENERATION_BITS = 16


class RandomSource:
    """Deterministic random stream backed by NumPy's PCG64 generator.

    Identical seeds produce identical streams on every platform; seed 0 is
    valid.  One source drives both table shuffling and search move selection.
    """

    def __init__(self, seed: int):
        if not 0 <= int(seed) < 1 << 64:
            raise SBoxError("seed must be a 64-bit unsigned integer")
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    @classmethod
    def from_entropy(cls) -> "RandomSource":
        return cls(secrets.randbits(64))

    def permutation(self, size: int) -> np.ndarray:
        return self._gen.permutation(size)

    def index_pair(self, size: int) -> tuple[int, int]:
        """Uniformly random ordered pair of distinct indices below size."""
        i = int(self._gen.integers(size))
        j = int(self._gen.integers(size - 1))
        if j >= i:
            j += 1
        return i, j


def random_bijective(n: int, rng: RandomSource) -> SBox:
    """Uniformly random permutation of {0, ..., 2^n - 1} via unbiased shuffle."""
    if not 1 <= n <= MAX_GENERATION_BITS:
        raise SBoxError(f"n must be in [1, {MAX_GENERATION_BITS}], got {n}")
    table = rng.permutation(1 << n)
    return SBox(n=n, m=n, table=tuple(int(v) for v in table))


def swap(s: SBox, i: int, j: int) -> SBox:
    """New S-box with table[i] and table[j] exchanged; the input is unchanged."""
    if not (0 <= i < s.size and 0 <= j < s.size):
        raise SBoxError(f"swap indices must be in [0, {s.size - 1}]")
    table = list(s.table)
    table[i], table[j] = table[j], table[i]
    return SBox(n=s.n, m=s.m, table=tuple(table))


def xor_translate(s: SBox, c: int) -> SBox:
    """Input translation F'(x) = F(x ^ c); preserves NL and DU exactly."""
    if not 0 <= c < s.size:
        raise SBoxError(f"translation mask must be in [0, {s.size - 1}]")
    return SBox(n=s.n, m=s.m, table=tuple(s.table[x ^ c] for x in range(s.size)))


def rotate_table(s: SBox, k: int) -> SBox:
    """Cyclic shift F'(x) = F((x + k) mod 2^n).

    Bijectivity is preserved; nonlinearity is not guaranteed analytically
    (modular addition is not GF(2)-affine) and is checked empirically where
    it matters.
    """
    if not 0 <= k < s.size:
        raise SBoxError(f"shift must be in [0, {s.size - 1}]")
    return SBox(
        n=s.n, m=s.m, table=tuple(s.table[(x + k) % s.size] for x in range(s.size))
    )
