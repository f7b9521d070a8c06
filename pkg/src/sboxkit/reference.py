"""Naive reference implementations of every metric, in plain Python.

These are deliberate literal transcriptions of the defining sums, with no
transform tricks, no vectorization and no shared precomputation with
:mod:`sboxkit.analysis`.  They anchor the oracle tests: the fast paths must
reproduce them bit-exactly (integers) or to tight relative tolerance (reals).
"""
from __future__ import annotations

from functools import lru_cache

from .sbox import BooleanFunction, SBox, SBoxError


def _parity(v: int) -> int:
    return bin(v).count("1") & 1


def _popcount(v: int) -> int:
    return bin(v).count("1")


@lru_cache(maxsize=1 << 16)
def _linear_truth_table(w: int, size: int) -> tuple[int, ...]:
    return tuple(_parity(w & x) for x in range(size))


def naive_walsh_spectrum(f: BooleanFunction) -> list[int]:
    """Double sum over (w, x) of (-1)^f(x) * (-1)^(w.x); O(2^(2n))."""
    size = 1 << f.n
    tt = f.truth_table
    return [
        sum(1 - 2 * (fx ^ lx) for fx, lx in zip(tt, _linear_truth_table(w, size)))
        for w in range(size)
    ]


def naive_nonlinearity_bf(f: BooleanFunction) -> int:
    spectrum = naive_walsh_spectrum(f)
    return ((1 << f.n) - max(abs(v) for v in spectrum)) // 2


def naive_component_truth_table(s: SBox, b: int) -> list[int]:
    return [_parity(b & v) for v in s.table]


def naive_nonlinearity(s: SBox) -> int:
    return min(
        naive_nonlinearity_bf(
            BooleanFunction(n=s.n, truth_table=naive_component_truth_table(s, b))
        )
        for b in range(1, 1 << s.m)
    )


def naive_difference_distribution(s: SBox) -> list[list[int]]:
    size = 1 << s.n
    ddt = [[0] * size for _ in range(size)]
    for a in range(size):
        for x in range(size):
            ddt[a][s.table[x ^ a] ^ s.table[x]] += 1
    return ddt


def naive_differential_uniformity(s: SBox) -> int:
    """Brute force over (a, b, x) with a != 0."""
    size = 1 << s.n
    best = 0
    for a in range(1, size):
        for b in range(size):
            count = sum(1 for x in range(size) if s.table[x ^ a] ^ s.table[x] == b)
            best = max(best, count)
    return best


def ccv_pairwise(s: SBox) -> float:
    """Population variance of kappa over all unordered key pairs k_i != k_j.

    O(2^(3n)); integer sums throughout, one float division at the end.
    """
    size = 1 << s.n
    weights = [_popcount(v) for v in s.table]
    kappa_nums = []
    for ki in range(size):
        for kj in range(ki + 1, size):
            num = sum(
                (weights[x ^ ki] - weights[x ^ kj]) ** 2 for x in range(size)
            )
            kappa_nums.append(num)
    count = len(kappa_nums)
    total = sum(kappa_nums)
    total_sq = sum(v * v for v in kappa_nums)
    numerator = count * total_sq - total * total
    denominator = count * count * size * size
    return numerator / denominator


def naive_cross_correlation(s: SBox) -> list[list[list[int]]]:
    """Direct triple loop over (i, j, alpha), each with its own sum over x."""
    size = 1 << s.n
    coords = [[(v >> i) & 1 for v in s.table] for i in range(s.m)]
    table = [[[0] * size for _ in range(s.m)] for _ in range(s.m)]
    for i in range(s.m):
        for j in range(s.m):
            for alpha in range(size):
                table[i][j][alpha] = sum(
                    (-1) ** (coords[i][x] ^ coords[j][x ^ alpha])
                    for x in range(size)
                )
    return table


def _square_check(s: SBox, what: str) -> None:
    if s.n != s.m or s.n < 2:
        raise SBoxError(f"{what} requires a square S-box with n = m >= 2")


def mto_literal(s: SBox) -> float:
    """Four-level loop over (beta, alpha, j, i) on the naive correlation table."""
    _square_check(s, "MTO")
    size = 1 << s.n
    m = s.m
    c = naive_cross_correlation(s)
    denominator = (1 << (2 * s.n)) - (1 << s.n)
    best = None
    for beta in range(1 << m):
        bits = [(beta >> i) & 1 for i in range(m)]
        outer = 0
        for alpha in range(1, size):
            for j in range(m):
                inner = 0
                for i in range(m):
                    inner += (-1) ** (bits[i] ^ bits[j]) * c[i][j][alpha]
                outer += abs(inner)
        value = m - outer / denominator
        best = value if best is None else max(best, value)
    return best


def rto_literal(s: SBox) -> float:
    """As mto_literal but with the absolute value outside the coordinate sums."""
    _square_check(s, "RTO")
    size = 1 << s.n
    m = s.m
    c = naive_cross_correlation(s)
    denominator = (1 << (2 * s.n)) - (1 << s.n)
    best = None
    for beta in range(1 << m):
        bits = [(beta >> i) & 1 for i in range(m)]
        outer = 0
        for alpha in range(1, size):
            double = 0
            for j in range(m):
                for i in range(m):
                    double += (-1) ** (bits[i] ^ bits[j]) * c[i][j][alpha]
            outer += abs(double)
        value = m - outer / denominator
        best = value if best is None else max(best, value)
    return best


def naive_wcf(s: SBox, x_param: int = 0, r_param: int = 3) -> float:
    """Direct sum over every nonzero mask b and every w of ||WH| - x|^r."""
    total = 0
    for b in range(1, 1 << s.m):
        tt = naive_component_truth_table(s, b)
        spectrum = naive_walsh_spectrum(BooleanFunction(n=s.n, truth_table=tt))
        for value in spectrum:
            total += abs(abs(value) - x_param) ** r_param
    return float(total)
