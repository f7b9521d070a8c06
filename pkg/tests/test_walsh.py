"""Walsh transform, component functions, and nonlinearity against naive oracles."""
import random

import pytest

from sboxkit import (
    BooleanFunction,
    SBox,
    SBoxError,
    component_function,
    nonlinearity,
    nonlinearity_bf,
    walsh_spectrum,
)
from sboxkit.reference import naive_nonlinearity, naive_walsh_spectrum

from conftest import random_permutation, random_truth_table


def all_truth_tables(n):
    for bits in range(1 << (1 << n)):
        yield [(bits >> i) & 1 for i in range(1 << n)]


def test_fast_equals_naive_exhaustive_n2():
    for tt in all_truth_tables(2):
        f = BooleanFunction(n=2, truth_table=tt)
        assert list(walsh_spectrum(f).values) == naive_walsh_spectrum(f)


def test_fast_equals_naive_exhaustive_n3():
    for tt in all_truth_tables(3):
        f = BooleanFunction(n=3, truth_table=tt)
        assert list(walsh_spectrum(f).values) == naive_walsh_spectrum(f)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_fast_equals_naive_random(n):
    rnd = random.Random(100 + n)
    for _ in range(40):
        f = BooleanFunction(n=n, truth_table=random_truth_table(n, rnd))
        fast = list(walsh_spectrum(f).values)
        assert fast == naive_walsh_spectrum(f)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_parseval_exact(n):
    rnd = random.Random(n)
    for _ in range(50):
        f = BooleanFunction(n=n, truth_table=random_truth_table(n, rnd))
        values = walsh_spectrum(f).values
        assert sum(v * v for v in values) == 1 << (2 * n)


def test_spectrum_parity():
    rnd = random.Random(9)
    for n in (1, 3, 5):
        f = BooleanFunction(n=n, truth_table=random_truth_table(n, rnd))
        assert all(v % 2 == 0 for v in walsh_spectrum(f).values)


def test_constant_zero_spectrum():
    f = BooleanFunction(n=3, truth_table=[0] * 8)
    assert list(walsh_spectrum(f).values) == [8, 0, 0, 0, 0, 0, 0, 0]


def test_linear_function_spectrum():
    f = BooleanFunction(n=2, truth_table=[x & 1 for x in range(4)])
    values = walsh_spectrum(f).values
    assert abs(values[1]) == 4
    assert [v for w, v in enumerate(values) if w != 1] == [0, 0, 0]


def test_component_function_identity_low_bit():
    ident = SBox.identity(2)
    assert component_function(ident, 1).truth_table == (0, 1, 0, 1)
    assert component_function(ident, 2).truth_table == (0, 0, 1, 1)


def test_component_rejects_zero_mask():
    with pytest.raises(SBoxError):
        component_function(SBox.identity(2), 0)


def test_aes_component_balanced(aes):
    tt = component_function(aes, 1).truth_table
    assert sum(tt) == 128


def test_bijective_components_balanced():
    rnd = random.Random(77)
    s = random_permutation(5, rnd)
    for b in range(1, 32):
        spectrum = walsh_spectrum(component_function(s, b))
        assert spectrum.values[0] == 0


def test_nonlinearity_bf_against_naive():
    rnd = random.Random(4)
    for _ in range(30):
        f = BooleanFunction(n=4, truth_table=random_truth_table(4, rnd))
        fast = nonlinearity_bf(f)
        naive = ((1 << 4) - max(abs(v) for v in naive_walsh_spectrum(f))) // 2
        assert fast == naive


def test_nonlinearity_constant_and_linear():
    assert nonlinearity_bf(BooleanFunction(n=3, truth_table=[0] * 8)) == 0
    linear = BooleanFunction(n=4, truth_table=[bin(x & 0b1010).count("1") & 1 for x in range(16)])
    assert nonlinearity_bf(linear) == 0


def test_sbox_nonlinearity_against_naive():
    rnd = random.Random(5)
    for _ in range(10):
        s = random_permutation(4, rnd)
        assert nonlinearity(s) == naive_nonlinearity(s)


def test_identity_nonlinearity_is_zero():
    assert nonlinearity(SBox.identity(8)) == 0
