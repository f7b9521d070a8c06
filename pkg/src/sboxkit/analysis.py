"""S-box property computations: spectra, nonlinearity, DDT, side-channel metrics.

All functions are pure; integer sums are kept exact and any division happens
last, so double-precision results are as tight as the formulas allow.
Naive reference implementations of the same quantities live in
:mod:`sboxkit.reference` and back the test oracles.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .sbox import (
    BooleanFunction,
    SBox,
    SBoxError,
    WalshSpectrum,
    is_bijective,
    require_bijective,
)

# Largest component batch held in memory at once while sweeping the
# 2^m - 1 nonzero masks (bounds peak memory for wide S-boxes).
_SPECTRA_BLOCK = 2048


def _fwht_rows(values: np.ndarray) -> np.ndarray:
    """Walsh-Hadamard butterfly along the last axis, exact in int64."""
    a = np.array(values, dtype=np.int64, copy=True)
    size = a.shape[-1]
    flat = a.reshape(-1, size)
    h = 1
    while h < size:
        b = flat.reshape(flat.shape[0], size // (2 * h), 2, h)
        top = b[:, :, 0, :].copy()
        b[:, :, 0, :] = top + b[:, :, 1, :]
        b[:, :, 1, :] = top - b[:, :, 1, :]
        h *= 2
    return a


def component_function(s: SBox, b: int) -> BooleanFunction:
    """Truth table of the component x -> parity(b & F(x)) for a nonzero mask b."""
    if not 1 <= b < (1 << s.m):
        raise SBoxError(f"component mask must be in [1, 2^{s.m} - 1], got {b}")
    table = np.asarray(s.table, dtype=np.int64)
    bits = np.bitwise_count(table & b).astype(np.int64) & 1
    return BooleanFunction(n=s.n, truth_table=tuple(int(v) for v in bits))


def walsh_spectrum(f: BooleanFunction) -> WalshSpectrum:
    """Fast transform of the polar form; O(n * 2^n), bit-exact vs the naive sum."""
    polar = 1 - 2 * np.asarray(f.truth_table, dtype=np.int64)
    values = _fwht_rows(polar)
    return WalshSpectrum(n=f.n, values=tuple(int(v) for v in values))


def nonlinearity_bf(f: BooleanFunction) -> int:
    """(2^n - max_w |WH_f(w)|) / 2, the distance to the nearest affine function."""
    spectrum = walsh_spectrum(f)
    return ((1 << f.n) - spectrum.max_abs()) // 2


def _iter_component_spectra(s: SBox, block: int = _SPECTRA_BLOCK):
    """Yield Walsh spectra of the nonzero components in blocks of rows."""
    table = np.asarray(s.table, dtype=np.int64)
    for start in range(1, 1 << s.m, block):
        masks = np.arange(start, min(start + block, 1 << s.m), dtype=np.int64)
        parity = np.bitwise_count(masks[:, None] & table[None, :]).astype(np.int64) & 1
        yield _fwht_rows(1 - 2 * parity)


def nonlinearity(s: SBox) -> int:
    """Minimum nonlinearity over all 2^m - 1 nonzero component functions."""
    best = None
    for spectra in _iter_component_spectra(s):
        block_min = int(np.min((1 << s.n) - np.max(np.abs(spectra), axis=1)) // 2)
        best = block_min if best is None else min(best, block_min)
    assert best is not None
    return best


def difference_distribution(s: SBox) -> np.ndarray:
    """Full 2^n x 2^n table of counts delta(a, b) = #{x : F(x^a) ^ F(x) = b}."""
    if s.n != s.m:
        raise SBoxError("difference distribution requires n = m")
    size = s.size
    table = np.asarray(s.table, dtype=np.int64)
    xs = np.arange(size)
    ddt = np.zeros((size, size), dtype=np.int64)
    for a in range(size):
        ddt[a] = np.bincount(table ^ table[xs ^ a], minlength=size)
    return ddt


def differential_uniformity(s: SBox) -> int:
    """Maximum DDT entry over nonzero input differences; defined for bijections."""
    require_bijective(s)
    ddt = difference_distribution(s)
    return int(ddt[1:].max())


def hw_signature(s: SBox) -> tuple[int, ...]:
    """Hamming weights of the outputs in input order.

    Two S-boxes belong to the same Hamming-weight class exactly when their
    signatures are equal elementwise.
    """
    table = np.asarray(s.table, dtype=np.int64)
    return tuple(int(v) for v in np.bitwise_count(table))


def ccv(s: SBox) -> float:
    """Confusion coefficient variance under the Hamming-weight leakage model.

    For keys k_i != k_j the coefficient kappa(k_i, k_j) is the mean over all
    inputs of (HW(F(in ^ k_i)) - HW(F(in ^ k_j)))^2, and the result is the
    population variance of kappa over all unordered key pairs.  kappa depends
    only on d = k_i ^ k_j and every nonzero d covers equally many pairs, so
    the variance is taken over {kappa(d) : d != 0}; the equivalence with the
    pairwise definition is enforced by an oracle test.
    """
    size = s.size
    weights = np.bitwise_count(np.asarray(s.table)).astype(np.int64)
    xs = np.arange(size)
    kappa_nums = []
    for d in range(1, size):
        diff = weights[xs ^ d] - weights
        kappa_nums.append(int(diff @ diff))
    count = size - 1
    total = sum(kappa_nums)
    total_sq = sum(v * v for v in kappa_nums)
    numerator = count * total_sq - total * total
    denominator = count * count * size * size
    return numerator / denominator


@dataclass(frozen=True)
class CrossCorrelationTable:
    """Cross-correlations C[i][j][alpha] of the coordinate functions.

    Coordinate i is output bit i (least-significant first), and
    C[i][j][alpha] = sum_x (-1)^(f_i(x) ^ f_j(x ^ alpha)).
    """

    m: int
    n: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        expected = (self.m, self.m, 1 << self.n)
        if self.values.shape != expected:
            raise SBoxError(f"cross-correlation table must have shape {expected}")
        self.values.setflags(write=False)


def cross_correlation(s: SBox) -> CrossCorrelationTable:
    """Full coordinate cross-correlation table via the spectral product identity.

    C[i][j][:] is the inverse transform of WH_i * WH_j, which equals the
    direct shifted-agreement sums exactly (checked against the naive path).
    """
    table = np.asarray(s.table, dtype=np.int64)
    bits = (table[None, :] >> np.arange(s.m)[:, None]) & 1
    spectra = _fwht_rows(1 - 2 * bits)
    products = spectra[:, None, :] * spectra[None, :, :]
    values = _fwht_rows(products) // s.size
    return CrossCorrelationTable(m=s.m, n=s.n, values=values)


def _require_square(s: SBox, what: str) -> None:
    if s.n != s.m or s.n < 2:
        raise SBoxError(f"{what} requires a square S-box with n = m >= 2")


def _beta_signs(beta: int, m: int) -> np.ndarray:
    return 1 - 2 * ((beta >> np.arange(m)) & 1)


def mto_profile(s: SBox, table: CrossCorrelationTable | None = None) -> np.ndarray:
    """Inner value of the modified transparency order for every mask beta."""
    _require_square(s, "MTO")
    c = (table or cross_correlation(s)).values
    denominator = (1 << (2 * s.n)) - (1 << s.n)
    out = np.empty(1 << s.m)
    for beta in range(1 << s.m):
        signs = _beta_signs(beta, s.m)
        per_coord = np.tensordot(signs, c, axes=(0, 0))
        inner = int(np.abs(per_coord[:, 1:]).sum())
        out[beta] = s.m - inner / denominator
    return out


def rto_profile(s: SBox, table: CrossCorrelationTable | None = None) -> np.ndarray:
    """Inner value of the revised transparency order for every mask beta.

    Differs from the modified order only in taking the absolute value outside
    the coordinate sum.
    """
    _require_square(s, "RTO")
    c = (table or cross_correlation(s)).values
    denominator = (1 << (2 * s.n)) - (1 << s.n)
    out = np.empty(1 << s.m)
    for beta in range(1 << s.m):
        signs = _beta_signs(beta, s.m)
        summed = np.einsum("i,ijk,j->k", signs, c, signs)
        inner = int(np.abs(summed[1:]).sum())
        out[beta] = s.m - inner / denominator
    return out


def mto(s: SBox, table: CrossCorrelationTable | None = None) -> float:
    """Modified transparency order: the maximum of the per-beta inner values."""
    return float(np.max(mto_profile(s, table)))


def rto(s: SBox, table: CrossCorrelationTable | None = None) -> float:
    """Revised transparency order: the maximum of the per-beta inner values."""
    return float(np.max(rto_profile(s, table)))


def wcf(s: SBox, x_param: int = 0, r_param: int = 3) -> float:
    """Spectrum-flattening cost: sum over nonzero b and all w of ||WH| - x|^r.

    Lower values mean flatter component spectra and correlate with higher
    nonlinearity.  With r_param = 0 every term contributes 1 (0^0 == 1 here).
    """
    if x_param < 0:
        raise SBoxError("x_param must be nonnegative")
    if r_param < 0:
        raise SBoxError("r_param must be nonnegative")
    total = 0
    for spectra in _iter_component_spectra(s):
        if r_param == 0:
            total += spectra.size
            continue
        deviations = np.abs(np.abs(spectra) - x_param)
        values, counts = np.unique(deviations, return_counts=True)
        total += sum(int(v) ** r_param * int(c) for v, c in zip(values, counts))
    return float(total)


@dataclass(frozen=True)
class PropertyReport:
    """All metrics of one S-box; fields are None when not applicable."""

    bijective: bool
    hw_signature: tuple[int, ...]
    nl: int | None = None
    du: int | None = None
    ccv: float | None = None
    mto: float | None = None
    rto: float | None = None
    wcf: float | None = None
    errors: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "bijective": self.bijective,
            "hw_signature": list(self.hw_signature),
            "nl": self.nl,
            "du": self.du,
            "ccv": self.ccv,
            "mto": self.mto,
            "rto": self.rto,
            "wcf": self.wcf,
            "errors": dict(self.errors),
        }


def evaluate_all(s: SBox) -> PropertyReport:
    """Compute every metric, marking per-field errors instead of failing wholesale.

    The cross-correlation table is computed once and shared by the two
    transparency orders, the slowest metrics in the report.
    """
    errors: dict[str, str] = {}
    values: dict[str, object] = {}

    def attempt(name, fn):
        try:
            values[name] = fn()
        except SBoxError as exc:
            errors[name] = str(exc)

    attempt("nl", lambda: nonlinearity(s))
    attempt("du", lambda: differential_uniformity(s))
    attempt("ccv", lambda: ccv(s))
    attempt("wcf", lambda: wcf(s))
    try:
        shared = cross_correlation(s)
        attempt("mto", lambda: mto(s, shared))
        attempt("rto", lambda: rto(s, shared))
    except SBoxError as exc:
        errors["mto"] = errors["rto"] = str(exc)
    return PropertyReport(
        bijective=is_bijective(s),
        hw_signature=hw_signature(s),
        nl=values.get("nl"),
        du=values.get("du"),
        ccv=values.get("ccv"),
        mto=values.get("mto"),
        rto=values.get("rto"),
        wcf=values.get("wcf"),
        errors=errors,
    )
