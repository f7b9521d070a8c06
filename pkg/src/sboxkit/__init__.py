"""sboxkit: generation and evaluation toolkit for bijective S-boxes."""

from .analysis import (
    CrossCorrelationTable,
    PropertyReport,
    ccv,
    component_function,
    cross_correlation,
    difference_distribution,
    differential_uniformity,
    evaluate_all,
    hw_signature,
    mto,
    nonlinearity,
    nonlinearity_bf,
    rto,
    walsh_spectrum,
    wcf,
)
from .dataset import ClassicalEntry, UnknownClassicalError, get_classical, list_classical
from .generate import RandomSource, random_bijective, rotate_table, swap, xor_translate
from .sbox import (
    BooleanFunction,
    SBox,
    SBoxError,
    SBoxFormatError,
    WalshSpectrum,
    format_sbox_text,
    is_bijective,
    parse_sbox_text,
)
from .search import (
    DOCUMENTED_SUCCESS_SEED,
    SearchConfig,
    SearchState,
    local_search,
    progress,
)

__version__ = "0.1.0"

__all__ = [
    "BooleanFunction",
    "ClassicalEntry",
    "CrossCorrelationTable",
    "DOCUMENTED_SUCCESS_SEED",
    "PropertyReport",
    "RandomSource",
    "SBox",
    "SBoxError",
    "SBoxFormatError",
    "SearchConfig",
    "SearchState",
    "UnknownClassicalError",
    "WalshSpectrum",
    "ccv",
    "component_function",
    "cross_correlation",
    "difference_distribution",
    "differential_uniformity",
    "evaluate_all",
    "format_sbox_text",
    "get_classical",
    "hw_signature",
    "is_bijective",
    "list_classical",
    "local_search",
    "mto",
    "nonlinearity",
    "nonlinearity_bf",
    "parse_sbox_text",
    "progress",
    "random_bijective",
    "rotate_table",
    "rto",
    "swap",
    "walsh_spectrum",
    "wcf",
    "xor_translate",
]
