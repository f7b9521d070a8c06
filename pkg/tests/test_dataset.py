"""Bundled classical corpus: integrity and reference values."""
import pytest

from sboxkit import (
    UnknownClassicalError,
    differential_uniformity,
    get_classical,
    is_bijective,
    list_classical,
    nonlinearity,
)


def test_exactly_four_entries():
    names = [e.name for e in list_classical()]
    assert names == ["AES", "KASUMI", "PRESENT", "PRINCE"]


def test_expected_sizes():
    sizes = {e.name: (e.n, e.m) for e in list_classical()}
    assert sizes == {
        "AES": (8, 8),
        "KASUMI": (7, 7),
        "PRESENT": (4, 4),
        "PRINCE": (4, 4),
    }


def test_all_entries_are_permutations():
    for entry in list_classical():
        assert is_bijective(entry.sbox), entry.name


def test_recomputed_values_match_references():
    for entry in list_classical():
        assert nonlinearity(entry.sbox) == entry.ref_nl, entry.name
        assert differential_uniformity(entry.sbox) == entry.ref_du, entry.name


def test_reference_values():
    refs = {e.name: (e.ref_nl, e.ref_du) for e in list_classical()}
    assert refs == {
        "AES": (112, 4),
        "KASUMI": (56, 2),
        "PRESENT": (4, 4),
        "PRINCE": (4, 4),
    }


def test_get_classical_case_insensitive():
    assert get_classical("aes").name == "AES"
    assert get_classical("Kasumi").name == "KASUMI"


def test_get_classical_unknown():
    with pytest.raises(UnknownClassicalError):
        get_classical("DES")


def test_citations_present():
    for entry in list_classical():
        assert entry.citation
