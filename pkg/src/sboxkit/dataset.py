"""Bundled classical S-boxes with reference property values.

Tables are transcribed from the cited standards and shipped as plain-text
data files; the index records a SHA-256 checksum and source note per table,
both verified at load time.  The corpus is deliberately small and serves as
the end-to-end correctness oracle for the metric code.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .sbox import SBox, is_bijective, parse_sbox_text


class UnknownClassicalError(LookupError):
    """Requested classical S-box is not in the bundled corpus."""


@dataclass(frozen=True)
class ClassicalEntry:
    name: str
    n: int
    m: int
    sbox: SBox
    ref_nl: int
    ref_du: int
    citation: str


def _data_text(filename: str) -> str:
    return (resources.files("sboxkit") / "data" / filename).read_text()


@lru_cache(maxsize=1)
def list_classical() -> tuple[ClassicalEntry, ...]:
    """The four bundled entries: AES, KASUMI S7, PRESENT, PRINCE."""
    index = json.loads(_data_text("index.json"))
    entries = []
    for meta in index:
        text = _data_text(meta["file"])
        digest = hashlib.sha256(text.encode()).hexdigest()
        if digest != meta["sha256"]:
            raise RuntimeError(
                f"bundled table {meta['file']} fails its checksum; "
                "the data files were modified"
            )
        sbox = parse_sbox_text(text, n=meta["n"], m=meta["m"])
        if not is_bijective(sbox):
            raise RuntimeError(f"bundled table {meta['name']} is not a permutation")
        entries.append(
            ClassicalEntry(
                name=meta["name"],
                n=meta["n"],
                m=meta["m"],
                sbox=sbox,
                ref_nl=meta["ref_nl"],
                ref_du=meta["ref_du"],
                citation=meta["citation"],
            )
        )
    return tuple(entries)


def get_classical(name: str) -> ClassicalEntry:
    """Entry matched case-insensitively by name; raises UnknownClassicalError."""
    wanted = name.strip().casefold()
    for entry in list_classical():
        if entry.name.casefold() == wanted:
            return entry
    known = ", ".join(e.name for e in list_classical())
    raise UnknownClassicalError(f"no classical S-box named {name!r}; known: {known}")
