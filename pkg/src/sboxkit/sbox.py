"""Core S-box value types and the plain-text lookup-table format."""
from __future__ import annotations

from dataclasses import dataclass, field


class SBoxError(ValueError):
    """An S-box value or payload violates a structural invariant."""


class SBoxFormatError(SBoxError):
    """Text that cannot be parsed into a lookup table."""


@dataclass(frozen=True)
class SBox:
    """A lookup table mapping n-bit inputs to m-bit outputs.

    The table holds exactly 2**n entries, each in [0, 2**m - 1].
    Instances are immutable and safe to share across threads.
    """

    n: int
    m: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise SBoxError(f"input width n must be positive, got {self.n}")
        if self.m < 1:
            raise SBoxError(f"output width m must be positive, got {self.m}")
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        size = 1 << self.n
        if len(self.table) != size:
            raise SBoxError(
                f"table must have 2^{self.n} = {size} entries, got {len(self.table)}"
            )
        limit = 1 << self.m
        for x, v in enumerate(self.table):
            if not 0 <= v < limit:
                raise SBoxError(
                    f"entry table[{x}] = {v} outside [0, 2^{self.m} - 1]"
                )

    @property
    def size(self) -> int:
        return 1 << self.n

    def __getitem__(self, x: int) -> int:
        return self.table[x]

    @classmethod
    def identity(cls, n: int) -> "SBox":
        return cls(n=n, m=n, table=tuple(range(1 << n)))


@dataclass(frozen=True)
class BooleanFunction:
    """Truth table of a single-output boolean function on n bits."""

    n: int
    truth_table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "truth_table", tuple(int(b) for b in self.truth_table)
        )
        size = 1 << self.n
        if len(self.truth_table) != size:
            raise SBoxError(
                f"truth table must have 2^{self.n} = {size} entries, "
                f"got {len(self.truth_table)}"
            )
        if any(b not in (0, 1) for b in self.truth_table):
            raise SBoxError("truth table entries must be 0 or 1")


@dataclass(frozen=True)
class WalshSpectrum:
    """Correlations of a boolean function's polar form with all linear functions."""

    n: int
    values: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != 1 << self.n:
            raise SBoxError("spectrum length must be 2^n")

    def max_abs(self) -> int:
        return max(abs(v) for v in self.values)


def is_bijective(s: SBox) -> bool:
    """True iff n = m and the table is a permutation of {0, ..., 2^n - 1}.

    Bijective tables hit every output exactly once, which is the balance
    check used throughout this toolkit.
    """
    if s.n != s.m:
        return False
    return len(set(s.table)) == s.size


def require_bijective(s: SBox) -> None:
    if not is_bijective(s):
        raise SBoxError("operation requires a bijective S-box (n = m, permutation)")


def _parse_token(tok: str, position: int) -> int:
    try:
        return int(tok, 16) if tok.lower().startswith(("0x", "-0x")) else int(tok, 10)
    except ValueError:
        raise SBoxFormatError(
            f"token {tok!r} at position {position} is not a decimal or 0x-hex integer"
        ) from None


def parse_sbox_text(text: str, n: int | None = None, m: int | None = None) -> SBox:
    """Parse the plain-text table format.

    Entries are whitespace- or comma-separated integers, decimal or
    0x-prefixed hex.  When ``n`` is omitted it is inferred from the entry
    count, which must then be a power of two.  When ``m`` is omitted it
    defaults to ``n``, widened if any entry needs more bits.
    """
    tokens = [t for t in text.replace(",", " ").split() if t]
    if not tokens:
        raise SBoxFormatError("no entries found")
    entries = [_parse_token(t, i) for i, t in enumerate(tokens)]
    count = len(entries)
    if n is None:
        if count & (count - 1) != 0:
            raise SBoxFormatError(
                f"entry count {count} is not a power of two; pass n explicitly"
            )
        n = count.bit_length() - 1
    elif count != 1 << n:
        raise SBoxFormatError(f"expected 2^{n} = {1 << n} entries, got {count}")
    if any(v < 0 for v in entries):
        raise SBoxFormatError("entries must be nonnegative")
    if m is None:
        m = max(n, max(entries).bit_length())
    return SBox(n=n, m=m, table=tuple(entries))


def format_sbox_text(s: SBox, per_line: int = 16) -> str:
    """Render a table in the plain-text format; round-trips through the parser."""
    lines = []
    for start in range(0, s.size, per_line):
        lines.append(" ".join(str(v) for v in s.table[start : start + per_line]))
    return "\n".join(lines) + "\n"
