"""Six-dot braille cells and their Unicode representation.

A cell is a bitmask over dot positions 1-6 (dot k present <=> bit k-1 set),
so values range over 0..63 and map one-to-one onto the Unicode braille
block U+2800..U+283F.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidDotError, NotBrailleError

BRAILLE_BASE = 0x2800
N_PATTERNS = 64


@dataclass(frozen=True, order=True)
class BrailleCell:
    """One braille pattern, stored as the dot bitmask (0-63)."""

    value: int

    def __post_init__(self):
        if not 0 <= self.value < N_PATTERNS:
            raise InvalidDotError(f"cell value {self.value} outside 0..63")

    @property
    def dots(self) -> frozenset[int]:
        return frozenset(k for k in range(1, 7) if self.value >> (k - 1) & 1)

    @property
    def char(self) -> str:
        return chr(BRAILLE_BASE + self.value)

    def __str__(self) -> str:
        return self.char


def encode_cell(dots) -> BrailleCell:
    """Build the cell with exactly the given dots raised.

    Raises InvalidDotError for any dot index outside 1..6.
    """
    value = 0
    for dot in dots:
        if not isinstance(dot, int) or not 1 <= dot <= 6:
            raise InvalidDotError(f"dot index {dot!r} outside 1..6")
        value |= 1 << (dot - 1)
    return BrailleCell(value)


def cell_to_char(cell: BrailleCell) -> str:
    return cell.char


def char_to_cell(char: str) -> BrailleCell:
    """Inverse of cell_to_char; rejects anything outside the 6-dot block."""
    if len(char) != 1:
        raise NotBrailleError(f"expected one character, got {char!r}")
    value = ord(char) - BRAILLE_BASE
    if not 0 <= value < N_PATTERNS:
        raise NotBrailleError(f"{char!r} is not a 6-dot braille pattern")
    return BrailleCell(value)


def is_braille_char(char: str) -> bool:
    return len(char) == 1 and 0 <= ord(char) - BRAILLE_BASE < N_PATTERNS
