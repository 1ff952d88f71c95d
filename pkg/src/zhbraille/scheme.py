"""Scheme tables mapping syllable components to braille cells.

The concrete cell assignments live in an external TSV table (see
``data/scheme.tsv``); the code only assumes the structure: an injective
initial map, a final map, and an injective tone map over tones 1-4.
Neutral tone (5) never receives a cell.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cells import BrailleCell, char_to_cell
from .errors import (
    DuplicateEntryError,
    IncompleteSchemeError,
    InjectivityError,
    MalformedSyllableError,
    NotBrailleError,
)
from .pinyin import FINALS, INITIALS, ZERO_INITIAL, PinyinSyllable

_SECTIONS = ("initials", "finals", "tones")


@dataclass(frozen=True)
class BrailleScheme:
    """The three loaded mapping tables plus reverse lookups."""

    initial_map: dict[str, BrailleCell]
    final_map: dict[str, BrailleCell]
    tone_map: dict[int, BrailleCell]
    initial_by_cell: dict[int, str] = field(repr=False, default_factory=dict)
    finals_by_cell: dict[int, tuple[str, ...]] = field(repr=False, default_factory=dict)
    tone_by_cell: dict[int, int] = field(repr=False, default_factory=dict)

    def is_initial_cell(self, cell: BrailleCell) -> bool:
        return cell.value in self.initial_by_cell

    def is_final_cell(self, cell: BrailleCell) -> bool:
        return cell.value in self.finals_by_cell

    def is_tone_cell(self, cell: BrailleCell) -> bool:
        return cell.value in self.tone_by_cell

    @property
    def cell_alphabet(self) -> frozenset[int]:
        return frozenset(self.initial_by_cell) | frozenset(self.finals_by_cell) | frozenset(self.tone_by_cell)


def _reverse_maps(initial_map, final_map, tone_map):
    initial_by_cell = {}
    for name, cell in initial_map.items():
        if cell.value in initial_by_cell:
            raise InjectivityError(
                f"initials {initial_by_cell[cell.value]!r} and {name!r} share cell {cell.char!r}"
            )
        initial_by_cell[cell.value] = name
    finals_by_cell: dict[int, list[str]] = {}
    for name, cell in final_map.items():
        finals_by_cell.setdefault(cell.value, []).append(name)
    tone_by_cell = {}
    for tone, cell in tone_map.items():
        if cell.value in tone_by_cell:
            raise InjectivityError(
                f"tones {tone_by_cell[cell.value]} and {tone} share cell {cell.char!r}"
            )
        tone_by_cell[cell.value] = tone
    return (
        initial_by_cell,
        {v: tuple(sorted(names)) for v, names in finals_by_cell.items()},
        tone_by_cell,
    )


def load_scheme(text: str, inventory=None) -> BrailleScheme:
    """Parse a scheme table from TSV text.

    ``inventory`` is an optional (initials, finals) pair of name sets that
    must all be covered, typically taken from ``Lexicon.inventory_names()``.
    """
    sections: dict[str, dict[str, BrailleCell]] = {s: {} for s in _SECTIONS}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1]
            if name not in _SECTIONS:
                raise IncompleteSchemeError(f"line {lineno}: unknown section {name!r}")
            current = name
            continue
        if current is None:
            raise IncompleteSchemeError(f"line {lineno}: row before any section header")
        parts = line.split("\t")
        if len(parts) != 2:
            raise IncompleteSchemeError(f"line {lineno}: expected key<TAB>braille-char")
        key, braille = parts[0].strip(), parts[1].strip()
        try:
            cell = char_to_cell(braille)
        except NotBrailleError as exc:
            raise IncompleteSchemeError(f"line {lineno}: {exc}") from exc
        if key in sections[current]:
            raise DuplicateEntryError(f"line {lineno}: duplicate {current[:-1]} {key!r}")
        sections[current][key] = cell

    initial_map = sections["initials"]
    final_map = sections["finals"]
    tone_map = {}
    for key, cell in sections["tones"].items():
        if key not in ("1", "2", "3", "4"):
            raise IncompleteSchemeError(f"tone key {key!r} outside 1..4")
        tone_map[int(key)] = cell
    for tone in (1, 2, 3, 4):
        if tone not in tone_map:
            raise IncompleteSchemeError(f"missing tone {tone}")

    for name in initial_map:
        if name not in INITIALS:
            raise IncompleteSchemeError(f"unknown initial {name!r}")
    for name in final_map:
        if name not in FINALS:
            raise IncompleteSchemeError(f"unknown final {name!r}")

    if inventory is not None:
        initials_needed, finals_needed = inventory
        missing = sorted(set(initials_needed) - {ZERO_INITIAL} - set(initial_map))
        missing += sorted(set(finals_needed) - set(final_map))
        if missing:
            raise IncompleteSchemeError(f"scheme lacks entries for {missing}")

    reverse = _reverse_maps(initial_map, final_map, tone_map)
    return BrailleScheme(initial_map, final_map, tone_map, *reverse)


def load_scheme_file(path, inventory=None) -> BrailleScheme:
    with open(path, encoding="utf-8") as fh:
        return load_scheme(fh.read(), inventory=inventory)


def syllable_to_cells(syllable: PinyinSyllable, scheme: BrailleScheme,
                      include_tone: bool) -> list[BrailleCell]:
    """Encode one syllable as 1-3 cells.

    Cell layout: [initial unless zero] [final] [tone if requested and 1-4].
    """
    cells = []
    if syllable.initial != ZERO_INITIAL:
        try:
            cells.append(scheme.initial_map[syllable.initial])
        except KeyError:
            raise IncompleteSchemeError(f"no cell for initial {syllable.initial!r}") from None
    try:
        cells.append(scheme.final_map[syllable.final])
    except KeyError:
        raise IncompleteSchemeError(f"no cell for final {syllable.final!r}") from None
    if include_tone and syllable.tone in (1, 2, 3, 4):
        cells.append(scheme.tone_map[syllable.tone])
    return cells


def cells_to_syllable_candidates(cells, scheme: BrailleScheme) -> set[PinyinSyllable]:
    """Invert a 1-3 cell group back to every syllable it could encode.

    A tone cell pins the tone; otherwise candidates carry all five tones.
    All readings under the (initial?)(final)(tone?) grammar are unioned,
    so the result is the complete preimage of the encoding.
    """
    cells = list(cells)
    if not 1 <= len(cells) <= 3:
        raise MalformedSyllableError(f"group of {len(cells)} cells outside 1..3")

    readings = []  # (initial, final cell, pinned tone or None)
    if len(cells) == 1:
        readings.append((ZERO_INITIAL, cells[0], None))
    elif len(cells) == 2:
        if scheme.is_initial_cell(cells[0]):
            readings.append((scheme.initial_by_cell[cells[0].value], cells[1], None))
        if scheme.is_tone_cell(cells[1]):
            readings.append((ZERO_INITIAL, cells[0], scheme.tone_by_cell[cells[1].value]))
    else:
        if scheme.is_initial_cell(cells[0]) and scheme.is_tone_cell(cells[2]):
            readings.append((scheme.initial_by_cell[cells[0].value], cells[1],
                             scheme.tone_by_cell[cells[2].value]))

    candidates = set()
    for initial, final_cell, tone in readings:
        if not scheme.is_final_cell(final_cell):
            continue
        tones = (1, 2, 3, 4, 5) if tone is None else (tone,)
        for final in scheme.finals_by_cell[final_cell.value]:
            for t in tones:
                candidates.add(PinyinSyllable(initial, final, t))
    if not candidates:
        raise MalformedSyllableError(
            "cells do not parse as (initial?)(final)(tone?)", offset=0)
    return candidates
