#!/usr/bin/env python3
"""Regenerate src/zhbraille/data/scheme.tsv from the dot-number table.

Cell assignments follow the current national Mandarin braille chart,
except that the chart lets g/j, k/q, h/x share cells (context
disambiguates in real braille) and writes o/e and ong/ueng with one
cell each. This toolkit requires an injective initial map and keeps
all cell roles disjoint, so j, q, x, o and ueng get spare patterns:

    j = dot 4, q = dots 45, x = dots 46, o = dot 5, ueng = dots 56

The apical vowel of zhi/chi/shi/ri/zi/ci/si is written with the i cell
rather than being dropped, so every syllable carries a final cell.
"""

import os

INITIALS = {
    "b": "12", "p": "1234", "m": "134", "f": "124",
    "d": "145", "t": "2345", "n": "1345", "l": "123",
    "g": "1245", "k": "13", "h": "125",
    "j": "4", "q": "45", "x": "46",
    "zh": "34", "ch": "12345", "sh": "156", "r": "245",
    "z": "1356", "c": "14", "s": "234",
}

FINALS = {
    "a": "35", "o": "5", "e": "26", "i": "24", "u": "136", "v": "346",
    "er": "1235",
    "ai": "246", "ei": "2346", "ao": "235", "ou": "12356",
    "an": "1236", "en": "356", "ang": "236", "eng": "3456", "ong": "256",
    "ia": "1246", "ie": "15", "iao": "345", "iu": "1256",
    "ian": "146", "in": "126", "iang": "1346", "ing": "16", "iong": "1456",
    "ua": "123456", "uo": "135", "uai": "13456", "ui": "2456",
    "uan": "12456", "un": "25", "uang": "2356", "ueng": "56",
    "ve": "23456", "van": "12346", "vn": "456",
}

TONES = {"1": "1", "2": "2", "3": "3", "4": "23"}


def cell_char(dots: str) -> str:
    value = 0
    for d in dots:
        value |= 1 << (int(d) - 1)
    return chr(0x2800 + value)


def main() -> None:
    out = os.path.join(os.path.dirname(__file__), "..", "src", "zhbraille", "data", "scheme.tsv")
    lines = [
        "# Mandarin braille scheme table: key<TAB>cell.",
        "# Regenerate with scripts/make_scheme_table.py (dot numbers live there).",
    ]
    for section, table in (("initials", INITIALS), ("finals", FINALS), ("tones", TONES)):
        lines.append(f"[{section}]")
        for key, dots in table.items():
            lines.append(f"{key}\t{cell_char(dots)}")
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")

    values = {}
    for table, role in ((INITIALS, "initial"), (FINALS, "final"), (TONES, "tone")):
        for key, dots in table.items():
            v = cell_char(dots)
            assert v not in values, f"{role} {key} collides with {values[v]}"
            values[v] = f"{role} {key}"
    print(f"wrote {out}: {len(INITIALS)} initials, {len(FINALS)} finals, "
          f"{len(TONES)} tones, all cells distinct")


if __name__ == "__main__":
    main()
