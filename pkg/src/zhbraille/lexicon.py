"""Pronunciation lexicon: word readings, per-character readings, homophones.

File format, one entry per line, UTF-8:

    word<TAB>space-separated tone-number pinyin<TAB>frequency

A single character may appear on several lines (heteronyms); the first
line by descending frequency is its preferred reading. Multi-character
words keep their highest-frequency reading only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CorpusParseError, MalformedSyllableError
from .pinyin import PinyinSyllable, parse_pinyin


@dataclass(frozen=True)
class Lexicon:
    word_pron: dict[str, tuple[PinyinSyllable, ...]]
    char_pron: dict[str, tuple[tuple[PinyinSyllable, int], ...]]
    word_freq: dict[str, int]
    max_word_len: int
    toned_index: dict[tuple[str, str, int], dict[str, int]] = field(repr=False, default_factory=dict)
    toneless_index: dict[tuple[str, str], dict[str, int]] = field(repr=False, default_factory=dict)

    def readings(self, char: str):
        """All (syllable, frequency) readings of a single character."""
        return self.char_pron.get(char, ())

    def homophones(self, initial: str, final: str, tone: int | None) -> dict[str, int]:
        """Characters pronounced (initial, final[, tone]) with their weights."""
        if tone is None:
            return self.toneless_index.get((initial, final), {})
        return self.toned_index.get((initial, final, tone), {})

    @property
    def inventory(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.toneless_index)

    def inventory_names(self) -> tuple[frozenset[str], frozenset[str]]:
        initials = frozenset(i for i, _ in self.inventory)
        finals = frozenset(f for _, f in self.inventory)
        return initials, finals

    def inventory_syllables(self):
        """Every (initial, final) pair crossed with all five tones."""
        for initial, final in sorted(self.inventory):
            for tone in (1, 2, 3, 4, 5):
                yield PinyinSyllable(initial, final, tone)


def _build_indexes(char_rows):
    toned: dict[tuple[str, str, int], dict[str, int]] = {}
    toneless: dict[tuple[str, str], dict[str, int]] = {}
    for char, readings in char_rows.items():
        for syllable, freq in readings:
            key = (syllable.initial, syllable.final, syllable.tone)
            slot = toned.setdefault(key, {})
            slot[char] = max(slot.get(char, 0), freq)
            pair = (syllable.initial, syllable.final)
            slot = toneless.setdefault(pair, {})
            slot[char] = max(slot.get(char, 0), freq)
    return toned, toneless


def load_lexicon(text: str) -> Lexicon:
    word_rows: dict[str, tuple[int, tuple[PinyinSyllable, ...]]] = {}
    char_rows: dict[str, list[tuple[PinyinSyllable, int]]] = {}
    pairs_seen: set[tuple[str, str]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise CorpusParseError("expected word<TAB>pinyin<TAB>frequency", lineno)
        word, pinyin, freq_text = parts[0].strip(), parts[1].strip(), parts[2].strip()
        try:
            freq = int(freq_text)
        except ValueError:
            raise CorpusParseError(f"bad frequency {freq_text!r}", lineno) from None
        if freq <= 0:
            raise CorpusParseError(f"frequency must be positive, got {freq}", lineno)
        try:
            syllables = tuple(parse_pinyin(tok) for tok in pinyin.split())
        except MalformedSyllableError as exc:
            raise CorpusParseError(str(exc), lineno) from exc
        if len(syllables) != len(word):
            raise CorpusParseError(
                f"{word!r} has {len(word)} characters but {len(syllables)} syllables", lineno)

        if word not in word_rows or freq > word_rows[word][0]:
            word_rows[word] = (freq, syllables)
        if len(word) == 1:
            char_rows.setdefault(word, []).append((syllables[0], freq))
        for s in syllables:
            pairs_seen.add((s.initial, s.final))

    char_pron = {
        char: tuple(sorted(readings, key=lambda r: (-r[1], str(r[0]))))
        for char, readings in char_rows.items()
    }
    toned, toneless = _build_indexes(char_pron)
    # Word-only syllable pairs still belong to the inventory even when no
    # single character carries them.
    for pair in pairs_seen:
        toneless.setdefault(pair, {})

    word_pron = {w: syls for w, (_, syls) in word_rows.items()}
    word_freq = {w: f for w, (f, _) in word_rows.items()}
    max_len = max((len(w) for w in word_pron), default=1)
    return Lexicon(word_pron, char_pron, word_freq, max_len, toned, toneless)


def load_lexicon_file(path) -> Lexicon:
    with open(path, encoding="utf-8") as fh:
        return load_lexicon(fh.read())
