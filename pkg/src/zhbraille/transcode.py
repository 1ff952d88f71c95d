"""Chinese sentence -> braille string conversion.

Pipeline per sentence: drop non-CJK characters, segment by forward
maximal matching against the lexicon, annotate each word with pinyin,
emit cells per syllable with the tone cell kept or dropped by the
seeded tone policy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bleu import is_cjk
from .errors import UnknownCharacterError
from .lexicon import Lexicon
from .pinyin import PinyinSyllable
from .rng import counter_uniform
from .scheme import BrailleScheme, syllable_to_cells


@dataclass(frozen=True)
class TonePolicy:
    """Per-syllable Bernoulli tone retention, counter-seeded."""

    retain_probability: float
    seed: int

    def __post_init__(self):
        if not 0.0 <= self.retain_probability <= 1.0:
            raise ValueError(f"retain probability {self.retain_probability} outside [0, 1]")

    @classmethod
    def full_tone(cls, seed: int = 0) -> "TonePolicy":
        return cls(1.0, seed)

    @classmethod
    def no_tone(cls, seed: int = 0) -> "TonePolicy":
        return cls(0.0, seed)

    @classmethod
    def ten_percent(cls, seed: int = 0) -> "TonePolicy":
        return cls(0.1, seed)

    @property
    def name(self) -> str:
        if self.retain_probability == 1.0:
            return "full"
        if self.retain_probability == 0.0:
            return "none"
        return f"p={self.retain_probability:g}"

    def retains(self, sentence_index: int, syllable_index: int) -> bool:
        return counter_uniform(self.seed, sentence_index, syllable_index) < self.retain_probability


def parse_tone_policy(text: str, seed: int = 0) -> TonePolicy:
    """Parse a policy name: ``full``, ``none``, or ``p=<probability>``."""
    text = text.strip().lower()
    if text == "full":
        return TonePolicy.full_tone(seed)
    if text == "none":
        return TonePolicy.no_tone(seed)
    if text.startswith("p="):
        return TonePolicy(float(text[2:]), seed)
    raise ValueError(f"unknown tone policy {text!r}; expected full, none, or p=<x>")


def segment(text: str, lexicon: Lexicon) -> list[str]:
    """Forward maximal matching with single-character fallback."""
    chars = "".join(text.split())
    if not chars:
        raise ValueError("empty text")
    words = []
    i = 0
    n = len(chars)
    while i < n:
        end = min(n, i + lexicon.max_word_len)
        while end - i > 1 and chars[i:end] not in lexicon.word_pron:
            end -= 1
        words.append(chars[i:end])
        i = end
    return words


def annotate_pinyin(word: str, lexicon: Lexicon) -> tuple[PinyinSyllable, ...]:
    """Word-level reading when available, else per-character best reading."""
    stored = lexicon.word_pron.get(word)
    if stored is not None:
        return stored
    syllables = []
    for offset, char in enumerate(word):
        readings = lexicon.readings(char)
        if not readings:
            raise UnknownCharacterError(char, offset)
        syllables.append(readings[0][0])
    return tuple(syllables)


@dataclass(frozen=True)
class TranscodeResult:
    """Braille output plus the emission log the tests audit."""

    braille: str
    words: tuple[str, ...]
    syllables: tuple[PinyinSyllable, ...]
    tone_flags: tuple[bool, ...]  # per syllable: tone cell emitted
    dropped_chars: int

    @property
    def retained_tones(self) -> int:
        return sum(self.tone_flags)

    @property
    def tonable_syllables(self) -> int:
        return sum(1 for s in self.syllables if s.tone in (1, 2, 3, 4))


def transcode_sentence_detailed(text: str, scheme: BrailleScheme, lexicon: Lexicon,
                                policy: TonePolicy, sentence_index: int) -> TranscodeResult:
    kept = [c for c in text if is_cjk(c)]
    dropped = sum(1 for c in text if not is_cjk(c) and not c.isspace())
    if not kept:
        return TranscodeResult("", (), (), (), dropped)

    words = segment("".join(kept), lexicon)
    chunks = []
    syllables: list[PinyinSyllable] = []
    flags: list[bool] = []
    syllable_index = 0
    for word in words:
        word_cells = []
        for syllable in annotate_pinyin(word, lexicon):
            retain = (syllable.tone in (1, 2, 3, 4)
                      and policy.retains(sentence_index, syllable_index))
            word_cells.extend(syllable_to_cells(syllable, scheme, include_tone=retain))
            syllables.append(syllable)
            flags.append(retain)
            syllable_index += 1
        chunks.append("".join(c.char for c in word_cells))
    return TranscodeResult(" ".join(chunks), tuple(words), tuple(syllables),
                           tuple(flags), dropped)


def transcode_sentence(text: str, scheme: BrailleScheme, lexicon: Lexicon,
                       policy: TonePolicy, sentence_index: int) -> str:
    """Braille string: words joined by single spaces, cells unseparated."""
    return transcode_sentence_detailed(text, scheme, lexicon, policy, sentence_index).braille


def count_retained_tones(braille: str, scheme: BrailleScheme) -> tuple[int, int]:
    """Re-parse emitted braille and count (tone cells present, syllables)."""
    from .lattice import parse_braille_syllables

    groups = parse_braille_syllables(braille, scheme)
    retained = sum(1 for g in groups if g.tone is not None)
    return retained, len(groups)
