"""Mandarin syllable structure and tone-number pinyin parsing.

A syllable is (initial, final, tone). The zero initial is the empty
string. Finals use ASCII `v` notation for the umlaut vowel: v = ü,
ve = üe, van = üan, vn = ün. Tone 5 is the neutral tone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedSyllableError

ZERO_INITIAL = ""

# Ordered longest-first so prefix matching is unambiguous (zh before z).
INITIALS = (
    "zh", "ch", "sh",
    "b", "p", "m", "f", "d", "t", "n", "l",
    "g", "k", "h", "j", "q", "x", "r", "z", "c", "s",
)

FINALS = (
    "a", "o", "e", "i", "u", "v", "er",
    "ai", "ei", "ao", "ou",
    "an", "en", "ang", "eng", "ong",
    "ia", "ie", "iao", "iu", "ian", "in", "iang", "ing", "iong",
    "ua", "uo", "uai", "ui", "uan", "un", "uang", "ueng",
    "ve", "van", "vn",
)

TONES = (1, 2, 3, 4, 5)

_INITIAL_SET = frozenset(INITIALS)
_FINAL_SET = frozenset(FINALS)

# Orthographic syllables that do not reduce by the generic y/w rules.
_Y_SPECIAL = {
    "yi": "i", "yin": "in", "ying": "ing",
    "you": "iu",
    "yu": "v", "yue": "ve", "yuan": "van", "yun": "vn",
}
_W_SPECIAL = {"wu": "u", "wei": "ui", "wen": "un"}


@dataclass(frozen=True, order=True)
class PinyinSyllable:
    """One pronounced Chinese character: (initial, final, tone)."""

    initial: str
    final: str
    tone: int

    def __post_init__(self):
        if self.initial != ZERO_INITIAL and self.initial not in _INITIAL_SET:
            raise MalformedSyllableError(f"unknown initial {self.initial!r}")
        if self.final not in _FINAL_SET:
            raise MalformedSyllableError(f"unknown final {self.final!r}")
        if self.tone not in TONES:
            raise MalformedSyllableError(f"tone {self.tone!r} outside 1..5")

    @property
    def toneless(self) -> tuple[str, str]:
        return (self.initial, self.final)

    def with_tone(self, tone: int) -> "PinyinSyllable":
        return PinyinSyllable(self.initial, self.final, tone)

    def __str__(self) -> str:
        return f"{self.initial}{self.final}{self.tone}"


def split_initial(body: str) -> tuple[str, str]:
    """Split the written syllable body into (initial, remainder)."""
    for initial in INITIALS:
        if body.startswith(initial):
            return initial, body[len(initial):]
    return ZERO_INITIAL, body


def _final_from_orthography(initial: str, rest: str) -> str:
    if initial == ZERO_INITIAL:
        if rest.startswith("y"):
            if rest in _Y_SPECIAL:
                return _Y_SPECIAL[rest]
            return "i" + rest[1:]  # ya -> ia, yan -> ian, yao -> iao, ...
        if rest.startswith("w"):
            if rest in _W_SPECIAL:
                return _W_SPECIAL[rest]
            return "u" + rest[1:]  # wa -> ua, wang -> uang, ...
        return rest  # bare finals: a, ai, an, er, ...
    if initial in ("j", "q", "x"):
        # After j/q/x written u is the umlaut vowel.
        return {"u": "v", "ue": "ve", "uan": "van", "un": "vn"}.get(rest, rest)
    return rest


def parse_pinyin(token: str) -> PinyinSyllable:
    """Parse tone-number pinyin like ``zhong1`` or ``lv4`` into a syllable.

    Accepts ``ü``/``u:`` as synonyms for ``v``. Raises
    MalformedSyllableError when the token is not a valid syllable.
    """
    token = token.strip().lower().replace("ü", "v").replace("u:", "v")
    if not token:
        raise MalformedSyllableError("empty pinyin token")
    if token[-1].isdigit():
        body, tone = token[:-1], int(token[-1])
    else:
        body, tone = token, 5
    if tone not in TONES:
        raise MalformedSyllableError(f"tone digit {tone} outside 1..5 in {token!r}")
    initial, rest = split_initial(body)
    if not rest:
        raise MalformedSyllableError(f"{token!r} has no final")
    final = _final_from_orthography(initial, rest)
    if final not in _FINAL_SET:
        raise MalformedSyllableError(f"{token!r}: unknown final {final!r}")
    return PinyinSyllable(initial, final, tone)
