"""Braille -> Chinese decoding via a homophone candidate lattice.

Each braille syllable group maps to the characters sharing its
pronunciation; an n-gram model scores paths through the candidates.
Beam pruning keeps the top states per position ranked by exact forward
score, so widening the beam never degrades the result and a saturating
width equals the exhaustive argmax.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cells import char_to_cell, is_braille_char
from .errors import MalformedSyllableError, UndecodablePositionError
from .lexicon import Lexicon
from .ngram import BOS, NgramModel
from .pinyin import ZERO_INITIAL
from .scheme import BrailleScheme


@dataclass(frozen=True)
class SyllableGroup:
    """One parsed (initial?)(final)(tone?) cell group."""

    initial: str | None  # None = no initial cell (zero initial)
    final_names: tuple[str, ...]
    tone: int | None
    word_start: bool
    offset: int  # character offset of the group in the braille string


def parse_braille_syllables(braille: str, scheme: BrailleScheme) -> list[SyllableGroup]:
    """Greedy left-to-right grouping of a braille string.

    Cells are classified by table membership, trying initial first at a
    group start and tone first after a final. Spaces separate words.
    """
    groups: list[SyllableGroup] = []
    i = 0
    n = len(braille)
    word_start = True
    while i < n:
        char = braille[i]
        if char == " ":
            word_start = True
            i += 1
            continue
        if not is_braille_char(char):
            raise MalformedSyllableError(f"{char!r} is not a braille cell", offset=i)
        offset = i
        cell = char_to_cell(char)
        initial = None
        if scheme.is_initial_cell(cell):
            initial = scheme.initial_by_cell[cell.value]
            i += 1
            if i >= n or not is_braille_char(braille[i]):
                raise MalformedSyllableError("initial cell without a final", offset=i)
            cell = char_to_cell(braille[i])
        if not scheme.is_final_cell(cell):
            raise MalformedSyllableError("expected a final cell", offset=i)
        final_names = scheme.finals_by_cell[cell.value]
        i += 1
        tone = None
        if i < n and is_braille_char(braille[i]):
            nxt = char_to_cell(braille[i])
            if scheme.is_tone_cell(nxt):
                tone = scheme.tone_by_cell[nxt.value]
                i += 1
        groups.append(SyllableGroup(initial, final_names, tone, word_start, offset))
        word_start = False
    return groups


@dataclass(frozen=True)
class LatticePosition:
    candidates: tuple[tuple[str, int], ...]  # (character, weight), weight >= 1
    tone: int | None
    word_start: bool


@dataclass(frozen=True)
class Lattice:
    positions: tuple[LatticePosition, ...]

    def __len__(self) -> int:
        return len(self.positions)


def build_lattice(groups, lexicon: Lexicon) -> Lattice:
    """Look up homophone candidates for every parsed group.

    A tone-marked group keeps only characters carrying that tone; a
    toneless group takes the union over all five tones. Weights are
    character frequencies floored at one count.
    """
    positions = []
    for index, group in enumerate(groups):
        initial = group.initial if group.initial is not None else ZERO_INITIAL
        merged: dict[str, int] = {}
        for final in group.final_names:
            for char, freq in lexicon.homophones(initial, final, group.tone).items():
                merged[char] = max(merged.get(char, 0), max(freq, 1))
        if not merged:
            raise UndecodablePositionError(index)
        candidates = tuple(sorted(merged.items(), key=lambda kv: (-kv[1], kv[0])))
        positions.append(LatticePosition(candidates, group.tone, group.word_start))
    return Lattice(tuple(positions))


def _emission_logs(position: LatticePosition) -> dict[str, float]:
    total = sum(w for _, w in position.candidates)
    return {c: math.log(w / total) for c, w in position.candidates}


def _forward(lattice: Lattice, model: NgramModel, allowed_chars=None):
    """Viterbi over contexts of the last order-1 characters.

    Returns (final layer, per-position best forward score per character).
    ``allowed_chars`` restricts which candidates may be used at each
    position; emission weights always come from the full candidate set
    so scores stay comparable across restrictions.
    """
    ctx_len = model.order - 1
    start = (BOS,) * ctx_len
    current: dict[tuple, tuple[float, tuple]] = {start: (0.0, ())}
    char_scores: list[dict[str, float]] = []
    for t, position in enumerate(lattice.positions):
        emissions = _emission_logs(position)
        nxt: dict[tuple, tuple[float, tuple]] = {}
        cmax: dict[str, float] = {}
        for state, (score, path) in current.items():
            for char, _ in position.candidates:
                if allowed_chars is not None and char not in allowed_chars[t]:
                    continue
                new_score = score + model.logprob(char, state) + emissions[char]
                if new_score > cmax.get(char, -math.inf):
                    cmax[char] = new_score
                new_state = (state + (char,))[-ctx_len:] if ctx_len else ()
                new_path = path + (char,)
                best = nxt.get(new_state)
                if (best is None or new_score > best[0]
                        or (new_score == best[0] and new_path < best[1])):
                    nxt[new_state] = (new_score, new_path)
        char_scores.append(cmax)
        current = nxt
    return current, char_scores


def decode_with_score(lattice: Lattice, model: NgramModel,
                      beam_width: int) -> tuple[str, float]:
    """Best path and its score: sum of n-gram log probs plus emission logs.

    ``beam_width`` caps how many candidate characters survive at each
    position, ranked by exact forward score, so a wider beam searches a
    superset of paths and a saturating beam is the exhaustive argmax.
    Ties break toward the lexicographically smallest character path.
    """
    if beam_width < 1:
        raise ValueError(f"beam width {beam_width} < 1")
    if not lattice.positions:
        return "", 0.0

    final, char_scores = _forward(lattice, model)
    if any(len(p.candidates) > beam_width for p in lattice.positions):
        allowed = [
            frozenset(c for c, _ in sorted(
                cmax.items(), key=lambda kv: (-kv[1], kv[0]))[:beam_width])
            for cmax in char_scores
        ]
        final, _ = _forward(lattice, model, allowed_chars=allowed)

    best = None
    for cand in final.values():
        if best is None or cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1]):
            best = cand
    score, path = best
    return "".join(path), score


def decode(lattice: Lattice, model: NgramModel, beam_width: int) -> str:
    return decode_with_score(lattice, model, beam_width)[0]


def character_accuracy(hypothesis: str, reference: str) -> float:
    """Exact-position match rate over the longer length; 1.0 for two empties."""
    longest = max(len(hypothesis), len(reference))
    if longest == 0:
        return 1.0
    matches = sum(1 for h, r in zip(hypothesis, reference) if h == r)
    return matches / longest
