"""Parallel corpus construction: ingest, transcode, split, measure.

Input corpora follow the Leipzig convention (``id<TAB>sentence`` per
line). Datasets serialize as ``braille<TAB>chinese`` TSV plus an
equivalent JSON-lines form with keys braille/text/idx.
"""

from __future__ import annotations

import hashlib
import json
import random
import statistics
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CorpusParseError,
    EmptySplitError,
    InsufficientDataError,
    UnknownCharacterError,
)
from .lexicon import Lexicon
from .scheme import BrailleScheme
from .transcode import TonePolicy, transcode_sentence_detailed


@dataclass(frozen=True)
class ParallelPair:
    braille: str
    chinese: str
    sentence_index: int


@dataclass(frozen=True)
class DatasetSplit:
    name: str  # training | validation | test
    pairs: tuple[ParallelPair, ...]

    def __len__(self) -> int:
        return len(self.pairs)


def ingest_sentences(text: str) -> list[tuple[int, str]]:
    """Parse Leipzig-style ``numeric-id<TAB>sentence`` lines in file order."""
    sentences = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        if "\t" not in raw:
            raise CorpusParseError("missing tab between id and sentence", lineno)
        id_text, sentence = raw.split("\t", 1)
        try:
            index = int(id_text.strip())
        except ValueError:
            raise CorpusParseError(f"non-numeric id {id_text!r}", lineno) from None
        if not sentence.strip():
            raise CorpusParseError("empty sentence", lineno)
        sentences.append((index, sentence.strip()))
    return sentences


@dataclass(frozen=True)
class CorpusBuildResult:
    pairs: tuple[ParallelPair, ...]
    skipped_unknown: int
    skipped_empty: int
    dropped_chars: int
    retained_tones: int
    tonable_syllables: int
    total_syllables: int

    @property
    def counters(self) -> dict:
        return {
            "pairs": len(self.pairs),
            "skipped_unknown_character": self.skipped_unknown,
            "skipped_untranscodable": self.skipped_empty,
            "dropped_non_chinese_chars": self.dropped_chars,
            "retained_tones": self.retained_tones,
            "tonable_syllables": self.tonable_syllables,
            "total_syllables": self.total_syllables,
        }


def build_parallel_corpus(sentences, scheme: BrailleScheme, lexicon: Lexicon,
                          policy: TonePolicy) -> CorpusBuildResult:
    """Transcode every sentence, skipping (and counting) failures.

    Output order follows input order; all randomness is counter-based on
    (policy.seed, sentence id), so rebuilds are byte-identical and the
    work may be fanned out across workers.
    """
    pairs = []
    skipped_unknown = skipped_empty = dropped = retained = tonable = total = 0
    for index, sentence in sentences:
        try:
            result = transcode_sentence_detailed(sentence, scheme, lexicon, policy, index)
        except UnknownCharacterError:
            skipped_unknown += 1
            continue
        dropped += result.dropped_chars
        if not result.braille:
            skipped_empty += 1
            continue
        retained += result.retained_tones
        tonable += result.tonable_syllables
        total += len(result.syllables)
        pairs.append(ParallelPair(result.braille, sentence, index))
    return CorpusBuildResult(tuple(pairs), skipped_unknown, skipped_empty,
                             dropped, retained, tonable, total)


def split_sizes(n: int, ratios=(8, 1, 1)) -> tuple[int, int, int]:
    """Rounded ratio shares for the first two splits; the third takes the rest."""
    total = sum(ratios)
    first = round(Fraction(n * ratios[0], total))
    second = round(Fraction(n * ratios[1], total))
    return first, second, n - first - second


def split_dataset(pairs, ratios=(8, 1, 1), seed: int = 0):
    """Seeded-shuffle partition into training/validation/test."""
    pairs = list(pairs)
    if any(r <= 0 for r in ratios) or len(ratios) != 3:
        raise ValueError(f"ratios must be three positive numbers, got {ratios}")
    if len(pairs) < 10:
        raise InsufficientDataError(f"need at least 10 pairs, got {len(pairs)}")
    n_train, n_valid, n_test = split_sizes(len(pairs), ratios)
    order = list(range(len(pairs)))
    random.Random(seed).shuffle(order)
    shuffled = [pairs[i] for i in order]
    return (
        DatasetSplit("training", tuple(shuffled[:n_train])),
        DatasetSplit("validation", tuple(shuffled[n_train:n_train + n_valid])),
        DatasetSplit("test", tuple(shuffled[n_train + n_valid:])),
    )


def braille_cell_count(braille: str) -> int:
    return sum(1 for c in braille if not c.isspace())


def chinese_char_count(text: str) -> int:
    return len(text)


@dataclass(frozen=True)
class SplitStats:
    name: str
    sample_count: int
    braille_string_mean: float
    braille_string_median: float
    braille_token_mean: float
    braille_token_median: float
    chinese_string_mean: float
    chinese_string_median: float
    chinese_token_mean: float
    chinese_token_median: float


def compute_stats(split: DatasetSplit, braille_tokens=braille_cell_count,
                  chinese_tokens=chinese_char_count) -> SplitStats:
    """String lengths in characters; token lengths via pluggable counters."""
    if not split.pairs:
        raise EmptySplitError(f"split {split.name!r} has no pairs")
    b_str = [len(p.braille) for p in split.pairs]
    b_tok = [braille_tokens(p.braille) for p in split.pairs]
    z_str = [len(p.chinese) for p in split.pairs]
    z_tok = [chinese_tokens(p.chinese) for p in split.pairs]
    return SplitStats(
        split.name, len(split.pairs),
        statistics.mean(b_str), statistics.median(b_str),
        statistics.mean(b_tok), statistics.median(b_tok),
        statistics.mean(z_str), statistics.median(z_str),
        statistics.mean(z_tok), statistics.median(z_tok),
    )


def render_stats_table(all_stats) -> str:
    """Sample counts and mean/median lengths, one row per split."""
    header = (
        f"{'':12s} {'#Sample':>9s}  {'Braille Len.':>23s}  {'Chinese Len.':>23s}\n"
        f"{'':12s} {'':>9s}  {'String':>11s} {'Token':>11s}  {'String':>11s} {'Token':>11s}"
    )
    rows = [header]
    for s in all_stats:
        rows.append(
            f"{s.name.capitalize():12s} {s.sample_count:>9d}  "
            f"{f'{s.braille_string_mean:g}/{s.braille_string_median:g}':>11s} "
            f"{f'{s.braille_token_mean:g}/{s.braille_token_median:g}':>11s}  "
            f"{f'{s.chinese_string_mean:g}/{s.chinese_string_median:g}':>11s} "
            f"{f'{s.chinese_token_mean:g}/{s.chinese_token_median:g}':>11s}"
        )
    return "\n".join(rows) + "\n"


def write_tsv(pairs, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for pair in pairs:
            fh.write(f"{pair.braille}\t{pair.chinese}\n")


def read_tsv(path) -> list[tuple[str, str]]:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            if "\t" not in line:
                raise CorpusParseError("missing tab between braille and chinese", lineno)
            braille, chinese = line.split("\t", 1)
            rows.append((braille, chinese))
    return rows


def write_jsonl(pairs, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for pair in pairs:
            fh.write(json.dumps(
                {"braille": pair.braille, "text": pair.chinese, "idx": pair.sentence_index},
                ensure_ascii=False, sort_keys=True) + "\n")


def file_digest(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()
