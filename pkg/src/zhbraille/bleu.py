"""Corpus-level BLEU with modified n-gram precision and brevity penalty.

Scores are reported on the 0-100 scale. The corpus score uses no
smoothing and is 0 whenever some order has zero precision; per-sentence
diagnostics use add-1 smoothed counts instead.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .errors import PairedInputError

_CJK_RANGES = (
    (0x3400, 0x4DBF),    # extension A
    (0x4E00, 0x9FFF),    # unified ideographs
    (0xF900, 0xFAFF),    # compatibility ideographs
    (0x20000, 0x3FFFF),  # extensions B and beyond
)


def is_cjk(char: str) -> bool:
    cp = ord(char)
    return any(lo <= cp <= hi for lo, hi in _CJK_RANGES)


def tokenize_chinese(text: str) -> list[str]:
    """CJK codepoints become single tokens; other non-space runs stay whole."""
    tokens = []
    run = []
    for char in text:
        if char.isspace() or is_cjk(char):
            if run:
                tokens.append("".join(run))
                run = []
            if is_cjk(char):
                tokens.append(char)
        else:
            run.append(char)
    if run:
        tokens.append("".join(run))
    return tokens


@dataclass(frozen=True)
class BleuReport:
    precisions: tuple[float | None, ...]  # None: no candidate n-grams of that order
    brevity_penalty: float
    score: float
    candidate_tokens: int
    reference_tokens: int

    def as_dict(self) -> dict:
        return {
            "score": self.score,
            "brevity_penalty": self.brevity_penalty,
            "precisions": list(self.precisions),
            "candidate_tokens": self.candidate_tokens,
            "reference_tokens": self.reference_tokens,
        }


def _ngram_counts(tokens, n) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def bleu(candidates, references, max_n: int = 4) -> BleuReport:
    """Corpus BLEU over paired token sequences."""
    candidates = [list(c) for c in candidates]
    references = [list(r) for r in references]
    if len(candidates) != len(references):
        raise PairedInputError(
            f"{len(candidates)} candidates vs {len(references)} references")
    if not candidates:
        raise PairedInputError("empty corpus")

    matched = [0] * max_n
    total = [0] * max_n
    cand_len = 0
    ref_len = 0
    for cand, ref in zip(candidates, references):
        cand_len += len(cand)
        ref_len += len(ref)
        for n in range(1, max_n + 1):
            counts = _ngram_counts(cand, n)
            if not counts:
                continue
            ref_counts = _ngram_counts(ref, n)
            matched[n - 1] += sum(min(c, ref_counts[g]) for g, c in counts.items())
            total[n - 1] += sum(counts.values())

    precisions = tuple(
        (matched[i] / total[i]) if total[i] else None for i in range(max_n))
    if cand_len == 0:
        bp = 0.0
    elif cand_len < ref_len:
        bp = math.exp(1.0 - ref_len / cand_len)
    else:
        bp = 1.0

    # Orders where no candidate was long enough (0/0) drop out of the
    # geometric mean; a zero precision (0/positive) still zeroes the score.
    effective = [p for p in precisions if p is not None]
    if not effective or any(p == 0.0 for p in effective) or bp == 0.0:
        score = 0.0
    else:
        score = 100.0 * bp * math.exp(
            sum(math.log(p) for p in effective) / len(effective))
    return BleuReport(precisions, bp, score, cand_len, ref_len)


def sentence_bleu_smoothed(candidate, reference, max_n: int = 4) -> float:
    """Single-sentence score with add-1 smoothed clipped counts."""
    candidate = list(candidate)
    reference = list(reference)
    log_sum = 0.0
    for n in range(1, max_n + 1):
        counts = _ngram_counts(candidate, n)
        ref_counts = _ngram_counts(reference, n)
        matched = sum(min(c, ref_counts[g]) for g, c in counts.items())
        log_sum += math.log((matched + 1) / (sum(counts.values()) + 1))
    if not candidate:
        return 0.0
    bp = math.exp(1.0 - len(reference) / len(candidate)) if len(candidate) < len(reference) else 1.0
    return 100.0 * bp * math.exp(log_sum / max_n)


def evaluate_split(hypothesis_lines, reference_lines, max_n: int = 4,
                   tokenizer=tokenize_chinese):
    """Corpus report plus per-sentence smoothed diagnostics."""
    hyp = list(hypothesis_lines)
    ref = list(reference_lines)
    if len(hyp) != len(ref):
        raise PairedInputError(f"{len(hyp)} hypothesis lines vs {len(ref)} reference lines")
    hyp_tokens = [tokenizer(line) for line in hyp]
    ref_tokens = [tokenizer(line) for line in ref]
    report = bleu(hyp_tokens, ref_tokens, max_n=max_n)
    diagnostics = [
        sentence_bleu_smoothed(h, r, max_n=max_n)
        for h, r in zip(hyp_tokens, ref_tokens)
    ]
    return report, diagnostics
