"""Character n-gram language model with add-k smoothing.

Sentences are padded with begin/end sentinels; the vocabulary is the
set of observed characters plus the end sentinel, so conditional
probabilities over any context sum to one exactly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .errors import InsufficientDataError

BOS = ""
EOS = ""


@dataclass(frozen=True)
class NgramModel:
    order: int
    k: float
    vocab: frozenset[str]  # includes EOS, never BOS
    ngram_counts: dict[tuple[str, ...], int] = field(repr=False)
    context_counts: dict[tuple[str, ...], int] = field(repr=False)

    @property
    def vocab_size(self) -> int:
        return len(self.vocab)

    def _pad(self, chars):
        return [BOS] * (self.order - 1) + list(chars) + [EOS]

    def prob(self, char: str, context) -> float:
        """P(char | context) under add-k smoothing; context is the
        preceding order-1 tokens (shorter contexts are BOS-padded)."""
        ctx = tuple(context)[-(self.order - 1):] if self.order > 1 else ()
        if self.order > 1 and len(ctx) < self.order - 1:
            ctx = (BOS,) * (self.order - 1 - len(ctx)) + ctx
        num = self.ngram_counts.get(ctx + (char,), 0) + self.k
        den = self.context_counts.get(ctx, 0) + self.k * self.vocab_size
        return num / den

    def logprob(self, char: str, context) -> float:
        return math.log(self.prob(char, context))

    def sentence_logprob(self, sentence: str) -> float:
        padded = self._pad(sentence)
        n = self.order
        total = 0.0
        for i in range(n - 1, len(padded)):
            total += self.logprob(padded[i], padded[i - n + 1:i])
        return total

    def perplexity(self, sentences) -> float:
        """exp of the mean negative log probability per predicted token
        (each sentence predicts its characters plus one end sentinel)."""
        logp = 0.0
        tokens = 0
        for sentence in sentences:
            logp += self.sentence_logprob(sentence)
            tokens += len(sentence) + 1
        if tokens == 0:
            raise InsufficientDataError("no tokens to evaluate")
        return math.exp(-logp / tokens)

    def save(self, path) -> None:
        payload = {
            "format": "zhbraille-ngram",
            "version": 1,
            "order": self.order,
            "k": self.k,
            "vocab": sorted(self.vocab),
            "ngrams": {"".join(g): c for g, c in sorted(self.ngram_counts.items())},
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, ensure_ascii=True, sort_keys=True, indent=0)

    @classmethod
    def load(cls, path) -> "NgramModel":
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
        if payload.get("format") != "zhbraille-ngram" or payload.get("version") != 1:
            raise InsufficientDataError(f"{path} is not a version-1 ngram model file")
        order = payload["order"]
        ngrams = {tuple(key): count for key, count in payload["ngrams"].items()}
        contexts: dict[tuple[str, ...], int] = {}
        for gram, count in ngrams.items():
            ctx = gram[:-1]
            contexts[ctx] = contexts.get(ctx, 0) + count
        return cls(order, payload["k"], frozenset(payload["vocab"]), ngrams, contexts)


def train_ngram(sentences, order: int, k: float = 0.01) -> NgramModel:
    if order not in (1, 2, 3):
        raise ValueError(f"order {order} outside 1..3")
    if k <= 0:
        raise ValueError(f"smoothing k must be positive, got {k}")
    cleaned = [s for s in (str(x).strip() for x in sentences) if s]
    if not cleaned:
        raise InsufficientDataError("no non-empty sentences to train on")

    vocab = {EOS}
    ngrams: dict[tuple[str, ...], int] = {}
    contexts: dict[tuple[str, ...], int] = {}
    for sentence in cleaned:
        vocab.update(sentence)
        padded = [BOS] * (order - 1) + list(sentence) + [EOS]
        for i in range(len(padded) - order + 1):
            gram = tuple(padded[i:i + order])
            ngrams[gram] = ngrams.get(gram, 0) + 1
            ctx = gram[:-1]
            contexts[ctx] = contexts.get(ctx, 0) + 1
    return NgramModel(order, k, frozenset(vocab), ngrams, contexts)
