"""Independent brute-force oracles the test suite checks the library against.

Everything here is a direct textbook transcription, deliberately sharing
no code with the package: BLEU from the clipped-count definition,
n-gram probabilities from raw substring counting, and lattice decoding
by full path enumeration.
"""

import itertools
import math
from collections import Counter


def textbook_bleu(candidates, references, max_n=4):
    """Corpus BLEU, 0-100: clipped modified precisions, BP, geometric mean."""
    matched = Counter()
    total = Counter()
    c_len = 0
    r_len = 0
    for cand, ref in zip(candidates, references):
        cand = list(cand)
        ref = list(ref)
        c_len += len(cand)
        r_len += len(ref)
        for n in range(1, max_n + 1):
            cand_ngrams = Counter(tuple(cand[i:i + n]) for i in range(len(cand) - n + 1))
            ref_ngrams = Counter(tuple(ref[i:i + n]) for i in range(len(ref) - n + 1))
            for gram, count in cand_ngrams.items():
                matched[n] += min(count, ref_ngrams[gram])
                total[n] += count
    # Orders with no candidate n-grams at all do not participate.
    precisions = [matched[n] / total[n] for n in range(1, max_n + 1) if total[n]]
    if c_len == 0 or not precisions:
        return 0.0
    bp = 1.0 if c_len >= r_len else math.exp(1 - r_len / c_len)
    if min(precisions) == 0.0:
        return 0.0
    return 100.0 * bp * math.exp(sum(math.log(p) for p in precisions) / len(precisions))


def brute_ngram_prob(sentences, order, k, char, context):
    """P(char | context) recounted from scratch with add-k smoothing."""
    BOS, EOS = "", ""
    vocab = {EOS}
    for s in sentences:
        vocab.update(s)
    padded = [[BOS] * (order - 1) + list(s) + [EOS] for s in sentences]
    context = tuple(context)
    ngram_count = 0
    ctx_count = 0
    for seq in padded:
        for i in range(len(seq) - order + 1):
            gram = tuple(seq[i:i + order])
            if gram[:-1] == context:
                ctx_count += 1
                if gram[-1] == char:
                    ngram_count += 1
    return (ngram_count + k) / (ctx_count + k * len(vocab))


def brute_perplexity(train_sentences, eval_sentences, order, k):
    """Perplexity via per-position probability recounting."""
    BOS, EOS = "", ""
    logp = 0.0
    tokens = 0
    for sentence in eval_sentences:
        seq = [BOS] * (order - 1) + list(sentence) + [EOS]
        for i in range(order - 1, len(seq)):
            p = brute_ngram_prob(train_sentences, order, k, seq[i], seq[i - order + 1:i])
            logp += math.log(p)
            tokens += 1
    return math.exp(-logp / tokens)


def enumerate_best_path(candidate_sets, model, emissions=None):
    """Exhaustive argmax over all lattice paths.

    candidate_sets: per position, list of (char, weight). Score of a path
    is the sum of model log probs (BOS-padded context) plus per-position
    log relative weight. Ties prefer the lexicographically smaller path.
    """
    BOS = ""
    if emissions is None:
        emissions = []
        for cands in candidate_sets:
            total = sum(w for _, w in cands)
            emissions.append({c: math.log(w / total) for c, w in cands})
    best_score = -math.inf
    best_path = None
    for combo in itertools.product(*[[c for c, _ in cands] for cands in candidate_sets]):
        context = [BOS] * (model.order - 1)
        score = 0.0
        for t, char in enumerate(combo):
            score += model.logprob(char, context) + emissions[t][char]
            context = (context + [char])[-(model.order - 1):] if model.order > 1 else []
        if score > best_score or (score == best_score and combo < best_path):
            best_score = score
            best_path = combo
    return "".join(best_path), best_score
