#!/usr/bin/env python3
"""Sweep the tone-retention probability and measure decoder accuracy.

Shows how much of the homophone confusion the n-gram context resolves as
tones disappear from the braille side.

Usage: python scripts/accuracy_vs_tone_policy.py [--sentences N] [--order N]
"""

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from zhbraille import load_default_lexicon, load_default_scheme  # noqa: E402
from zhbraille.lattice import (  # noqa: E402
    build_lattice,
    character_accuracy,
    decode,
    parse_braille_syllables,
)
from zhbraille.ngram import train_ngram  # noqa: E402
from zhbraille.transcode import TonePolicy, transcode_sentence_detailed  # noqa: E402


def run(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sentences", type=int, default=400)
    parser.add_argument("--order", type=int, default=2)
    parser.add_argument("--beam", type=int, default=16)
    args = parser.parse_args(argv)

    scheme = load_default_scheme()
    lexicon = load_default_lexicon()
    words = [w for w in sorted(lexicon.word_pron) if len(w) > 1]
    rng = random.Random(99)
    sentences = ["".join(rng.choice(words) for _ in range(6))
                 for _ in range(args.sentences)]
    cut = int(len(sentences) * 0.8)
    model = train_ngram(sentences[:cut], order=args.order, k=0.01)
    held_out = sentences[cut:]

    print(f"order-{args.order} model, {len(held_out)} held-out sentences")
    print(f"{'retain p':>9s} {'char accuracy':>14s} {'mean candidates':>16s}")
    for p in (1.0, 0.5, 0.2, 0.1, 0.0):
        policy = TonePolicy(p, seed=7)
        total_acc = 0.0
        total_cands = 0
        positions = 0
        for idx, text in enumerate(held_out):
            # transcoding drops nothing here: sentences are lexicon words
            detail = transcode_sentence_detailed(text, scheme, lexicon, policy, idx)
            lattice = build_lattice(
                parse_braille_syllables(detail.braille, scheme), lexicon)
            hyp = decode(lattice, model, args.beam)
            total_acc += character_accuracy(hyp, text)
            total_cands += sum(len(pos.candidates) for pos in lattice.positions)
            positions += len(lattice.positions)
        print(f"{p:9.2f} {total_acc / len(held_out):14.4f} {total_cands / positions:16.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(run())
