"""One test per acceptance criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""

import hashlib
import json
import random
from contextlib import contextmanager

import pytest

from conftest import (
    leipzig_text,
    make_toy_sentences,
    make_word_sentences,
    toy_lexicon_text,
)
from oracles import enumerate_best_path, textbook_bleu
from zhbraille.bleu import bleu
from zhbraille.cells import BrailleCell, cell_to_char, char_to_cell
from zhbraille.cli import main
from zhbraille.corpus import file_digest, split_dataset, split_sizes
from zhbraille.lattice import (
    Lattice,
    LatticePosition,
    character_accuracy,
    decode_with_score,
)
from zhbraille.ngram import train_ngram
from zhbraille.scheme import cells_to_syllable_candidates, syllable_to_cells
from zhbraille.transcode import TonePolicy, transcode_sentence_detailed


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"FAIL: {name}")
        raise
    print(f"PASS: {name}")


def test_unicode_braille_bijection():
    with criterion("unicode braille bijection: all 64 cell<->codepoint round trips"):
        seen = set()
        for value in range(64):
            char = cell_to_char(BrailleCell(value))
            assert ord(char) == 0x2800 + value
            assert char_to_cell(char).value == value
            seen.add(char)
        assert len(seen) == 64


def test_encoding_inverse_full_inventory(shipped_scheme, shipped_lexicon):
    with criterion("encoding inverse: full inventory sweep, both tone settings"):
        count = 0
        for syllable in shipped_lexicon.inventory_syllables():
            for include_tone in (False, True):
                cells = syllable_to_cells(syllable, shipped_scheme, include_tone)
                assert syllable in cells_to_syllable_candidates(cells, shipped_scheme)
                count += 1
        assert count == len(shipped_lexicon.inventory) * 5 * 2


def test_tone_policy_statistics(shipped_scheme, shipped_lexicon, toned_words):
    with criterion("tone policy statistics: 10% in [0.09, 0.11]; full all; none zero"):
        sentences = make_word_sentences(toned_words, 900, 7, seed=11)
        tallies = {}
        for name, policy in (("full", TonePolicy.full_tone(2024)),
                             ("none", TonePolicy.no_tone(2024)),
                             ("ten", TonePolicy.ten_percent(2024))):
            retained = tonable = 0
            for idx, text in sentences:
                detail = transcode_sentence_detailed(
                    text, shipped_scheme, shipped_lexicon, policy, idx)
                retained += detail.retained_tones
                tonable += detail.tonable_syllables
            tallies[name] = (retained, tonable)
        assert tallies["full"][1] >= 10_000
        assert tallies["full"][0] == tallies["full"][1]
        assert tallies["none"][0] == 0
        fraction = tallies["ten"][0] / tallies["ten"][1]
        assert 0.09 <= fraction <= 0.11


def test_split_sizes_criterion():
    with criterion("split sizes: 656,340 -> 525,072/65,634/65,634; 10 -> 8/1/1; deterministic"):
        assert split_sizes(656_340) == (525_072, 65_634, 65_634)
        assert split_sizes(10) == (8, 1, 1)
        pairs = list(range(656_340))
        digests = []
        for _ in range(2):
            splits = split_dataset(pairs, seed=99)
            assert tuple(len(s) for s in splits) == (525_072, 65_634, 65_634)
            blob = repr([s.pairs[:100] + s.pairs[-100:] for s in splits]).encode()
            digests.append(hashlib.sha256(blob).hexdigest())
        assert digests[0] == digests[1]


def test_bleu_oracle_criterion():
    with criterion("BLEU oracle: identity 100, disjoint 0, 50 random pairs within 1e-9"):
        identity = [list("国家很大"), list("天气很好")]
        assert bleu(identity, identity).score == 100.0
        assert bleu([list("abcd")], [list("wxyz")]).score == 0.0
        rng = random.Random(2025)
        for _ in range(50):
            n = rng.randint(1, 6)
            cands = [[rng.choice("abcdef") for _ in range(rng.randint(1, 10))]
                     for _ in range(n)]
            refs = [[rng.choice("abcdef") for _ in range(rng.randint(1, 10))]
                    for _ in range(n)]
            assert bleu(cands, refs).score == pytest.approx(
                textbook_bleu(cands, refs), abs=1e-9)


def test_decoder_optimality_criterion():
    with criterion("decoder optimality: 100 random lattices, saturating beam == exhaustive"):
        rng = random.Random(424242)
        alphabet = "ABCDEFGHJK"
        for _ in range(100):
            sentences = ["".join(rng.choice(alphabet) for _ in range(rng.randint(2, 9)))
                         for _ in range(rng.randint(3, 20))]
            model = train_ngram(sentences, order=rng.choice([1, 2, 3]), k=0.05)
            n_pos = rng.randint(1, 8)
            positions = []
            for _ in range(n_pos):
                size = rng.randint(1, 6)
                chars = sorted(rng.sample(alphabet, size))
                positions.append(LatticePosition(
                    tuple((c, rng.randint(1, 50)) for c in chars), None, False))
            lattice = Lattice(tuple(positions))
            width = 1
            for p in lattice.positions:
                width *= len(p.candidates)
            got_path, got_score = decode_with_score(lattice, model, width)
            want_path, want_score = enumerate_best_path(
                [list(p.candidates) for p in lattice.positions], model)
            assert got_path == want_path
            assert got_score == pytest.approx(want_score, abs=1e-12)


def _pipeline_accuracy(tmp_path, corpus, lexicon, policy, order, tag):
    out = tmp_path / f"run-{tag}"
    code = main(["pipeline", "--corpus", str(corpus), "--lexicon", str(lexicon),
                 "--tone-policy", policy, "--seed", "5", "--split-seed", "9",
                 "--order", str(order), "--beam", "8", "--out", str(out)])
    assert code == 0
    hyps = (out / "test.hyp.txt").read_text(encoding="utf-8").splitlines()
    refs = (out / "test.ref.txt").read_text(encoding="utf-8").splitlines()
    assert len(hyps) == len(refs)
    accuracy = sum(character_accuracy(h, r) for h, r in zip(hyps, refs)) / len(refs)
    manifest = json.loads((out / "pipeline.json").read_text(encoding="utf-8"))
    return accuracy, manifest["bleu"]["score"]


def test_context_resolves_ambiguity(tmp_path):
    with criterion("context resolves ambiguity: full >= 10% >= none; bigram >= unigram"):
        lexicon = tmp_path / "toy_lexicon.tsv"
        lexicon.write_text(toy_lexicon_text(), encoding="utf-8")
        corpus = tmp_path / "toy_corpus.tsv"
        corpus.write_text(leipzig_text(make_toy_sentences(500, seed=77)), encoding="utf-8")

        acc_full, bleu_full = _pipeline_accuracy(tmp_path, corpus, lexicon, "full", 2, "full")
        acc_ten, bleu_ten = _pipeline_accuracy(tmp_path, corpus, lexicon, "p=0.1", 2, "ten")
        acc_none, bleu_none = _pipeline_accuracy(tmp_path, corpus, lexicon, "none", 2, "none")
        acc_uni, _ = _pipeline_accuracy(tmp_path, corpus, lexicon, "none", 1, "none-uni")

        assert acc_full == 1.0
        assert bleu_full == 100.0
        assert acc_full >= acc_ten >= acc_none
        assert bleu_none < 100.0
        assert bleu_none <= bleu_ten <= bleu_full
        assert acc_uni <= acc_none


def test_pipeline_reproducibility(tmp_path):
    with criterion("pipeline reproducibility: two runs from one manifest, byte-identical"):
        lexicon = tmp_path / "toy_lexicon.tsv"
        lexicon.write_text(toy_lexicon_text(), encoding="utf-8")
        corpus = tmp_path / "toy_corpus.tsv"
        corpus.write_text(leipzig_text(make_toy_sentences(150, seed=88)), encoding="utf-8")

        first = tmp_path / "first"
        assert main(["pipeline", "--corpus", str(corpus), "--lexicon", str(lexicon),
                     "--tone-policy", "p=0.1", "--seed", "21", "--split-seed", "12",
                     "--order", "2", "--beam", "8", "--out", str(first)]) == 0
        second = tmp_path / "second"
        assert main(["pipeline", "--from-manifest", str(first / "pipeline.json"),
                     "--out", str(second)]) == 0
        first_digests = {p.name: file_digest(p) for p in sorted(first.iterdir())}
        second_digests = {p.name: file_digest(p) for p in sorted(second.iterdir())}
        assert first_digests == second_digests
