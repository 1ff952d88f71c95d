import random

import pytest

from conftest import TOY_CHARS, make_toy_sentences
from oracles import enumerate_best_path
from zhbraille.errors import MalformedSyllableError, UndecodablePositionError
from zhbraille.lattice import (
    Lattice,
    LatticePosition,
    build_lattice,
    character_accuracy,
    decode,
    decode_with_score,
    parse_braille_syllables,
)
from zhbraille.lexicon import load_lexicon
from zhbraille.ngram import train_ngram
from zhbraille.pinyin import PinyinSyllable
from zhbraille.transcode import TonePolicy, transcode_sentence_detailed


def test_parse_single_final_only_cell(shipped_scheme):
    braille = shipped_scheme.final_map["a"].char
    groups = parse_braille_syllables(braille, shipped_scheme)
    assert len(groups) == 1
    assert groups[0].initial is None
    assert groups[0].final_names == ("a",)
    assert groups[0].tone is None


def test_parse_full_tone_group_count(shipped_scheme, shipped_lexicon):
    detail = transcode_sentence_detailed(
        "中国人民银行今天天气很好", shipped_scheme, shipped_lexicon,
        TonePolicy.full_tone(3), 0)
    groups = parse_braille_syllables(detail.braille, shipped_scheme)
    assert len(groups) == len(detail.syllables)
    word_starts = [g.word_start for g in groups]
    assert word_starts.count(True) == len(detail.words)


@pytest.mark.parametrize("policy_name", ["full", "none", "ten"])
def test_parse_recovers_segmentation_randomized(shipped_scheme, shipped_lexicon,
                                                toned_words, policy_name):
    # Generate-and-check: syllable grouping survives the braille round trip.
    policy = {
        "full": TonePolicy.full_tone(31),
        "none": TonePolicy.no_tone(31),
        "ten": TonePolicy.ten_percent(31),
    }[policy_name]
    rng = random.Random(13)
    for idx in range(1000):
        words = [rng.choice(toned_words) for _ in range(rng.randint(1, 5))]
        text = "".join(words)
        detail = transcode_sentence_detailed(text, shipped_scheme, shipped_lexicon,
                                             policy, idx)
        groups = parse_braille_syllables(detail.braille, shipped_scheme)
        assert len(groups) == len(detail.syllables)
        for group, syllable in zip(groups, detail.syllables):
            expected_initial = syllable.initial if syllable.initial else None
            assert group.initial == expected_initial
            assert syllable.final in group.final_names
            if group.tone is not None:
                assert group.tone == syllable.tone


def test_parse_malformed_inputs(shipped_scheme):
    b = shipped_scheme.initial_map["b"].char
    tone = shipped_scheme.tone_map[1].char
    with pytest.raises(MalformedSyllableError):
        parse_braille_syllables(b, shipped_scheme)  # initial without final
    with pytest.raises(MalformedSyllableError):
        parse_braille_syllables(tone, shipped_scheme)  # bare tone cell
    with pytest.raises(MalformedSyllableError) as err:
        parse_braille_syllables("x", shipped_scheme)  # not braille
    assert err.value.offset == 0


def test_lattice_tone_marked_singleton(toy_lexicon, shipped_scheme):
    char = TOY_CHARS[0]  # reads ba1; unique under (b, a, 1)
    detail_lex = toy_lexicon
    braille = "".join(
        c.char for c in __import__("zhbraille").syllable_to_cells(
            PinyinSyllable("b", "a", 1), shipped_scheme, True))
    groups = parse_braille_syllables(braille, shipped_scheme)
    lattice = build_lattice(groups, detail_lex)
    assert [c for c, _ in lattice.positions[0].candidates] == [char]


def test_lattice_toneless_yi_over_100(shipped_scheme, shipped_lexicon):
    braille = shipped_scheme.final_map["i"].char
    groups = parse_braille_syllables(braille, shipped_scheme)
    lattice = build_lattice(groups, shipped_lexicon)
    assert len(lattice.positions[0].candidates) > 100


def test_toneless_candidates_are_union_of_toned(shipped_scheme, shipped_lexicon):
    final_i = shipped_scheme.final_map["i"].char
    toneless = build_lattice(parse_braille_syllables(final_i, shipped_scheme),
                             shipped_lexicon)
    union = set()
    for tone in (1, 2, 3, 4):
        toned = build_lattice(
            parse_braille_syllables(final_i + shipped_scheme.tone_map[tone].char,
                                    shipped_scheme), shipped_lexicon)
        union.update(c for c, _ in toned.positions[0].candidates)
    union.update(c for c, f in shipped_lexicon.homophones("", "i", 5).items())
    assert union == {c for c, _ in toneless.positions[0].candidates}


def test_lattice_undecodable_position(shipped_scheme):
    lex = load_lexicon("八\tba1\t10\n")
    braille = shipped_scheme.final_map["ong"].char
    with pytest.raises(UndecodablePositionError) as err:
        build_lattice(parse_braille_syllables(braille, shipped_scheme), lex)
    assert err.value.position == 0


def _random_lattice(rng, max_positions=8, max_candidates=6, alphabet="ABCDEFGHJK"):
    n = rng.randint(1, max_positions)
    positions = []
    for _ in range(n):
        size = rng.randint(1, max_candidates)
        chars = rng.sample(alphabet, size)
        positions.append(LatticePosition(
            tuple((c, rng.randint(1, 50)) for c in sorted(chars)), None, False))
    return Lattice(tuple(positions))


def _random_model(rng, order, alphabet="ABCDEFGHJK"):
    sentences = ["".join(rng.choice(alphabet) for _ in range(rng.randint(2, 9)))
                 for _ in range(rng.randint(3, 25))]
    return train_ngram(sentences, order=order, k=0.05)


def test_singleton_lattice_any_width(shipped_scheme):
    rng = random.Random(0)
    model = _random_model(rng, 2)
    positions = tuple(
        LatticePosition(((c, 3),), None, False) for c in "ABCA")
    lattice = Lattice(positions)
    for width in (1, 2, 100):
        assert decode(lattice, model, width) == "ABCA"


def test_three_position_lattice_matches_enumeration():
    rng = random.Random(9)
    model = _random_model(rng, 2)
    lattice = Lattice(tuple(
        LatticePosition(tuple((c, rng.randint(1, 9)) for c in rng.sample("ABCDEF", 4)),
                        None, False)
        for _ in range(3)))
    got_path, got_score = decode_with_score(lattice, model, 4 ** 3)
    want_path, want_score = enumerate_best_path(
        [list(p.candidates) for p in lattice.positions], model)
    assert got_path == want_path
    assert got_score == pytest.approx(want_score, abs=1e-12)


@pytest.mark.parametrize("order", [1, 2, 3])
def test_saturating_beam_equals_exhaustive(order):
    rng = random.Random(100 + order)
    for _ in range(30):
        model = _random_model(rng, order)
        lattice = _random_lattice(rng, max_positions=6, max_candidates=5)
        width = 1
        for p in lattice.positions:
            width *= len(p.candidates)
        got_path, got_score = decode_with_score(lattice, model, width)
        want_path, want_score = enumerate_best_path(
            [list(p.candidates) for p in lattice.positions], model)
        assert got_path == want_path
        assert got_score == pytest.approx(want_score, abs=1e-12)


@pytest.mark.parametrize("order", [1, 2, 3])
def test_score_monotone_in_beam_width(order):
    rng = random.Random(200 + order)
    for _ in range(25):
        model = _random_model(rng, order)
        lattice = _random_lattice(rng)
        last = None
        for width in (1, 2, 3, 4, 8, 16, 64, 10 ** 9):
            _, score = decode_with_score(lattice, model, width)
            if last is not None:
                assert score >= last - 1e-12
            last = score


def test_tie_break_lexicographically_smallest():
    # Uniform model and equal emissions: every path ties, smallest wins.
    model = train_ngram(["XY"], order=1, k=1.0)
    lattice = Lattice(tuple(
        LatticePosition((("B", 1), ("A", 1)), None, False) for _ in range(3)))
    assert decode(lattice, model, 100) == "AAA"


def test_full_tone_exact_recovery_unambiguous_lexicon(shipped_scheme, toy_lexicon):
    sentences = [text for _, text in make_toy_sentences(40, seed=21)]
    model = train_ngram(sentences, order=2, k=0.01)
    for idx, text in enumerate(sentences[:20]):
        detail = transcode_sentence_detailed(text, shipped_scheme, toy_lexicon,
                                             TonePolicy.full_tone(2), idx)
        groups = parse_braille_syllables(detail.braille, shipped_scheme)
        lattice = build_lattice(groups, toy_lexicon)
        assert decode(lattice, model, 8) == text


def test_ambiguity_ordering(shipped_scheme, shipped_lexicon, toned_words):
    # Mean candidate count: NoTone >= TenPercent >= FullTone.
    sentences = make_word_sentences_for_ambiguity(toned_words)
    means = {}
    for name, policy in (("full", TonePolicy.full_tone(4)),
                         ("ten", TonePolicy.ten_percent(4)),
                         ("none", TonePolicy.no_tone(4))):
        sizes = []
        for idx, text in sentences:
            detail = transcode_sentence_detailed(text, shipped_scheme, shipped_lexicon,
                                                 policy, idx)
            lattice = build_lattice(
                parse_braille_syllables(detail.braille, shipped_scheme), shipped_lexicon)
            sizes.extend(len(p.candidates) for p in lattice.positions)
        means[name] = sum(sizes) / len(sizes)
    assert means["none"] >= means["ten"] >= means["full"]


def make_word_sentences_for_ambiguity(words):
    from conftest import make_word_sentences

    return make_word_sentences(words, 50, 4, seed=6)


def test_bigram_beats_unigram_on_held_out(shipped_scheme, toy_lexicon):
    train = [text for _, text in make_toy_sentences(400, seed=30)]
    held_out = make_toy_sentences(200, seed=31)
    bigram = train_ngram(train, order=2, k=0.01)
    unigram = train_ngram(train, order=1, k=0.01)
    scores = {}
    for name, model in (("bigram", bigram), ("unigram", unigram)):
        total = 0.0
        for idx, text in held_out:
            detail = transcode_sentence_detailed(text, shipped_scheme, toy_lexicon,
                                                 TonePolicy.no_tone(8), idx)
            lattice = build_lattice(
                parse_braille_syllables(detail.braille, shipped_scheme), toy_lexicon)
            total += character_accuracy(decode(lattice, model, 8), text)
        scores[name] = total / len(held_out)
    assert scores["bigram"] >= scores["unigram"]
    assert scores["bigram"] > 0.6  # context genuinely resolves homophones


def test_character_accuracy_basics():
    assert character_accuracy("国家", "国家") == 1.0
    assert character_accuracy("AB", "CD") == 0.0
    assert character_accuracy("AB", "AC") == 0.5
    assert character_accuracy("", "") == 1.0
    assert character_accuracy("ABCD", "AB") == 0.5
