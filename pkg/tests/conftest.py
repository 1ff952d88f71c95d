import random

import pytest

from zhbraille import (
    load_default_lexicon,
    load_default_scheme,
    load_lexicon,
)

# 8 toneless pronunciations x 4 tones; exactly one character per
# (initial, final, tone), so tone-marked braille decodes uniquely while
# toneless braille faces a four-way homophone choice at every position.
TOY_PAIRS = [("b", "a"), ("m", "a"), ("d", "a"), ("l", "a"),
             ("b", "i"), ("m", "i"), ("d", "i"), ("l", "i")]
TOY_CHARS = [chr(0x3400 + k) for k in range(len(TOY_PAIRS) * 4)]


def toy_lexicon_text() -> str:
    rows = []
    k = 0
    for initial, final in TOY_PAIRS:
        for tone in (1, 2, 3, 4):
            rows.append(f"{TOY_CHARS[k]}\t{initial}{final}{tone}\t100")
            k += 1
    return "\n".join(rows) + "\n"


def make_toy_sentences(n_sentences: int, seed: int) -> list[tuple[int, str]]:
    """Markov chains over the toy characters: each character strongly
    prefers one successor, so context carries most of the information."""
    rng = random.Random(seed)
    chars = TOY_CHARS
    succ = {c: chars[(i * 7 + 3) % len(chars)] for i, c in enumerate(chars)}
    sentences = []
    for idx in range(n_sentences):
        length = rng.randint(8, 14)
        current = rng.choice(chars)
        out = [current]
        for _ in range(length - 1):
            current = succ[current] if rng.random() < 0.7 else rng.choice(chars)
            out.append(current)
        sentences.append((idx + 1, "".join(out)))
    return sentences


def leipzig_text(sentences) -> str:
    return "\n".join(f"{idx}\t{text}" for idx, text in sentences) + "\n"


@pytest.fixture(scope="session")
def shipped_scheme():
    return load_default_scheme()


@pytest.fixture(scope="session")
def shipped_lexicon():
    return load_default_lexicon()


@pytest.fixture(scope="session")
def toy_lexicon():
    return load_lexicon(toy_lexicon_text())


@pytest.fixture(scope="session")
def toned_words(shipped_lexicon):
    """Shipped lexicon words whose syllables all carry tones 1-4."""
    words = [
        w for w, syls in sorted(shipped_lexicon.word_pron.items())
        if len(w) > 1 and all(s.tone in (1, 2, 3, 4) for s in syls)
    ]
    assert len(words) > 100
    return words


def make_word_sentences(words, n_sentences: int, words_per_sentence: int,
                        seed: int) -> list[tuple[int, str]]:
    rng = random.Random(seed)
    return [
        (idx + 1, "".join(rng.choice(words) for _ in range(words_per_sentence)))
        for idx in range(n_sentences)
    ]
