import random
import subprocess

import pytest

# Deliberately homophonous toy data: one character per (initial, final,
# tone) over 8 toneless pronunciations, Markov-chained so context
# carries the information tones would.
PAIRS = [("b", "a"), ("m", "a"), ("d", "a"), ("l", "a"),
         ("b", "i"), ("m", "i"), ("d", "i"), ("l", "i")]
CHARS = [chr(0x3400 + k) for k in range(len(PAIRS) * 4)]
POLICY_DIRS = {"full": "full-tone", "none": "no-tone", "p=0.1": "10per-tone"}


def toy_lexicon_text() -> str:
    rows = []
    k = 0
    for initial, final in PAIRS:
        for tone in (1, 2, 3, 4):
            rows.append(f"{CHARS[k]}\t{initial}{final}{tone}\t100")
            k += 1
    return "\n".join(rows) + "\n"


def toy_corpus_text(n_sentences: int, seed: int) -> str:
    rng = random.Random(seed)
    succ = {c: CHARS[(i * 7 + 3) % len(CHARS)] for i, c in enumerate(CHARS)}
    lines = []
    for idx in range(1, n_sentences + 1):
        length = rng.randint(8, 14)
        current = rng.choice(CHARS)
        sentence = [current]
        for _ in range(length - 1):
            current = succ[current] if rng.random() < 0.7 else rng.choice(CHARS)
            sentence.append(current)
        lines.append(f"{idx}\t{''.join(sentence)}")
    return "\n".join(lines) + "\n"


@pytest.fixture(scope="session")
def data_dir(tmp_path_factory):
    """Three aligned dataset variants built by the transcoder toolkit CLI."""
    root = tmp_path_factory.mktemp("curriculum-data")
    lexicon = root / "toy_lexicon.tsv"
    lexicon.write_text(toy_lexicon_text(), encoding="utf-8")
    corpus = root / "toy_corpus.tsv"
    corpus.write_text(toy_corpus_text(300, seed=4242), encoding="utf-8")
    for policy, variant in POLICY_DIRS.items():
        subprocess.run(
            ["zhbraille", "gen-dataset", "--corpus", str(corpus),
             "--lexicon", str(lexicon), "--tone-policy", policy,
             "--seed", "5", "--split-seed", "9",
             "--out", str(root / variant)],
            check=True, capture_output=True, text=True)
    return root
