"""Chinese <-> braille transcoding toolkit.

Synthesizes tone-degraded parallel braille-Chinese corpora, decodes
braille back to Chinese through a homophone lattice scored by an n-gram
model, and evaluates translations with corpus BLEU.
"""

from importlib import resources

from .bleu import BleuReport, bleu, evaluate_split, tokenize_chinese
from .cells import BrailleCell, cell_to_char, char_to_cell, encode_cell
from .corpus import (
    DatasetSplit,
    ParallelPair,
    SplitStats,
    build_parallel_corpus,
    compute_stats,
    ingest_sentences,
    split_dataset,
)
from .lattice import (
    Lattice,
    build_lattice,
    character_accuracy,
    decode,
    decode_with_score,
    parse_braille_syllables,
)
from .lexicon import Lexicon, load_lexicon, load_lexicon_file
from .ngram import NgramModel, train_ngram
from .pinyin import PinyinSyllable, parse_pinyin
from .scheme import (
    BrailleScheme,
    cells_to_syllable_candidates,
    load_scheme,
    load_scheme_file,
    syllable_to_cells,
)
from .transcode import (
    TonePolicy,
    annotate_pinyin,
    count_retained_tones,
    parse_tone_policy,
    segment,
    transcode_sentence,
    transcode_sentence_detailed,
)

__version__ = "0.1.0"
DATA_FORMAT_VERSION = 1


def default_scheme_text() -> str:
    return resources.files("zhbraille").joinpath("data/scheme.tsv").read_text("utf-8")


def default_lexicon_text() -> str:
    return resources.files("zhbraille").joinpath("data/lexicon.tsv").read_text("utf-8")


def load_default_scheme() -> BrailleScheme:
    return load_scheme(default_scheme_text())


def load_default_lexicon() -> Lexicon:
    return load_lexicon(default_lexicon_text())
