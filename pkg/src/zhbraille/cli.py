"""Command-line entry point.

Subcommands: transcode, gen-dataset, stats, train-lm, decode, eval,
pipeline. Exit codes: 0 success, 2 usage, 3 missing input file,
4 input parse/validation failure, 5 stage runtime failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from importlib import resources

from . import DATA_FORMAT_VERSION, __version__
from .bleu import bleu as corpus_bleu
from .bleu import evaluate_split, tokenize_chinese
from .corpus import (
    build_parallel_corpus,
    compute_stats,
    file_digest,
    ingest_sentences,
    read_tsv,
    render_stats_table,
    split_dataset,
    write_jsonl,
    write_tsv,
)
from .errors import ZhBrailleError
from .lattice import build_lattice, decode as decode_lattice, parse_braille_syllables
from .lexicon import load_lexicon_file
from .ngram import NgramModel, train_ngram
from .scheme import load_scheme_file
from .transcode import parse_tone_policy, transcode_sentence

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISSING_FILE = 3
EXIT_PARSE = 4
EXIT_STAGE = 5


def default_scheme_path() -> str:
    return str(resources.files("zhbraille").joinpath("data/scheme.tsv"))


def default_lexicon_path() -> str:
    return str(resources.files("zhbraille").joinpath("data/lexicon.tsv"))


@dataclass
class PipelineConfig:
    """Everything a pipeline run needs; round-trips via flat key=value text."""

    corpus: str
    scheme: str
    lexicon: str
    tone_policy: str = "p=0.1"
    tone_seed: int = 0
    split_seed: int = 0
    ratios: str = "8:1:1"
    order: int = 2
    k: float = 0.01
    beam: int = 8
    jsonl: bool = True

    def to_text(self) -> str:
        lines = []
        for key, value in asdict(self).items():
            lines.append(f"{key} = {value}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PipelineConfig":
        values = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ZhBrailleError(f"config line {lineno}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            values[key] = value
        return cls.from_dict(values)

    @classmethod
    def from_dict(cls, values: dict) -> "PipelineConfig":
        known = {f: t for f, t in cls.__annotations__.items()}
        kwargs = {}
        for key, value in values.items():
            if key not in known:
                raise ZhBrailleError(f"unknown config key {key!r}")
            if key in ("tone_seed", "split_seed", "order", "beam"):
                kwargs[key] = int(value)
            elif key == "k":
                kwargs[key] = float(value)
            elif key == "jsonl":
                kwargs[key] = value if isinstance(value, bool) else value.lower() == "true"
            else:
                kwargs[key] = str(value)
        return cls(**kwargs)

    def ratio_tuple(self) -> tuple[int, int, int]:
        parts = [int(p) for p in self.ratios.split(":")]
        if len(parts) != 3:
            raise ZhBrailleError(f"ratios {self.ratios!r} must have three parts")
        return tuple(parts)


def _read_lines(path) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        return [line.rstrip("\n") for line in fh]


def _load_tables(scheme_path, lexicon_path):
    lexicon = load_lexicon_file(lexicon_path)
    scheme = load_scheme_file(scheme_path, inventory=lexicon.inventory_names())
    return scheme, lexicon


def _corpus_chinese_lines(path) -> list[str]:
    """Training text for the LM: plain lines, or the chinese column of a TSV."""
    lines = []
    for line in _read_lines(path):
        if not line.strip():
            continue
        lines.append(line.split("\t")[-1] if "\t" in line else line)
    return lines


def cmd_transcode(args) -> int:
    if (args.text is None) == (args.infile is None):
        raise ZhBrailleError("give exactly one of --text or --in")
    scheme, lexicon = _load_tables(args.scheme, args.lexicon)
    policy = parse_tone_policy(args.tone_policy, args.seed)
    if args.text is not None:
        texts = [args.text]
    else:
        texts = [line for line in _read_lines(args.infile) if line.strip()]
    for offset, text in enumerate(texts):
        print(transcode_sentence(text, scheme, lexicon, policy,
                                 args.sentence_index + offset))
    return EXIT_OK


def _generate_dataset(config: PipelineConfig, out_dir):
    import os

    scheme, lexicon = _load_tables(config.scheme, config.lexicon)
    policy = parse_tone_policy(config.tone_policy, config.tone_seed)
    with open(config.corpus, encoding="utf-8") as fh:
        sentences = ingest_sentences(fh.read())
    build = build_parallel_corpus(sentences, scheme, lexicon, policy)
    splits = split_dataset(build.pairs, config.ratio_tuple(), config.split_seed)

    os.makedirs(out_dir, exist_ok=True)
    names = {"training": "train", "validation": "valid", "test": "test"}
    artifacts = {}
    for split in splits:
        stem = names[split.name]
        tsv = os.path.join(out_dir, f"{stem}.tsv")
        write_tsv(split.pairs, tsv)
        artifacts[f"{stem}.tsv"] = file_digest(tsv)
        if config.jsonl:
            jsonl = os.path.join(out_dir, f"{stem}.jsonl")
            write_jsonl(split.pairs, jsonl)
            artifacts[f"{stem}.jsonl"] = file_digest(jsonl)

    stats_text = render_stats_table([compute_stats(s) for s in splits])
    stats_path = os.path.join(out_dir, "stats.txt")
    with open(stats_path, "w", encoding="utf-8") as fh:
        fh.write(stats_text)
    artifacts["stats.txt"] = file_digest(stats_path)

    manifest = {
        "format_version": DATA_FORMAT_VERSION,
        "toolkit_version": __version__,
        "config": asdict(config),
        "inputs": {
            "corpus": file_digest(config.corpus),
            "scheme": file_digest(config.scheme),
            "lexicon": file_digest(config.lexicon),
        },
        "counters": build.counters,
        "split_sizes": {s.name: len(s) for s in splits},
        "artifacts": artifacts,
    }
    with open(os.path.join(out_dir, "manifest.json"), "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, ensure_ascii=False, sort_keys=True, indent=2)
        fh.write("\n")
    return splits, manifest


def cmd_gen_dataset(args) -> int:
    config = _config_from_args(args)
    _, manifest = _generate_dataset(config, args.out)
    counters = manifest["counters"]
    print(f"wrote {args.out}: sizes {manifest['split_sizes']}, "
          f"skipped {counters['skipped_unknown_character']} unknown-character sentences")
    return EXIT_OK


def cmd_stats(args) -> int:
    import os

    from .corpus import DatasetSplit, ParallelPair

    def split_from_tsv(name, path):
        rows = read_tsv(path)
        pairs = tuple(ParallelPair(b, z, i) for i, (b, z) in enumerate(rows))
        return DatasetSplit(name, pairs)

    if args.data_dir:
        splits = [
            split_from_tsv(name, os.path.join(args.data_dir, f"{stem}.tsv"))
            for name, stem in (("training", "train"), ("validation", "valid"), ("test", "test"))
        ]
    else:
        splits = [split_from_tsv("all", args.file)]
    print(render_stats_table([compute_stats(s) for s in splits]), end="")
    return EXIT_OK


def cmd_train_lm(args) -> int:
    sentences = _corpus_chinese_lines(args.corpus)
    model = train_ngram(sentences, args.order, args.k)
    model.save(args.out)
    print(f"wrote {args.out}: order {model.order}, vocab {model.vocab_size}, "
          f"{len(model.ngram_counts)} ngrams")
    return EXIT_OK


def cmd_decode(args) -> int:
    scheme, lexicon = _load_tables(args.scheme, args.lexicon)
    model = NgramModel.load(args.model)
    outputs = []
    for lineno, line in enumerate(_read_lines(args.infile), start=1):
        if not line.strip():
            outputs.append("")
            continue
        try:
            groups = parse_braille_syllables(line, scheme)
            lattice = build_lattice(groups, lexicon)
            outputs.append(decode_lattice(lattice, model, args.beam))
        except ZhBrailleError as exc:
            raise ZhBrailleError(f"line {lineno}: {exc}") from exc
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(outputs) + ("\n" if outputs else ""))
    print(f"decoded {len(outputs)} lines -> {args.out}")
    return EXIT_OK


def cmd_eval(args) -> int:
    hyp = _read_lines(args.hyp)
    ref = _read_lines(args.ref)
    report, diagnostics = evaluate_split(hyp, ref, max_n=args.max_n)
    if args.json:
        payload = report.as_dict()
        payload["sentence_scores"] = diagnostics
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    else:
        precisions = " ".join(f"p{i + 1}={p:.4f}" for i, p in enumerate(report.precisions))
        print(f"BLEU = {report.score:.2f} (BP {report.brevity_penalty:.4f}, {precisions})")
    return EXIT_OK


def cmd_pipeline(args) -> int:
    import os

    config = _config_from_args(args)
    out = args.out
    splits, manifest = _generate_dataset(config, out)
    training, validation, test = splits

    lm_path = os.path.join(out, "lm.json")
    model = train_ngram([p.chinese for p in training.pairs], config.order, config.k)
    model.save(lm_path)

    scheme, lexicon = _load_tables(config.scheme, config.lexicon)
    hyp_path = os.path.join(out, "test.hyp.txt")
    ref_path = os.path.join(out, "test.ref.txt")
    hypotheses = []
    for pair in test.pairs:
        groups = parse_braille_syllables(pair.braille, scheme)
        lattice = build_lattice(groups, lexicon)
        hypotheses.append(decode_lattice(lattice, model, config.beam))
    with open(hyp_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(hypotheses) + ("\n" if hypotheses else ""))
    with open(ref_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(p.chinese for p in test.pairs) + ("\n" if test.pairs else ""))

    report = corpus_bleu([tokenize_chinese(h) for h in hypotheses],
                         [tokenize_chinese(p.chinese) for p in test.pairs])

    manifest["lm"] = {"path": "lm.json", "digest": file_digest(lm_path)}
    manifest["artifacts"]["test.hyp.txt"] = file_digest(hyp_path)
    manifest["artifacts"]["test.ref.txt"] = file_digest(ref_path)
    manifest["bleu"] = report.as_dict()
    with open(os.path.join(out, "pipeline.json"), "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, ensure_ascii=False, sort_keys=True, indent=2)
        fh.write("\n")
    print(f"pipeline done: BLEU {report.score:.2f} on {len(test.pairs)} test sentences")
    return EXIT_OK


_CONFIG_FLAGS = ("corpus", "scheme", "lexicon", "tone_policy", "tone_seed",
                 "split_seed", "ratios", "order", "k", "beam", "jsonl")


def _config_from_args(args) -> PipelineConfig:
    """Config file (or manifest) values, overridden by explicit flags."""
    base: dict = {}
    if getattr(args, "from_manifest", None):
        with open(args.from_manifest, encoding="utf-8") as fh:
            base = json.load(fh)["config"]
    elif getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            base = asdict(PipelineConfig.from_text(fh.read()))

    for key in _CONFIG_FLAGS:
        value = getattr(args, key, None)
        if value is not None:
            base[key] = value
    base.setdefault("scheme", default_scheme_path())
    base.setdefault("lexicon", default_lexicon_path())
    if "corpus" not in base:
        raise ZhBrailleError("no corpus given (flag --corpus or config file)")
    return PipelineConfig.from_dict(base)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zhbraille",
        description="Chinese <-> braille transcoding, corpus synthesis, decoding, BLEU.")
    parser.add_argument("--version", action="version",
                        version=f"zhbraille {__version__} (file formats v{DATA_FORMAT_VERSION})")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tables(p):
        p.add_argument("--scheme", default=default_scheme_path())
        p.add_argument("--lexicon", default=default_lexicon_path())

    p = sub.add_parser("transcode", help="Chinese text -> braille")
    add_tables(p)
    p.add_argument("--text")
    p.add_argument("--in", dest="infile")
    p.add_argument("--tone-policy", default="full")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sentence-index", type=int, default=0)
    p.set_defaults(func=cmd_transcode)

    p = sub.add_parser("gen-dataset", help="build parallel dataset with 8:1:1 split")
    p.add_argument("--corpus", required=True)
    p.add_argument("--scheme")
    p.add_argument("--lexicon")
    p.add_argument("--tone-policy", dest="tone_policy")
    p.add_argument("--seed", dest="tone_seed", type=int)
    p.add_argument("--split-seed", dest="split_seed", type=int)
    p.add_argument("--ratios")
    p.add_argument("--no-jsonl", dest="jsonl", action="store_false", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen_dataset)

    p = sub.add_parser("stats", help="length statistics of a dataset")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--data-dir")
    group.add_argument("--file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("train-lm", help="train a character n-gram model")
    p.add_argument("--corpus", required=True)
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--k", type=float, default=0.01)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_train_lm)

    p = sub.add_parser("decode", help="braille lines -> Chinese lines")
    add_tables(p)
    p.add_argument("--model", required=True)
    p.add_argument("--beam", type=int, default=8)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("eval", help="corpus BLEU of hypotheses vs references")
    p.add_argument("--hyp", required=True)
    p.add_argument("--ref", required=True)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("pipeline", help="gen-dataset + train-lm + decode + eval")
    p.add_argument("--corpus")
    p.add_argument("--scheme")
    p.add_argument("--lexicon")
    p.add_argument("--tone-policy", dest="tone_policy")
    p.add_argument("--seed", dest="tone_seed", type=int)
    p.add_argument("--split-seed", dest="split_seed", type=int)
    p.add_argument("--ratios")
    p.add_argument("--order", type=int)
    p.add_argument("--k", type=float)
    p.add_argument("--beam", type=int)
    p.add_argument("--config")
    p.add_argument("--from-manifest")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_pipeline)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"zhbraille {args.command}: missing file: {exc.filename or exc}", file=sys.stderr)
        return EXIT_MISSING_FILE
    except ZhBrailleError as exc:
        print(f"zhbraille {args.command}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, OSError) as exc:
        print(f"zhbraille {args.command} failed: {exc}", file=sys.stderr)
        return EXIT_STAGE


if __name__ == "__main__":
    sys.exit(main())
