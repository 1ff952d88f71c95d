"""Checkpoint evaluation: greedy decoding plus the toolkit's eval command.

Hypotheses are scored by shelling out to ``zhbraille eval --json``, so
the harness consumes the metric exactly as published rather than
reimplementing it.
"""

from __future__ import annotations

import json
import os
import subprocess

import torch

from .config import CurriculumPlan
from .model import TinyTranslator
from .tokenizer import CharTokenizer


def load_checkpoint(plan: CurriculumPlan, checkpoint_path, tokenizer_path):
    tokenizer = CharTokenizer.load(tokenizer_path)
    m = plan.model
    model = TinyTranslator(len(tokenizer), d_model=m.d_model, nhead=m.nhead,
                           num_layers=m.num_layers, dim_feedforward=m.dim_feedforward,
                           dropout=m.dropout)
    model.load_state_dict(torch.load(checkpoint_path, weights_only=True))
    model.eval()
    return tokenizer, model


def evaluate_checkpoint(plan: CurriculumPlan, checkpoint_path, tokenizer_path,
                        split_tsv, out_dir, max_sentences: int | None = None,
                        eval_command=("zhbraille",)) -> dict:
    """Greedy-decode a split file and score it with the primary eval CLI."""
    tokenizer, model = load_checkpoint(plan, checkpoint_path, tokenizer_path)
    os.makedirs(out_dir, exist_ok=True)
    hyp_path = os.path.join(out_dir, "eval.hyp.txt")
    ref_path = os.path.join(out_dir, "eval.ref.txt")
    err_path = os.path.join(out_dir, "eval.errors.log")

    stage = plan.stages[-1]
    hyps, refs, errors = [], [], []
    with open(split_tsv, encoding="utf-8") as fh:
        rows = [line.rstrip("\n").split("\t", 1) for line in fh if line.strip()]
    if max_sentences is not None:
        rows = rows[:max_sentences]
    for lineno, (braille, chinese) in enumerate(rows, start=1):
        refs.append(chinese)
        try:
            src = tokenizer.encode(braille, stage.source_max_len)
            ids = model.greedy_decode(src, tokenizer.bos_id, tokenizer.eos_id,
                                      tokenizer.pad_id, max_len=stage.target_max_len)
            hyps.append(tokenizer.decode(ids))
        except Exception as exc:  # per-sentence failures must not stop the run
            errors.append(f"line {lineno}: {exc}")
            hyps.append("")
    with open(hyp_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(hyps) + ("\n" if hyps else ""))
    with open(ref_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(refs) + ("\n" if refs else ""))
    with open(err_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(errors) + ("\n" if errors else ""))

    command = list(eval_command) + ["eval", "--hyp", hyp_path, "--ref", ref_path, "--json"]
    proc = subprocess.run(command, capture_output=True, text=True, check=True)
    report = json.loads(proc.stdout)
    record = {
        "checkpoint": os.path.basename(str(checkpoint_path)),
        "split": os.path.basename(str(split_tsv)),
        "sentences": len(rows),
        "generation_errors": len(errors),
        "bleu": report["score"],
    }
    metrics_path = os.path.join(plan.output_dir, "metrics.jsonl")
    if os.path.exists(metrics_path):
        with open(metrics_path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps({"event": "evaluation", **record}, sort_keys=True) + "\n")
    return record
