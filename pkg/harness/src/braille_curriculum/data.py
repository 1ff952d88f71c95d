"""Dataset-variant loading and batching over the transcoder's TSV files."""

from __future__ import annotations

import os
import random

import torch

from .config import VARIANTS, HarnessConfigError
from .tokenizer import CharTokenizer


def check_data_dir(data_dir) -> None:
    """All three variants with train/valid/test must exist before training."""
    missing = []
    for variant in VARIANTS:
        for stem in ("train", "valid", "test"):
            path = os.path.join(data_dir, variant, f"{stem}.tsv")
            if not os.path.exists(path):
                missing.append(path)
    if missing:
        raise HarnessConfigError(f"missing dataset files: {missing}")


def read_pairs(data_dir, variant: str, stem: str) -> list[tuple[str, str]]:
    path = os.path.join(data_dir, variant, f"{stem}.tsv")
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            braille, chinese = line.split("\t", 1)
            pairs.append((braille, chinese))
    return pairs


def all_chinese_text(data_dir) -> list[str]:
    """Target-side text of every variant's training split (tokenizer fitting)."""
    texts = []
    for variant in VARIANTS:
        texts.extend(z for _, z in read_pairs(data_dir, variant, "train"))
    return texts


def make_batch(pairs, tokenizer: CharTokenizer, rng: random.Random,
               batch_size: int, src_max: int, tgt_max: int):
    """Random batch of (src, tgt_in, tgt_out) id tensors, padded."""
    chosen = [pairs[rng.randrange(len(pairs))] for _ in range(batch_size)]
    return collate(chosen, tokenizer, src_max, tgt_max)


def collate(chosen, tokenizer: CharTokenizer, src_max: int, tgt_max: int):
    pad = tokenizer.pad_id
    bos = tokenizer.bos_id
    src_ids = [tokenizer.encode(b, src_max) for b, _ in chosen]
    tgt_ids = [tokenizer.encode(z, tgt_max) for _, z in chosen]
    src_len = max(len(s) for s in src_ids)
    tgt_len = max(len(t) for t in tgt_ids)
    src = torch.full((len(chosen), src_len), pad, dtype=torch.long)
    tgt_in = torch.full((len(chosen), tgt_len), pad, dtype=torch.long)
    tgt_out = torch.full((len(chosen), tgt_len), pad, dtype=torch.long)
    for i, (s, t) in enumerate(zip(src_ids, tgt_ids)):
        src[i, :len(s)] = torch.tensor(s)
        tgt_in[i, 0] = bos
        tgt_in[i, 1:len(t)] = torch.tensor(t[:-1])
        tgt_out[i, :len(t)] = torch.tensor(t)
    return src, tgt_in, tgt_out
