"""Three-stage curriculum training loop.

Each stage initializes from the previous stage's final weights (digest-
chained), runs its step budget with AdamW under a cosine schedule, and
appends train/validation losses to metrics.jsonl. Optimizer state does
not carry across stages.
"""

from __future__ import annotations

import json
import math
import os
import random

import torch
from torch import nn

from .config import CurriculumPlan, HarnessConfigError
from .data import check_data_dir, make_batch, read_pairs, collate, all_chinese_text
from .model import TinyTranslator, weights_digest
from .tokenizer import CharTokenizer, extend_vocabulary


class MetricsLog:
    def __init__(self, path):
        self.path = path
        open(path, "w", encoding="utf-8").close()

    def append(self, **record):
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")


def _cosine_lambda(total_steps: int):
    def factor(step: int) -> float:
        return 0.5 * (1.0 + math.cos(math.pi * min(step, total_steps) / total_steps))
    return factor


@torch.no_grad()
def validation_loss(model, tokenizer, pairs, stage, rng_seed: int = 0,
                    max_batches: int = 4) -> float:
    model.eval()
    criterion = nn.CrossEntropyLoss(ignore_index=tokenizer.pad_id)
    rng = random.Random(rng_seed)
    order = list(range(len(pairs)))
    rng.shuffle(order)
    losses = []
    for b in range(max_batches):
        chunk = [pairs[i] for i in
                 order[b * stage.batch_size:(b + 1) * stage.batch_size]]
        if not chunk:
            break
        src, tgt_in, tgt_out = collate(chunk, tokenizer,
                                       stage.source_max_len, stage.target_max_len)
        logits = model(src, tgt_in, tokenizer.pad_id)
        losses.append(float(criterion(logits.flatten(0, 1), tgt_out.flatten())))
    return sum(losses) / len(losses)


def build_model_and_tokenizer(plan: CurriculumPlan, data_dir):
    """Fit the base tokenizer on Chinese text, then add braille tokens."""
    if plan.base_checkpoint not in ("random-tiny",):
        raise HarnessConfigError(
            f"base checkpoint {plan.base_checkpoint!r} is not available at desk "
            f"scale; the paper plan records the published recipe, run the desk plan")
    torch.manual_seed(plan.seed)
    tokenizer = CharTokenizer.fit(all_chinese_text(data_dir))
    m = plan.model
    model = TinyTranslator(len(tokenizer), d_model=m.d_model, nhead=m.nhead,
                           num_layers=m.num_layers, dim_feedforward=m.dim_feedforward,
                           dropout=m.dropout)
    extend_vocabulary(tokenizer, model)
    return tokenizer, model


def run_curriculum(plan: CurriculumPlan, data_dir) -> dict:
    """Run the three stages in order; returns paths of emitted artifacts."""
    check_data_dir(data_dir)
    out = plan.output_dir
    os.makedirs(out, exist_ok=True)
    plan.write_lock(os.path.join(out, "config.lock"))
    metrics = MetricsLog(os.path.join(out, "metrics.jsonl"))

    tokenizer, model = build_model_and_tokenizer(plan, data_dir)
    tokenizer.save(os.path.join(out, "tokenizer.json"))
    criterion = nn.CrossEntropyLoss(ignore_index=tokenizer.pad_id)

    checkpoints = {}
    for stage_num, stage in enumerate(plan.stages, start=1):
        train_pairs = read_pairs(data_dir, stage.variant, "train")
        valid_pairs = read_pairs(data_dir, stage.variant, "valid")
        metrics.append(event="stage_start", stage=stage.variant,
                       stage_num=stage_num, init_digest=weights_digest(model))

        # fresh optimizer per stage; only weights chain across stages
        optimizer = torch.optim.AdamW(model.parameters(), lr=stage.learning_rate)
        scheduler = torch.optim.lr_scheduler.LambdaLR(
            optimizer, _cosine_lambda(stage.steps))
        rng = random.Random(plan.seed * 1000 + stage_num)

        val0 = validation_loss(model, tokenizer, valid_pairs, stage)
        metrics.append(stage=stage.variant, step=0, split="valid", loss=val0,
                       lr=stage.learning_rate)

        for step in range(1, stage.steps + 1):
            model.train()
            src, tgt_in, tgt_out = make_batch(
                train_pairs, tokenizer, rng, stage.batch_size,
                stage.source_max_len, stage.target_max_len)
            logits = model(src, tgt_in, tokenizer.pad_id)
            loss = criterion(logits.flatten(0, 1), tgt_out.flatten())
            optimizer.zero_grad()
            loss.backward()
            optimizer.step()
            scheduler.step()
            lr_now = scheduler.get_last_lr()[0]
            if plan.eval_every and step % plan.eval_every == 0:
                metrics.append(stage=stage.variant, step=step, split="train",
                               loss=float(loss.detach()), lr=lr_now)

        val_end = validation_loss(model, tokenizer, valid_pairs, stage)
        metrics.append(stage=stage.variant, step=stage.steps, split="valid",
                       loss=val_end, lr=scheduler.get_last_lr()[0])

        final_digest = weights_digest(model)
        path = os.path.join(out, f"stage{stage_num}.pt")
        torch.save(model.state_dict(), path)
        checkpoints[stage.variant] = path
        metrics.append(event="stage_end", stage=stage.variant,
                       stage_num=stage_num, final_digest=final_digest,
                       checkpoint=os.path.basename(path))

    final_path = os.path.join(out, "final.pt")
    torch.save(model.state_dict(), final_path)
    return {
        "config_lock": os.path.join(out, "config.lock"),
        "metrics": metrics.path,
        "tokenizer": os.path.join(out, "tokenizer.json"),
        "checkpoints": checkpoints,
        "final": final_path,
    }
