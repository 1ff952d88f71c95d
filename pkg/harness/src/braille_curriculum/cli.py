"""Standalone harness command: run or inspect a curriculum plan."""

from __future__ import annotations

import argparse
import os
import sys

from .config import HarnessConfigError, desk_plan, paper_plan
from .evaluate import evaluate_checkpoint
from .train import run_curriculum


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="braille-curriculum",
        description="Three-stage curriculum fine-tuning over tone-degraded braille datasets.")
    parser.add_argument("--preset", choices=["paper", "desk"], required=True)
    parser.add_argument("--data-dir",
                        help="directory with full-tone/, no-tone/, 10per-tone/ datasets")
    parser.add_argument("--out", default=None)
    parser.add_argument("--steps", type=int, default=None,
                        help="per-stage step override for the desk preset")
    parser.add_argument("--dump-config", action="store_true",
                        help="print the resolved plan as JSON and exit")
    parser.add_argument("--evaluate", action="store_true",
                        help="after training, score the final checkpoint on the 10per-tone test set")
    args = parser.parse_args(argv)

    out = args.out or os.path.join("runs", args.preset)
    if args.preset == "paper":
        plan = paper_plan(out)
    else:
        plan = desk_plan(out, steps=args.steps or 50)

    if args.dump_config:
        print(plan.to_json(), end="")
        return 0

    if not args.data_dir:
        parser.error("--data-dir is required unless --dump-config is given")
    try:
        artifacts = run_curriculum(plan, args.data_dir)
        print(f"curriculum complete; checkpoints in {plan.output_dir}")
        if args.evaluate:
            record = evaluate_checkpoint(
                plan, artifacts["final"], artifacts["tokenizer"],
                os.path.join(args.data_dir, "10per-tone", "test.tsv"),
                os.path.join(plan.output_dir, "eval"))
            print(f"test BLEU {record['bleu']:.2f} "
                  f"({record['generation_errors']} generation errors)")
    except HarnessConfigError as exc:
        print(f"braille-curriculum: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
