"""Secondary-component acceptance criteria, one PASS/FAIL line each."""

import json
import subprocess
import time
from contextlib import contextmanager

import torch

from braille_curriculum.config import desk_plan, paper_plan
from braille_curriculum.model import TinyTranslator, weights_digest
from braille_curriculum.tokenizer import CharTokenizer, extend_vocabulary
from braille_curriculum.train import run_curriculum
from braille_curriculum.evaluate import evaluate_checkpoint


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"FAIL: {name}")
        raise
    print(f"PASS: {name}")


def test_vocabulary_extension_criterion():
    with criterion("vocabulary extension: +63 tokens, +63 rows, ids preserved, idempotent"):
        tok = CharTokenizer.fit(["今天天气很好", "我们喜欢学习"])
        model = TinyTranslator(len(tok))
        base = dict(tok.token_to_id)
        rows_before = model.embedding.num_embeddings
        extend_vocabulary(tok, model)
        assert len(tok) == len(base) + 63
        assert model.embedding.num_embeddings == rows_before + 63
        for token, idx in base.items():
            assert tok.token_to_id[token] == idx
        size = len(tok)
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            extend_vocabulary(tok, model)
        assert len(tok) == size
        assert model.embedding.num_embeddings == size


def test_desk_curriculum_criterion(data_dir, tmp_path):
    with criterion("desk curriculum: 3x50 steps complete, stage-1 val loss drops, "
                   "checkpoints chain, paper preset matches the published table"):
        started = time.monotonic()
        plan = desk_plan(str(tmp_path / "run"), steps=50)
        artifacts = run_curriculum(plan, str(data_dir))
        elapsed = time.monotonic() - started
        assert elapsed < 30 * 60

        records = [json.loads(line) for line in
                   open(artifacts["metrics"], encoding="utf-8")]

        # stages appear strictly in curriculum order
        stage_starts = [r["stage"] for r in records if r.get("event") == "stage_start"]
        assert stage_starts == ["full-tone", "no-tone", "10per-tone"]

        # stage-1 validation loss decreases from step 0 to step 50
        val = {r["step"]: r["loss"] for r in records
               if r.get("split") == "valid" and r.get("stage") == "full-tone"}
        assert val[50] < val[0]

        # checkpoint chaining: stage k final digest == stage k+1 init digest
        finals = {r["stage_num"]: r["final_digest"] for r in records
                  if r.get("event") == "stage_end"}
        inits = {r["stage_num"]: r["init_digest"] for r in records
                 if r.get("event") == "stage_start"}
        assert finals[1] == inits[2]
        assert finals[2] == inits[3]

        # recompute digests from the saved checkpoint files
        tok = CharTokenizer.load(artifacts["tokenizer"])
        for stage_num, variant in ((1, "full-tone"), (2, "no-tone"), (3, "10per-tone")):
            model = TinyTranslator(len(tok))
            model.load_state_dict(torch.load(
                artifacts["checkpoints"][variant], weights_only=True))
            assert weights_digest(model) == finals[stage_num]

        # the paper preset serializes exactly to the published values
        paper = json.loads(paper_plan().to_json())
        stages = paper["stages"]
        assert [s["steps"] for s in stages] == [30_000, 20_000, 10_000]
        assert [s["learning_rate"] for s in stages] == [5e-5, 2.5e-5, 1e-5]
        assert all(s["batch_size"] == 72 for s in stages)
        assert all(s["schedule"] == "cosine" for s in stages)
        assert all(s["source_max_len"] == 285 and s["target_max_len"] == 285
                   for s in stages)
        assert paper["optimizer"] == "AdamW"

        # config.lock round-trips the resolved desk plan
        lock = json.loads(open(artifacts["config_lock"], encoding="utf-8").read())
        assert [s["steps"] for s in lock["stages"]] == [50, 50, 50]


def test_evaluation_plumbing_criterion(data_dir, tmp_path):
    with criterion("evaluation plumbing: refs vs refs -> 100; checkpoint records a score"):
        refs = data_dir / "10per-tone" / "test.tsv"
        ref_lines = [line.split("\t", 1)[1] for line in
                     refs.read_text(encoding="utf-8").splitlines()]
        ref_path = tmp_path / "refs.txt"
        ref_path.write_text("\n".join(ref_lines) + "\n", encoding="utf-8")
        proc = subprocess.run(
            ["zhbraille", "eval", "--hyp", str(ref_path), "--ref", str(ref_path), "--json"],
            check=True, capture_output=True, text=True)
        assert json.loads(proc.stdout)["score"] == 100.0

        plan = desk_plan(str(tmp_path / "run2"), steps=10)
        artifacts = run_curriculum(plan, str(data_dir))
        record = evaluate_checkpoint(
            plan, artifacts["final"], artifacts["tokenizer"],
            str(refs), str(tmp_path / "eval-out"), max_sentences=10)
        assert 0.0 <= record["bleu"] <= 100.0
        assert record["generation_errors"] == 0
        metrics = [json.loads(line) for line in
                   open(artifacts["metrics"], encoding="utf-8")]
        assert any(r.get("event") == "evaluation" for r in metrics)
