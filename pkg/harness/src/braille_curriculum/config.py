"""Stage and curriculum configuration with the published presets.

Stage order is fixed: full-tone -> no-tone -> 10per-tone, with strictly
decreasing learning rates. The paper preset records the published
recipe verbatim; the desk preset is the same curriculum scaled down to
a tiny model that trains on a laptop CPU in minutes.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

VARIANTS = ("full-tone", "no-tone", "10per-tone")


class HarnessConfigError(Exception):
    pass


@dataclass(frozen=True)
class StageConfig:
    variant: str
    steps: int
    batch_size: int
    learning_rate: float
    schedule: str
    source_max_len: int
    target_max_len: int

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise HarnessConfigError(f"unknown dataset variant {self.variant!r}")
        if self.steps <= 0 or self.batch_size <= 0 or self.learning_rate <= 0:
            raise HarnessConfigError("steps, batch size and learning rate must be positive")


@dataclass(frozen=True)
class ModelConfig:
    d_model: int = 64
    nhead: int = 2
    num_layers: int = 2
    dim_feedforward: int = 128
    dropout: float = 0.1


@dataclass(frozen=True)
class CurriculumPlan:
    name: str
    stages: tuple[StageConfig, StageConfig, StageConfig]
    optimizer: str
    base_checkpoint: str
    output_dir: str
    seed: int = 0
    eval_every: int = 0  # 0: only at stage start/end
    model: ModelConfig = field(default_factory=ModelConfig)

    def __post_init__(self):
        if tuple(s.variant for s in self.stages) != VARIANTS:
            raise HarnessConfigError(
                f"stage order must be {VARIANTS}, got {[s.variant for s in self.stages]}")
        lrs = [s.learning_rate for s in self.stages]
        if not (lrs[0] > lrs[1] > lrs[2]):
            raise HarnessConfigError(f"learning rates must strictly decrease, got {lrs}")
        if self.optimizer.lower() != "adamw":
            raise HarnessConfigError(f"unsupported optimizer {self.optimizer!r}")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"

    def write_lock(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())

    @classmethod
    def from_json(cls, text: str) -> "CurriculumPlan":
        raw = json.loads(text)
        stages = tuple(StageConfig(**s) for s in raw.pop("stages"))
        model = ModelConfig(**raw.pop("model"))
        return cls(stages=stages, model=model, **raw)


def paper_plan(output_dir: str = "runs/paper") -> CurriculumPlan:
    """The published fine-tuning recipe, recorded verbatim."""
    common = dict(batch_size=72, schedule="cosine", source_max_len=285, target_max_len=285)
    return CurriculumPlan(
        name="paper",
        stages=(
            StageConfig(variant="full-tone", steps=30_000, learning_rate=5e-5, **common),
            StageConfig(variant="no-tone", steps=20_000, learning_rate=2.5e-5, **common),
            StageConfig(variant="10per-tone", steps=10_000, learning_rate=1e-5, **common),
        ),
        optimizer="AdamW",
        base_checkpoint="mt5-small",
        output_dir=output_dir,
    )


def desk_plan(output_dir: str = "runs/desk", steps: int = 50) -> CurriculumPlan:
    """Same curriculum at desk scale: tiny random-init model, 50-step stages."""
    common = dict(batch_size=8, schedule="cosine", source_max_len=64, target_max_len=64)
    return CurriculumPlan(
        name="desk",
        stages=(
            StageConfig(variant="full-tone", steps=steps, learning_rate=3e-3, **common),
            StageConfig(variant="no-tone", steps=steps, learning_rate=1.5e-3, **common),
            StageConfig(variant="10per-tone", steps=steps, learning_rate=6e-4, **common),
        ),
        optimizer="AdamW",
        base_checkpoint="random-tiny",
        output_dir=output_dir,
        eval_every=25,
    )
