"""Desk-scale curriculum fine-tuning harness for braille-to-Chinese translation."""

from .config import CurriculumPlan, ModelConfig, StageConfig, desk_plan, paper_plan
from .evaluate import evaluate_checkpoint
from .model import TinyTranslator, weights_digest
from .tokenizer import BRAILLE_TOKENS, CharTokenizer, extend_vocabulary
from .train import run_curriculum

__version__ = "0.1.0"
