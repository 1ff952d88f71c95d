"""Counter-based randomness for tone-retention decisions.

Every draw is a pure function of (seed, sentence_index, syllable_index),
so sentences can be processed in any order or in parallel without
changing a single decision.
"""

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _splitmix64(x: int) -> int:
    x = (x + _GOLDEN) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def counter_uniform(seed: int, sentence_index: int, syllable_index: int) -> float:
    """Deterministic uniform draw in [0, 1) keyed by the three counters."""
    h = _splitmix64(seed & _MASK64)
    h = _splitmix64(h ^ (sentence_index & _MASK64))
    h = _splitmix64(h ^ (syllable_index & _MASK64))
    return h / 2**64
