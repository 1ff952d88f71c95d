"""Character tokenizer with braille special-token extension.

The base vocabulary is fitted on Chinese text only, mirroring a
pretrained multilingual tokenizer that has never seen braille. The 63
non-blank braille patterns (U+2801..U+283F) are then added as special
tokens; the blank pattern U+2800 is excluded because braille word
spacing travels through the ordinary space token.
"""

from __future__ import annotations

import json
import warnings

PAD, BOS, EOS, UNK = "<pad>", "<s>", "</s>", "<unk>"
SPECIALS = (PAD, BOS, EOS, UNK)

BRAILLE_TOKENS = tuple(chr(cp) for cp in range(0x2801, 0x2840))  # 63 patterns


class CharTokenizer:
    def __init__(self, tokens):
        self.id_to_token = list(tokens)
        self.token_to_id = {t: i for i, t in enumerate(self.id_to_token)}
        if len(self.token_to_id) != len(self.id_to_token):
            raise ValueError("duplicate tokens in vocabulary")

    @classmethod
    def fit(cls, texts) -> "CharTokenizer":
        chars = set()
        for text in texts:
            chars.update(text)
        chars.add(" ")
        return cls(list(SPECIALS) + sorted(chars))

    def __len__(self) -> int:
        return len(self.id_to_token)

    @property
    def pad_id(self) -> int:
        return self.token_to_id[PAD]

    @property
    def bos_id(self) -> int:
        return self.token_to_id[BOS]

    @property
    def eos_id(self) -> int:
        return self.token_to_id[EOS]

    def add_tokens(self, tokens) -> int:
        added = 0
        for token in tokens:
            if token not in self.token_to_id:
                self.token_to_id[token] = len(self.id_to_token)
                self.id_to_token.append(token)
                added += 1
        return added

    def encode(self, text: str, max_len: int | None = None) -> list[int]:
        unk = self.token_to_id[UNK]
        ids = [self.token_to_id.get(c, unk) for c in text]
        if max_len is not None:
            ids = ids[: max_len - 1]
        return ids + [self.eos_id]

    def decode(self, ids) -> str:
        out = []
        for i in ids:
            token = self.id_to_token[int(i)]
            if token == EOS:
                break
            if token in (PAD, BOS, UNK):
                continue
            out.append(token)
        return "".join(out)

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump({"tokens": self.id_to_token}, fh, ensure_ascii=False)

    @classmethod
    def load(cls, path) -> "CharTokenizer":
        with open(path, encoding="utf-8") as fh:
            return cls(json.load(fh)["tokens"])


def extend_vocabulary(tokenizer: CharTokenizer, model):
    """Add the 63 braille tokens and grow the embedding rows to match.

    Pre-existing token ids never move (tokens are appended). Applying
    twice warns and changes nothing.
    """
    before = len(tokenizer)
    added = tokenizer.add_tokens(BRAILLE_TOKENS)
    if added == 0:
        warnings.warn("braille tokens already present; vocabulary unchanged")
        return tokenizer, model
    if added != len(BRAILLE_TOKENS):
        # partially present: still append only the missing ones
        warnings.warn(f"only {added} braille tokens were missing")
    assert len(tokenizer) == before + added
    model.resize_token_embeddings(len(tokenizer))
    return tokenizer, model
