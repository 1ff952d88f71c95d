"""Miniature encoder-decoder translation model (well under 5M parameters).

Same interface shape as the full-size pretrained model the recipe was
written for: token embeddings tied to the output projection, resizable
when special tokens are added.
"""

from __future__ import annotations

import hashlib
import math

import torch
from torch import nn


class TinyTranslator(nn.Module):
    def __init__(self, vocab_size: int, d_model: int = 64, nhead: int = 2,
                 num_layers: int = 2, dim_feedforward: int = 128,
                 dropout: float = 0.1, max_len: int = 512):
        super().__init__()
        self.d_model = d_model
        self.embedding = nn.Embedding(vocab_size, d_model)
        self.pos = nn.Embedding(max_len, d_model)
        self.transformer = nn.Transformer(
            d_model=d_model, nhead=nhead,
            num_encoder_layers=num_layers, num_decoder_layers=num_layers,
            dim_feedforward=dim_feedforward, dropout=dropout,
            batch_first=True)
        # output projection shares the embedding weights
        self.out_bias = nn.Parameter(torch.zeros(vocab_size))

    @property
    def vocab_size(self) -> int:
        return self.embedding.num_embeddings

    def resize_token_embeddings(self, new_size: int) -> None:
        old = self.embedding
        if new_size == old.num_embeddings:
            return
        new_emb = nn.Embedding(new_size, self.d_model)
        with torch.no_grad():
            copy = min(new_size, old.num_embeddings)
            new_emb.weight[:copy] = old.weight[:copy]
        self.embedding = new_emb
        old_bias = self.out_bias
        new_bias = nn.Parameter(torch.zeros(new_size))
        with torch.no_grad():
            new_bias[: min(new_size, old_bias.shape[0])] = old_bias[: min(new_size, old_bias.shape[0])]
        self.out_bias = new_bias

    def _embed(self, ids: torch.Tensor) -> torch.Tensor:
        positions = torch.arange(ids.shape[1], device=ids.device).unsqueeze(0)
        return self.embedding(ids) * math.sqrt(self.d_model) + self.pos(positions)

    def forward(self, src: torch.Tensor, tgt_in: torch.Tensor, pad_id: int) -> torch.Tensor:
        src_mask = src.eq(pad_id)
        tgt_mask = torch.triu(
            torch.ones(tgt_in.shape[1], tgt_in.shape[1], dtype=torch.bool,
                       device=tgt_in.device), diagonal=1)
        hidden = self.transformer(
            self._embed(src), self._embed(tgt_in),
            tgt_mask=tgt_mask,
            src_key_padding_mask=src_mask,
            memory_key_padding_mask=src_mask,
            tgt_key_padding_mask=tgt_in.eq(pad_id))
        return hidden @ self.embedding.weight.T + self.out_bias

    @torch.no_grad()
    def greedy_decode(self, src_ids: list[int], bos_id: int, eos_id: int,
                      pad_id: int, max_len: int = 128) -> list[int]:
        self.eval()
        src = torch.tensor([src_ids], dtype=torch.long)
        out = [bos_id]
        for _ in range(max_len):
            tgt = torch.tensor([out], dtype=torch.long)
            logits = self.forward(src, tgt, pad_id)
            nxt = int(logits[0, -1].argmax())
            if nxt == eos_id:
                break
            out.append(nxt)
        return out[1:]


def weights_digest(model: nn.Module) -> str:
    """Order-stable sha256 over all parameter tensors."""
    digest = hashlib.sha256()
    state = model.state_dict()
    for name in sorted(state):
        digest.update(name.encode())
        digest.update(state[name].detach().cpu().numpy().tobytes())
    return digest.hexdigest()
