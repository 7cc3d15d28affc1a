"""Transformer sentence scoring.

Autoregressive checkpoints score a sentence as
exp(-sum_j log P(x_j | x_<j)); masked checkpoints use the
pseudo-perplexity variant, masking one position at a time over a full
pass and summing the masked-token log-likelihoods.  No length
normalization is applied server-side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import torch

PPL_MIN = 1e-30
PPL_MAX = 1e30

# Placeholder the evaluation harness uses for hypothesis-only ablations.
MASK_PLACEHOLDER = "⟨MASK⟩"

MODES = ("autoregressive", "masked")


class ScoringError(Exception):
    pass


class PlaceholderError(ScoringError):
    """Placeholder replacement requested but no mask token exists."""


def _clamp(value: float) -> float:
    if value != value:  # NaN
        return PPL_MAX
    return min(max(value, PPL_MIN), PPL_MAX)


def _exp_clamped(nll: float) -> float:
    try:
        return _clamp(math.exp(nll))
    except OverflowError:
        return PPL_MAX


@dataclass
class BridgeModel:
    """A loaded checkpoint plus everything needed to score with it."""

    model_name: str
    mode: str
    model: torch.nn.Module
    tokenizer: object
    device: str = "cpu"
    max_batch_tokens: int = 16384

    def __post_init__(self):
        if self.mode not in MODES:
            raise ScoringError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.mode == "masked" and self.mask_token is None:
            raise ScoringError("masked mode requires a tokenizer with a mask token")
        self.model.eval()
        self.model.to(self.device)

    @property
    def mask_token(self) -> str | None:
        return getattr(self.tokenizer, "mask_token", None)

    def info(self) -> dict:
        return {
            "model_name": self.model_name,
            "mode": self.mode,
            "mask_token": self.mask_token,
            "protocol_version": 1,
        }

    # ------------------------------------------------------------------
    # Scoring
    # ------------------------------------------------------------------

    def score(self, sentences: list[str], replace_placeholder: bool = False) -> list[dict]:
        """Score sentences in order; each result carries perplexity and
        the number of scored token positions."""
        if replace_placeholder:
            if self.mask_token is None:
                raise PlaceholderError(
                    "placeholder replacement requested but the model has no mask token"
                )
            sentences = [s.replace(MASK_PLACEHOLDER, self.mask_token) for s in sentences]
        with torch.no_grad():
            if self.mode == "autoregressive":
                return [self._score_autoregressive(s) for s in sentences]
            return [self._score_masked(s) for s in sentences]

    def _encode(self, sentence: str) -> torch.Tensor:
        ids = self.tokenizer(sentence, return_tensors="pt")["input_ids"][0]
        if ids.numel() == 0:
            raise ScoringError(f"sentence tokenized to nothing: {sentence!r}")
        return ids.to(self.device)

    def _score_autoregressive(self, sentence: str) -> dict:
        ids = self._encode(sentence)
        bos = getattr(self.tokenizer, "bos_token_id", None)
        if bos is not None and (ids.numel() == 0 or ids[0].item() != bos):
            ids = torch.cat([torch.tensor([bos], device=self.device), ids])
        if ids.numel() < 2:
            # a single token with no BOS context has no prediction to score
            return {"perplexity": 1.0, "token_count": 1}
        logits = self.model(ids.unsqueeze(0)).logits[0]
        log_probs = torch.log_softmax(logits[:-1].double(), dim=-1)
        targets = ids[1:]
        nll = -log_probs[torch.arange(targets.numel()), targets].sum().item()
        return {"perplexity": _exp_clamped(nll), "token_count": int(targets.numel())}

    def _score_masked(self, sentence: str) -> dict:
        encoded = self.tokenizer(sentence, return_tensors="pt",
                                 return_special_tokens_mask=True)
        ids = encoded["input_ids"][0].to(self.device)
        special = encoded["special_tokens_mask"][0].bool().to(self.device)
        mask_id = self.tokenizer.mask_token_id
        # mask one non-special position at a time; positions that already
        # hold the mask token (hypothesis-only placeholders) carry no
        # identity to predict and are skipped
        positions = [
            j for j in range(ids.numel())
            if not special[j].item() and ids[j].item() != mask_id
        ]
        if not positions:
            return {"perplexity": 1.0, "token_count": 1}
        batch = ids.repeat(len(positions), 1)
        for row, j in enumerate(positions):
            batch[row, j] = mask_id
        nll = 0.0
        max_rows = max(1, self.max_batch_tokens // max(1, ids.numel()))
        for start in range(0, len(positions), max_rows):
            chunk = batch[start : start + max_rows]
            logits = self.model(chunk).logits.double()
            for row, j in enumerate(positions[start : start + max_rows]):
                log_probs = torch.log_softmax(logits[row, j], dim=-1)
                nll -= log_probs[ids[j]].item()
        return {"perplexity": _exp_clamped(nll), "token_count": len(positions)}


def load_bridge_model(name_or_path: str, mode: str | None = None,
                      device: str = "cpu") -> BridgeModel:
    """Fetch a checkpoint (Hugging Face hub name or local path) and wrap
    it for serving.  mode defaults to masked when the config declares a
    masked-LM architecture."""
    from transformers import AutoConfig, AutoModelForCausalLM, AutoModelForMaskedLM, AutoTokenizer

    config = AutoConfig.from_pretrained(name_or_path)
    architectures = tuple(config.architectures or ())
    looks_masked = any("MaskedLM" in a for a in architectures)
    if mode is None:
        mode = "masked" if looks_masked else "autoregressive"
    tokenizer = AutoTokenizer.from_pretrained(name_or_path)
    if mode == "masked":
        model = AutoModelForMaskedLM.from_pretrained(name_or_path)
    else:
        model = AutoModelForCausalLM.from_pretrained(name_or_path)
    return BridgeModel(model_name=str(name_or_path), mode=mode, model=model,
                       tokenizer=tokenizer, device=device)
