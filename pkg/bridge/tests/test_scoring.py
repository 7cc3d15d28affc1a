import math

import pytest
import torch

from lm_bridge.scoring import MASK_PLACEHOLDER, PPL_MAX, PPL_MIN, PlaceholderError


def test_autoregressive_matches_manual_sum(tiny_autoregressive):
    bridge = tiny_autoregressive
    sentence = "word is to language as note is to music"
    (result,) = bridge.score([sentence])

    ids = bridge.tokenizer(sentence, return_tensors="pt")["input_ids"][0]
    ids = torch.cat([torch.tensor([bridge.tokenizer.bos_token_id]), ids])
    with torch.no_grad():
        logits = bridge.model(ids.unsqueeze(0)).logits[0]
    nll = 0.0
    for j in range(1, ids.numel()):
        log_probs = torch.log_softmax(logits[j - 1].double(), dim=-1)
        nll -= log_probs[ids[j]].item()
    assert result["perplexity"] == pytest.approx(math.exp(nll), rel=1e-9)
    assert result["token_count"] == ids.numel() - 1


def test_masked_matches_manual_per_position_masking(tiny_masked):
    bridge = tiny_masked
    sentence = "king is to queen as man is to woman"
    (result,) = bridge.score([sentence])

    enc = bridge.tokenizer(sentence, return_tensors="pt", return_special_tokens_mask=True)
    ids = enc["input_ids"][0]
    special = enc["special_tokens_mask"][0].bool()
    mask_id = bridge.tokenizer.mask_token_id
    nll = 0.0
    count = 0
    with torch.no_grad():
        for j in range(ids.numel()):
            if special[j]:
                continue
            masked = ids.clone()
            masked[j] = mask_id
            logits = bridge.model(masked.unsqueeze(0)).logits[0, j].double()
            nll -= torch.log_softmax(logits, dim=-1)[ids[j]].item()
            count += 1
    assert result["perplexity"] == pytest.approx(math.exp(nll), rel=1e-9)
    assert result["token_count"] == count


def test_masked_single_token_is_reciprocal_likelihood(tiny_masked):
    bridge = tiny_masked
    (result,) = bridge.score(["music"])
    enc = bridge.tokenizer("music", return_tensors="pt")
    ids = enc["input_ids"][0]
    j = 1  # [CLS] music [SEP]
    masked = ids.clone()
    masked[j] = bridge.tokenizer.mask_token_id
    with torch.no_grad():
        logits = bridge.model(masked.unsqueeze(0)).logits[0, j].double()
    p = torch.softmax(logits, dim=-1)[ids[j]].item()
    assert result["perplexity"] == pytest.approx(1.0 / p, rel=1e-6)
    assert result["token_count"] == 1


def test_placeholder_replacement_skips_mask_positions(tiny_masked):
    bridge = tiny_masked
    with_mask = f"king is to {MASK_PLACEHOLDER} as man is to woman"
    plain = "king is to queen as man is to woman"
    (masked_result,) = bridge.score([with_mask], replace_placeholder=True)
    (plain_result,) = bridge.score([plain])
    assert masked_result["token_count"] == plain_result["token_count"] - 1


def test_placeholder_without_mask_token_raises(tiny_autoregressive):
    with pytest.raises(PlaceholderError):
        tiny_autoregressive.score([f"a {MASK_PLACEHOLDER} b"], replace_placeholder=True)


def test_determinism_within_process(tiny_masked, tiny_autoregressive):
    sentences = ["note is to music as word is to language", "cat dog tree"]
    for bridge in (tiny_masked, tiny_autoregressive):
        a = bridge.score(sentences)
        b = bridge.score(sentences)
        assert [r["perplexity"] for r in a] == [r["perplexity"] for r in b]


def test_perplexities_positive_finite_clamped(tiny_autoregressive):
    results = tiny_autoregressive.score(["word", "word music cat", "the a is"])
    for r in results:
        assert PPL_MIN <= r["perplexity"] <= PPL_MAX
        assert r["token_count"] >= 1


def test_unknown_words_still_score(tiny_autoregressive):
    (result,) = tiny_autoregressive.score(["xylophone zygote"])
    assert result["perplexity"] > 0
