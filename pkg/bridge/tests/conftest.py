import pytest
import torch
from tokenizers import Tokenizer
from tokenizers.models import WordLevel
from tokenizers.pre_tokenizers import Whitespace
from tokenizers.processors import TemplateProcessing
from transformers import (
    BertConfig,
    BertForMaskedLM,
    GPT2Config,
    GPT2LMHeadModel,
    PreTrainedTokenizerFast,
)

from lm_bridge.scoring import BridgeModel

WORDS = [
    "word", "language", "note", "music", "paris", "france", "rome", "italy",
    "is", "to", "as", "what", "the", "a", "king", "queen", "man", "woman",
    "cat", "dog", "tree", "house", "red", "blue", "big", "small",
]


def _wordlevel(vocab: dict[str, int]) -> Tokenizer:
    tok = Tokenizer(WordLevel(vocab, unk_token="[UNK]"))
    tok.pre_tokenizer = Whitespace()
    return tok


@pytest.fixture(scope="session")
def tiny_masked() -> BridgeModel:
    vocab = {"[PAD]": 0, "[UNK]": 1, "[CLS]": 2, "[SEP]": 3, "[MASK]": 4}
    for w in WORDS:
        vocab[w] = len(vocab)
    tok = _wordlevel(vocab)
    tok.post_processor = TemplateProcessing(
        single="[CLS] $A [SEP]",
        pair="[CLS] $A [SEP] $B [SEP]",
        special_tokens=[("[CLS]", 2), ("[SEP]", 3)],
    )
    tokenizer = PreTrainedTokenizerFast(
        tokenizer_object=tok,
        unk_token="[UNK]", pad_token="[PAD]", cls_token="[CLS]",
        sep_token="[SEP]", mask_token="[MASK]",
    )
    torch.manual_seed(7)
    model = BertForMaskedLM(
        BertConfig(
            vocab_size=len(vocab), hidden_size=32, num_hidden_layers=2,
            num_attention_heads=2, intermediate_size=64,
            max_position_embeddings=64,
        )
    )
    return BridgeModel(model_name="tiny-masked", mode="masked",
                       model=model, tokenizer=tokenizer)


@pytest.fixture(scope="session")
def tiny_autoregressive() -> BridgeModel:
    vocab = {"<|bos|>": 0, "[UNK]": 1}
    for w in WORDS:
        vocab[w] = len(vocab)
    tokenizer = PreTrainedTokenizerFast(
        tokenizer_object=_wordlevel(vocab),
        unk_token="[UNK]", bos_token="<|bos|>",
    )
    torch.manual_seed(11)
    model = GPT2LMHeadModel(
        GPT2Config(
            vocab_size=len(vocab), n_positions=64, n_embd=32,
            n_layer=2, n_head=2, bos_token_id=0, eos_token_id=0,
        )
    )
    return BridgeModel(model_name="tiny-auto", mode="autoregressive",
                       model=model, tokenizer=tokenizer)
