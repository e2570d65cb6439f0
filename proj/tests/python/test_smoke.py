# Copyright 2026 The asrcorrect Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import random

import pytest

import asrcorrect


def test_normalize():
    assert asrcorrect.normalize("Hello, World!") == ["hello", "world"]
    assert asrcorrect.normalize("Hello", lowercase=False) == ["Hello"]
    assert asrcorrect.normalize("don't stop") == ["don't", "stop"]
    assert asrcorrect.normalize("") == []


def test_alignment():
    blocks = asrcorrect.matching_blocks(["a", "b", "a"], ["b", "a", "b"])
    assert blocks[0] == (0, 1, 2)
    assert blocks[-1] == (3, 3, 0)

    codes = asrcorrect.opcodes(["the", "cat"], ["the", "hat"])
    assert codes == [("equal", 0, 1, 0, 1), ("replace", 1, 2, 1, 2)]


def test_derive_and_apply_round_trip():
    hyp = ["the", "book", "store", "cat"]
    ref = ["the", "bookstore", "cats"]
    tags = asrcorrect.derive_tags(hyp, ref)
    assert len(tags) == len(hyp)
    assert asrcorrect.apply_tags(hyp, tags) == ref


def test_round_trip_randomized():
    rng = random.Random(7)
    alphabet = ["a", "b", "cat", "cats", "play", "long-term", "don't", "café"]
    for _ in range(300):
        hyp = [rng.choice(alphabet) for _ in range(rng.randint(1, 8))]
        ref = [rng.choice(alphabet) for _ in range(rng.randint(0, 8))]
        tags = asrcorrect.derive_tags(hyp, ref)
        assert asrcorrect.apply_tags(hyp, tags) == ref


def test_parse_tag():
    assert asrcorrect.parse_tag("append_s") == "append_s"
    assert asrcorrect.parse_tag("remove_suffix_2") == "remove_suffix_2"
    with pytest.raises(asrcorrect.Error):
        asrcorrect.parse_tag("bogus")


def test_vocabulary_and_masking():
    corpus = [
        (["w"] * 3, ["append_s", "append_s", "del"]),
        (["w"] * 3, ["append_s", "del", "replace_q"]),
    ]
    vocab = asrcorrect.build_vocabulary(corpus, cutoff=150, min_count=2)
    assert "append_s" in vocab
    assert "del" in vocab
    assert "replace_q" not in vocab
    assert "none" in vocab

    masked = asrcorrect.mask_unsupported(["w", "w", "w"], ["del", "replace_q", "none"], vocab)
    assert masked == ["unsupported", "unsupported", "none"]


def test_train_predict_correct(tmp_path):
    corpus = [
        (["the", "cat", "sat"], ["none", "append_s", "none"]),
        (["the", "dog", "sat"], ["none", "append_s", "none"]),
    ]
    vocab = asrcorrect.build_vocabulary(corpus, min_count=1)
    model = asrcorrect.train_baseline(corpus, vocab)
    predictions = model.predict(["the", "cat", "sat"])
    assert predictions[1] == ("append_s", 1.0)

    tokens = ["the", "cat", "sat"]
    corrected, actions = asrcorrect.correct(tokens, predictions)
    assert corrected == ["the", "cats", "sat"]
    assert actions[1] == "applied"

    held, _ = asrcorrect.correct(tokens, predictions, threshold=1.01)
    assert held == tokens
    disabled, _ = asrcorrect.correct(tokens, predictions, disabled_ops=["append_*"])
    assert disabled == tokens

    model_path = tmp_path / "model.tsv"
    model.save(str(model_path))
    reloaded = asrcorrect.load_model(str(model_path))
    assert reloaded.predict(["the", "cat", "sat"]) == predictions

    vocab_path = tmp_path / "vocab.tsv"
    asrcorrect.save_vocabulary(str(vocab_path), vocab)
    assert sorted(asrcorrect.load_vocabulary(str(vocab_path)).tags()) == sorted(vocab.tags())


def test_wer_and_reduction():
    score = asrcorrect.wer(["a", "b", "c", "d"], ["a", "x", "c"])
    assert score["substitutions"] == 1
    assert score["deletions"] == 1
    assert score["insertions"] == 0
    assert score["wer_percent"] == pytest.approx(50.0)

    assert asrcorrect.relative_wer_reduction(11.4, 10.2) == pytest.approx(10.5, abs=0.05)
    with pytest.raises(asrcorrect.Error):
        asrcorrect.wer([], ["a"])


def test_evaluate():
    triples = [
        (["a", "b"], ["a", "x"], ["a", "b"]),
        (["c", "d"], ["c", "d"], ["c", "d"]),
    ]
    report = asrcorrect.evaluate(triples)
    assert report["sentence_count"] == 2
    assert report["wer_corrected"] == 0.0
    assert report["relative_wer_reduction"] == pytest.approx(100.0)


def test_synthetic_generation():
    refs = asrcorrect.generate_references(25, seed=3)
    assert len(refs) == 25
    assert all(ref for ref in refs)

    pairs = asrcorrect.generate_synthetic(refs, error_rate=1.2, seed=5)
    assert len(pairs) == 25
    assert pairs == asrcorrect.generate_synthetic(refs, error_rate=1.2, seed=5)
    assert any(hyp != ref for hyp, ref in pairs)

    clean = asrcorrect.generate_synthetic(refs, error_rate=0.0, seed=5)
    assert all(hyp == ref for hyp, ref in clean)

    for hyp, ref in pairs:
        if not hyp:
            continue
        tags = asrcorrect.derive_tags(hyp.split(), ref.split())
        assert asrcorrect.apply_tags(hyp.split(), tags) == ref.split()


def test_error_hierarchy():
    with pytest.raises(asrcorrect.Error):
        asrcorrect.apply_tags(["a"], ["del", "del"])
    with pytest.raises(asrcorrect.Error):
        asrcorrect.load_model("/nonexistent/model.tsv")
