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

"""Word-level edit correction for speech recognizer output."""

from _asrcorrect import (
    BaselineModel,
    Error,
    TagVocabulary,
    apply_tags,
    build_vocabulary,
    correct,
    derive_tags,
    evaluate,
    generate_references,
    generate_synthetic,
    load_model,
    load_vocabulary,
    mask_unsupported,
    matching_blocks,
    normalize,
    opcodes,
    parse_tag,
    relative_wer_reduction,
    save_vocabulary,
    train_baseline,
    wer,
)

__all__ = [
    "BaselineModel",
    "Error",
    "TagVocabulary",
    "apply_tags",
    "build_vocabulary",
    "correct",
    "derive_tags",
    "evaluate",
    "generate_references",
    "generate_synthetic",
    "load_model",
    "load_vocabulary",
    "mask_unsupported",
    "matching_blocks",
    "normalize",
    "opcodes",
    "parse_tag",
    "relative_wer_reduction",
    "save_vocabulary",
    "train_baseline",
    "wer",
]
