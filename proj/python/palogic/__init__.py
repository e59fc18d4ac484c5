# Copyright 2026 The palogic Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Abstract probability algebras: law checks, finite model census, belief
inference and real-interval embeddings."""

from ._palogic import (  # noqa: F401
    BeliefKB,
    ChainModel,
    EnglishAlgebra,
    Error,
    ParseError,
    census,
    embed,
    enumerate_models,
    equivalent,
    is_absurd,
    is_archimedean,
    law_failures,
    law_set,
    richness_witness,
    two_element_model,
)

__version__ = "1.0.0"


def is_model(model, laws="default"):
    return not law_failures(model, laws)
