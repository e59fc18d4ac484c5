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

import os

import pytest

import palogic

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def test_two_element_model():
    m = palogic.two_element_model()
    assert m.size == 2
    assert m.h == [[0, 0], [0, 1]]
    assert m.i == [1, 0]
    assert palogic.is_model(m)
    assert palogic.ChainModel.parse(m.format()) == m


def test_law_failures_and_files():
    m = palogic.ChainModel.load(os.path.join(DATA, "three_nilpotent.model"))
    failed = [law for law, _, _ in palogic.law_failures(m)]
    assert failed == ["L6"]
    assert palogic.is_model(m, "no-L6")
    with pytest.raises(ValueError, match=":5:"):
        palogic.ChainModel.load(os.path.join(DATA, "bad_rank.model"))


def test_enumeration():
    assert [len(palogic.enumerate_models(n)) for n in range(2, 6)] == [1, 1, 2, 6]
    assert palogic.enumerate_models(5, jobs=2) == palogic.enumerate_models(5)
    assert palogic.law_set("default") == ["L%d" % k for k in range(1, 11)]
    with pytest.raises(RuntimeError):
        palogic.enumerate_models(1)


def test_embedding():
    two = palogic.two_element_model()
    e = palogic.embed(two)
    assert e["verdict"] == "embedded"
    assert e["verified"]
    idem = palogic.ChainModel.load(os.path.join(DATA, "three_idempotent.model"))
    assert palogic.is_archimedean(idem)[0] is False
    assert palogic.embed(idem)["verdict"] == "refuted-non-archimedean"


def test_sentences():
    assert palogic.equivalent("~(A & B)", "~A | ~B")
    assert not palogic.equivalent("A", "B")
    assert palogic.is_absurd("A & ~A")


def test_english():
    e = palogic.EnglishAlgebra()
    assert e.normalize("i(i(LIKELY))") == "LIKELY"
    assert e.compare("UNLIKELY", "LIKELY") == "LT"
    assert e.compare("LIKELY*LIKELY", "UNLIKELY") == "INCOMPARABLE"
    term, fresh = e.residual("UNLIKELY", "LIKELY")
    assert fresh and term == "s(UNLIKELY,LIKELY)"


def test_belief():
    kb = palogic.BeliefKB("real")
    kb.add("P(A|B & TRUE) = 0.5\nP(B|TRUE) = 0.4\n")
    kb.mention("P(A & B|TRUE)")
    kb.close()
    assert kb.consistent
    assert float(kb.value("P(A & B|TRUE)")) == pytest.approx(0.2, abs=1e-12)
    assert kb.query("P(A & B|TRUE)", "0.2") == "EQ"
    bad = palogic.BeliefKB("two")
    bad.add("P(A|TRUE) = 1\nP(~A|TRUE) = 1\n")
    bad.close()
    assert not bad.consistent
    assert bad.conflicts


def test_witness():
    w = palogic.richness_witness(11, [0.3, 0.7])
    assert w["verified"], w["detail"]
    assert palogic.richness_witness(10, [0.5, 0.5, 0.5], "english") is None
