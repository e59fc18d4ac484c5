/* Copyright 2026 The palogic Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <memory>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "palogic/belief.hpp"
#include "palogic/builtin.hpp"
#include "palogic/chain_model.hpp"
#include "palogic/english.hpp"
#include "palogic/enumerate.hpp"
#include "palogic/error.hpp"
#include "palogic/laws.hpp"
#include "palogic/sentence.hpp"
#include "palogic/tarpit.hpp"
#include "palogic/witness.hpp"

namespace py = pybind11;
using namespace palogic;

namespace {

std::vector<std::vector<std::uint32_t>> rows_of(const ChainModel& m) {
  std::vector<std::vector<std::uint32_t>> out(m.size());
  for (std::size_t p = 0; p < m.size(); ++p)
    for (std::size_t q = 0; q < m.size(); ++q) out[p].push_back(m.h_table()[p * m.size() + q].rank);
  return out;
}

ChainModel model_from_rows(const std::vector<std::vector<std::uint32_t>>& h, const std::vector<std::uint32_t>& i) {
  const std::size_t n = h.size();
  std::vector<Element> table, neg;
  for (const auto& row : h) {
    if (row.size() != n) throw Error("h must be square");
    for (auto r : row) table.push_back(Element{r});
  }
  for (auto r : i) neg.push_back(Element{r});
  if (neg.empty()) neg = reversal_table(n);
  return ChainModel(n, std::move(table), std::move(neg));
}

py::list failures(const ChainModel& m, const std::string& laws) {
  py::list out;
  for (const auto& c : is_model(m, resolve_law_set(laws))) {
    std::vector<std::uint32_t> w;
    for (auto e : c.witness) w.push_back(e.rank);
    out.append(py::make_tuple(std::string(law_id(c.law)), w, c.detail));
  }
  return out;
}

// A knowledge base over a named algebra, fed with the text formats.
class KB {
 public:
  KB(const std::string& algebra, std::size_t depth)
      : alg_(belief::make_algebra(algebra)), kb_(alg_, options(depth)) {}

  void add(const std::string& text) {
    for (auto& f : belief::parse_kb(text, *alg_)) kb_.add(std::move(f));
  }
  void mention(const std::string& conditional) { kb_.mention(belief::parse_conditional(conditional)); }
  void close() { kb_.close(); }
  bool consistent() const { return kb_.consistent(); }
  std::vector<std::string> conflicts() const { return kb_.conflicts(); }

  std::string query(const std::string& a, const std::string& b) const {
    return std::string(to_string(kb_.query(belief::parse_conditional(a), belief::parse_operand(b, *alg_))));
  }
  std::optional<std::string> value(const std::string& c) const {
    const auto v = kb_.value_of(belief::parse_conditional(c));
    if (!v) return std::nullopt;
    return alg_->format(*v);
  }
  std::vector<std::pair<std::string, std::string>> derived_values() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& d : kb_.derived_values()) out.emplace_back(belief::to_string(d.conditional), alg_->format(d.value));
    return out;
  }
  std::vector<std::tuple<std::string, std::string, std::string, bool>> pending() const {
    std::vector<std::tuple<std::string, std::string, std::string, bool>> out;
    for (const auto& p : kb_.pending_cases())
      out.emplace_back(belief::to_string(p.conjunction), belief::to_string(p.first), belief::to_string(p.second), p.open);
    return out;
  }

 private:
  static belief::KbOptions options(std::size_t depth) {
    belief::KbOptions o;
    o.combination_depth = depth;
    return o;
  }

  std::shared_ptr<belief::ValueAlgebra> alg_;
  belief::BeliefKB kb_;
};

class English {
 public:
  explicit English(std::size_t depth_bound) : alg_(std::make_shared<english::EnglishAlgebra>(depth_bound)) {}

  std::string normalize(const std::string& t) const { return english::to_string(alg_->reduce(english::parse_term(t))); }
  std::string compare(const std::string& a, const std::string& b) {
    return std::string(to_string(alg_->compare(english::parse_term(a), english::parse_term(b))));
  }
  std::pair<std::string, bool> residual(const std::string& p, const std::string& q) {
    const auto r = alg_->residual(english::parse_term(p), english::parse_term(q));
    return {english::to_string(r.term), r.fresh};
  }
  std::optional<std::pair<std::string, std::string>> first_incomparable_pair() {
    auto p = alg_->first_incomparable_pair();
    if (!p) return std::nullopt;
    return std::make_pair(english::to_string(p->first), english::to_string(p->second));
  }

 private:
  std::shared_ptr<english::EnglishAlgebra> alg_;
};

}  // namespace

PYBIND11_MODULE(_palogic, m) {
  m.doc() = "Abstract probability algebras";
  // Translators run newest first, so the derived ParseError goes last.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<ChainModel>(m, "ChainModel")
      .def(py::init(&model_from_rows), py::arg("h"), py::arg("i") = std::vector<std::uint32_t>{})
      .def_static("parse", &parse_chain_model)
      .def_static("load", &load_chain_model)
      .def("format", &format_chain_model)
      .def_property_readonly("size", &ChainModel::size)
      .def_property_readonly("h", &rows_of)
      .def_property_readonly("i", [](const ChainModel& c) {
        std::vector<std::uint32_t> out;
        for (auto e : c.i_table()) out.push_back(e.rank);
        return out;
      })
      .def("__eq__", [](const ChainModel& a, const ChainModel& b) { return a == b; })
      .def("__repr__", [](const ChainModel& c) { return "<ChainModel n=" + std::to_string(c.size()) + ">"; });

  m.def("two_element_model", &two_element_model);
  m.def("law_failures", &failures, py::arg("model"), py::arg("laws") = "default",
        "List of (law, witness, detail) for every failed law.");
  m.def("law_set", [](const std::string& name) {
    std::vector<std::string> ids;
    const auto laws = resolve_law_set(name);
    for (Law l : laws.laws()) ids.emplace_back(law_id(l));
    return ids;
  });
  m.def(
      "enumerate_models",
      [](std::size_t n, const std::string& laws, unsigned jobs) {
        py::gil_scoped_release release;
        return enumerate_models(n, resolve_law_set(laws), {EnumerationOptions{}.max_size, jobs}).models;
      },
      py::arg("n"), py::arg("laws") = "default", py::arg("jobs") = 1);
  m.def(
      "census",
      [](const std::string& laws, unsigned jobs) {
        py::gil_scoped_release release;
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
        for (const auto& r : census(resolve_law_set(laws), {EnumerationOptions{}.max_size, jobs}).rows)
          out.emplace_back(r.n, r.expected, r.actual);
        return out;
      },
      py::arg("laws") = "default", py::arg("jobs") = 1, "List of (n, reference, enumerated).");

  m.def("is_archimedean", [](const ChainModel& c) {
    const auto r = is_archimedean(c);
    std::optional<std::pair<std::uint32_t, std::uint32_t>> w;
    if (r.witness) w = std::make_pair(r.witness->first.rank, r.witness->second.rank);
    return py::make_tuple(r.archimedean, w);
  });
  m.def("embed", [](const ChainModel& c) {
    const auto e = embed(c);
    py::dict d;
    d["verdict"] = to_string(e.verdict);
    d["lp_feasible"] = e.lp_feasible;
    std::vector<std::optional<std::string>> logs;
    for (const auto& x : e.log_value) logs.push_back(x ? std::optional(linear::format_rational(*x)) : std::nullopt);
    d["neg_log_values"] = logs;
    d["i_compatible"] = e.i_compatible;
    d["contradiction"] = e.contradiction;
    d["verified"] = e.verdict == Verdict::Embedded && !verify_embedding(c, e);
    return d;
  });

  m.def("equivalent", [](const std::string& a, const std::string& b) {
    return logic::equivalent(logic::parse_sentence(a), logic::parse_sentence(b));
  });
  m.def("is_absurd", [](const std::string& a) { return logic::is_absurd(logic::parse_sentence(a)); });

  py::class_<English>(m, "EnglishAlgebra")
      .def(py::init<std::size_t>(), py::arg("depth_bound") = english::EnglishAlgebra::kDefaultDepthBound)
      .def("normalize", &English::normalize)
      .def("compare", &English::compare)
      .def("residual", &English::residual, "Returns (term, fresh).")
      .def("first_incomparable_pair", &English::first_incomparable_pair);

  py::class_<KB>(m, "BeliefKB")
      .def(py::init<const std::string&, std::size_t>(), py::arg("algebra"),
           py::arg("depth") = belief::KbOptions{}.combination_depth)
      .def("add", &KB::add, "Adds facts in knowledge-base file syntax.")
      .def("mention", &KB::mention)
      .def("close", &KB::close)
      .def_property_readonly("consistent", &KB::consistent)
      .def_property_readonly("conflicts", &KB::conflicts)
      .def("query", &KB::query)
      .def("value", &KB::value)
      .def("derived_values", &KB::derived_values)
      .def("pending_cases", &KB::pending);

  m.def(
      "richness_witness",
      [](int axiom, const std::vector<double>& targets, const std::string& algebra) -> std::optional<py::dict> {
        const std::shared_ptr<const belief::ValueAlgebra> alg = belief::make_algebra(algebra);
        const auto w = belief::richness_witness(axiom, targets, *alg);
        if (!w) return std::nullopt;
        const auto check = belief::verify_witness(*w, alg);
        py::dict d;
        d["atoms"] = w->atoms;
        d["layers"] = w->layers;
        d["verified"] = check.ok;
        d["detail"] = check.detail;
        return d;
      },
      py::arg("axiom"), py::arg("targets"), py::arg("algebra") = "real");
}
