// Copyright 2026 The coref Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coref/scorer.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "coref/corpus.h"
#include "doctest.h"

using namespace coref;

namespace {

ChainSet chains(std::vector<std::vector<std::string>> c) {
  ChainSet s;
  s.chains = std::move(c);
  return s;
}

// Enumerates all set partitions of {0..n-1} as label vectors in
// restricted-growth form; deterministic order.
std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> labels(n, 0);
  while (true) {
    out.push_back(labels);
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(labels.begin(), labels.begin() + i) + 1;
      if (labels[i] < cap) {
        ++labels[i];
        std::fill(labels.begin() + i + 1, labels.end(), 0);
        break;
      }
      labels[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

ChainSet to_chains(const std::vector<int> &labels) {
  std::map<int, std::vector<std::string>> groups;
  for (size_t i = 0; i < labels.size(); ++i) {
    groups[labels[i]].push_back("m" + std::to_string(i));
  }
  ChainSet s;
  for (auto &[label, members] : groups) s.chains.push_back(members);
  return s;
}

// Brute-force minimum-link oracle for MUC recall: for each key chain,
// the number of response-classes its members fall into, counting
// out-of-response members as singleton classes.
double oracle_recall(const ChainSet &key, const ChainSet &response,
                     bool *by_convention) {
  std::map<std::string, int> response_class;
  for (size_t i = 0; i < response.chains.size(); ++i) {
    for (const std::string &m : response.chains[i]) {
      response_class[m] = static_cast<int>(i);
    }
  }
  int num = 0;
  int den = 0;
  for (const auto &chain : key.chains) {
    std::map<int, int> classes;
    int singletons = 0;
    for (const std::string &m : chain) {
      auto it = response_class.find(m);
      if (it == response_class.end()) {
        ++singletons;
      } else {
        classes[it->second] = 1;
      }
    }
    int partitions = static_cast<int>(classes.size()) + singletons;
    num += static_cast<int>(chain.size()) - partitions;
    den += static_cast<int>(chain.size()) - 1;
  }
  *by_convention = den == 0;
  return den == 0 ? 1.0 : static_cast<double>(num) / den;
}

}  // namespace

TEST_CASE("muc_score matches the textbook example") {
  // Key {A B C}{D}, response {A B}{C D}: one of two key links found,
  // one of two response links justified.
  ChainSet key = chains({{"A", "B", "C"}, {"D"}});
  ChainSet response = chains({{"A", "B"}, {"C", "D"}});
  ScoreReport r = muc_score(response, key);
  CHECK(r.recall == doctest::Approx(0.5));
  CHECK(r.precision == doctest::Approx(0.5));
  CHECK(r.f1 == doctest::Approx(0.5));
  CHECK_FALSE(r.recall_by_convention);
  CHECK_FALSE(r.precision_by_convention);
}

TEST_CASE("zero-link ratios score 1 by convention and are flagged") {
  ChainSet singletons = chains({{"A"}, {"B"}});
  ChainSet linked = chains({{"A", "B"}});

  ScoreReport empty_response = muc_score(singletons, linked);
  CHECK(empty_response.recall == doctest::Approx(0.0));
  CHECK(empty_response.precision == doctest::Approx(1.0));
  CHECK(empty_response.precision_by_convention);

  ScoreReport empty_key = muc_score(linked, singletons);
  CHECK(empty_key.precision == doctest::Approx(0.0));
  CHECK(empty_key.recall == doctest::Approx(1.0));
  CHECK(empty_key.recall_by_convention);

  ScoreReport both = muc_score(singletons, singletons);
  CHECK(both.recall == doctest::Approx(1.0));
  CHECK(both.precision == doctest::Approx(1.0));
  CHECK(both.f1 == doctest::Approx(1.0));
}

TEST_CASE("muc_score equals the minimum-link oracle on all partition "
          "pairs of small universes") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::vector<int>> partitions = all_partitions(n);
    if (n == 5) CHECK(partitions.size() == 52);
    for (const auto &key_labels : partitions) {
      ChainSet key = to_chains(key_labels);
      for (const auto &resp_labels : partitions) {
        ChainSet response = to_chains(resp_labels);
        ScoreReport r = muc_score(response, key);

        bool conv = false;
        double want_recall = oracle_recall(key, response, &conv);
        CHECK(std::fabs(r.recall - want_recall) < 1e-12);
        CHECK(r.recall_by_convention == conv);
        double want_precision = oracle_recall(response, key, &conv);
        CHECK(std::fabs(r.precision - want_precision) < 1e-12);
        CHECK(r.precision_by_convention == conv);

        // Role-swap symmetry.
        ScoreReport swapped = muc_score(key, response);
        CHECK(std::fabs(swapped.recall - r.precision) < 1e-12);
        CHECK(std::fabs(swapped.precision - r.recall) < 1e-12);
      }
    }
  }
}

TEST_CASE("validate rejects overlapping chains") {
  CHECK_NOTHROW(chains({{"A", "B"}, {"C"}}).validate());
  CHECK_THROWS_AS(chains({{"A", "B"}, {"B", "C"}}).validate(), FormatError);
  CHECK_THROWS_AS(chains({{"A", "A"}}).validate(), FormatError);
}

TEST_CASE("chain files round-trip") {
  ChainSet original = chains({{"m1", "m2", "m5"}, {"m3"}, {"m4", "m6"}});
  std::string text = format_chains(original);
  ChainSet back = parse_chains(text);
  CHECK(back.chains == original.chains);

  ChainSet commented = parse_chains(
      "# resolver output\n"
      "m1 m2\n"
      "\n"
      "m3\n");
  CHECK(commented.chains ==
        std::vector<std::vector<std::string>>{{"m1", "m2"}, {"m3"}});
}

namespace {

const Document &scored_doc() {
  static const HeadLexicon heads = HeadLexicon::load("company : company\n");
  // Gold: {a1 d1 p1} via gold=1; n1/n2 chain 2; b1 subset of 1 (unscored);
  // q1 unannotated singleton.
  static const Document doc = parse_document(
      "<DOC id=\"s\"><P><S>"
      "<M id=\"a1\" det=\"INDEF\" num=\"SG\" sort=\"company\" gold=\"1\">"
      "A company</M> told "
      "<M id=\"n1\" det=\"PROPER\" num=\"SG\" sort=\"person\" gold=\"2\">"
      "Patt Gibbs</M> that "
      "<M id=\"d1\" det=\"DEF\" num=\"SG\" sort=\"company\" gold=\"1\">"
      "the company</M> and "
      "<M id=\"b1\" det=\"BARE\" num=\"PL\" sort=\"person\" gold=\"1a\" "
      "goldrel=\"subset\" goldof=\"1\">employees</M> and "
      "<M id=\"q1\" det=\"QUANT\" num=\"PL\" sort=\"person\">two aides</M> "
      "heard <M id=\"n2\" det=\"PROPER\" num=\"SG\" sort=\"person\" "
      "gold=\"2\">Gibbs</M> say "
      "<M id=\"p1\" det=\"PRON\" num=\"SG\" sort=\"company\" gold=\"1\">"
      "it</M> grew.</S></P></DOC>",
      heads);
  return doc;
}

int row_occurrences(const std::vector<TypeRow> &rows, const std::string &t) {
  for (const TypeRow &r : rows)
    if (r.type == t) return r.occurrences;
  return -1;
}

int row_correct(const std::vector<TypeRow> &rows, const std::string &t) {
  for (const TypeRow &r : rows)
    if (r.type == t) return r.correct;
  return -1;
}

}  // namespace

TEST_CASE("key_chains groups identity links and leaves the rest alone") {
  ChainSet key = key_chains(scored_doc());
  CHECK(key.chains == std::vector<std::vector<std::string>>{
                          {"a1", "d1", "p1"}, {"n1", "n2"}, {"b1"}, {"q1"}});
}

TEST_CASE("per-type report counts anaphors, not chain-initial mentions") {
  ChainSet response = chains({{"a1", "d1", "p1"}, {"n1", "n2"}, {"b1"},
                              {"q1"}});
  std::vector<TypeRow> rows = per_type_report(scored_doc(), response);

  // Fixed presentation order.
  std::vector<std::string> order;
  for (const TypeRow &r : rows) order.push_back(r.type);
  CHECK(order == std::vector<std::string>{
                     "Definites", "Pronouns", "Proper Names", "Reflexives",
                     "Bare Nominals", "Possessed Nominals", "Indefinites"});

  // a1, n1 open their chains: excluded. b1 has a non-identity gold link:
  // counted but unscorable. q1 is unannotated: excluded.
  CHECK(row_occurrences(rows, "Definites") == 1);
  CHECK(row_correct(rows, "Definites") == 1);
  CHECK(row_occurrences(rows, "Pronouns") == 1);
  CHECK(row_correct(rows, "Pronouns") == 1);
  CHECK(row_occurrences(rows, "Proper Names") == 1);
  CHECK(row_correct(rows, "Proper Names") == 1);
  CHECK(row_occurrences(rows, "Bare Nominals") == 1);
  CHECK(row_correct(rows, "Bare Nominals") == 0);
  CHECK(row_occurrences(rows, "Indefinites") == 0);

  // A wrong response chain for d1 drops its credit; a chain that merely
  // contains later mentions of the key chain gives none either.
  ChainSet wrong = chains({{"a1", "p1"}, {"d1", "n1", "n2"}, {"b1"}, {"q1"}});
  rows = per_type_report(scored_doc(), wrong);
  CHECK(row_correct(rows, "Definites") == 0);
  CHECK(row_correct(rows, "Pronouns") == 1);

  // Even linking b1 into its parent chain never scores it correct.
  ChainSet merged = chains({{"a1", "b1", "d1", "p1"}, {"n1", "n2"}, {"q1"}});
  rows = per_type_report(scored_doc(), merged);
  CHECK(row_correct(rows, "Bare Nominals") == 0);
  for (const TypeRow &r : rows) {
    if (r.type == "Bare Nominals") CHECK(r.unscored == 1);
  }
}

TEST_CASE("type table renders occurrence counts and unscored notes") {
  std::vector<TypeRow> rows = {{"Definites", 25, 16, 4},
                               {"Pronouns", 14, 11, 0}};
  std::string table = format_type_table(rows);
  CHECK(table.find("Definites") != std::string::npos);
  CHECK(table.find("25") != std::string::npos);
  CHECK(table.find("(4 unscored)") != std::string::npos);

  std::string tsv = format_type_tsv(rows);
  CHECK(tsv.find("Definites\t25\t16\t4") != std::string::npos);
  CHECK(tsv.find("Pronouns\t14\t11\t0") != std::string::npos);
}

TEST_CASE("format_score prints recall, precision and f1") {
  ScoreReport r;
  r.recall = 0.5345;
  r.precision = 0.7381;
  r.f1 = 0.62;
  std::string text = format_score(r);
  CHECK(text.find("0.5345") != std::string::npos);
  CHECK(text.find("0.7381") != std::string::npos);
  CHECK(text.find("0.62") != std::string::npos);
}
