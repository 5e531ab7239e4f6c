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

// End-to-end acceptance gate. Prints one PASS/FAIL line per criterion
// and exits nonzero when any criterion fails. Takes the data directory
// as its single argument.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coref/corpus.h"
#include "coref/resolver.h"
#include "coref/scorer.h"

using namespace coref;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Gate {
  int failures = 0;

  void report(int criterion, const std::string &name, bool ok,
              const std::string &detail) {
    std::printf("[%d] %-22s %s  (%s)\n", criterion, name.c_str(),
                ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) ++failures;
  }
};

// Response chain index for each mention id.
std::map<std::string, int> chain_index(
    const std::vector<std::vector<std::string>> &chains) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < chains.size(); ++i) {
    for (const std::string &id : chains[i]) index[id] = static_cast<int>(i);
  }
  return index;
}

bool same_chain(const std::map<std::string, int> &index, const std::string &a,
                const std::string &b) {
  auto ia = index.find(a);
  auto ib = index.find(b);
  return ia != index.end() && ib != index.end() && ia->second == ib->second;
}

// ---------------------------------------------------------------------
// Criterion 5 support: exhaustive partitions and a brute-force oracle.

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

double oracle_recall(const ChainSet &key, const ChainSet &response) {
  std::map<std::string, int> response_class;
  for (size_t i = 0; i < response.chains.size(); ++i) {
    for (const std::string &m : response.chains[i]) {
      response_class[m] = static_cast<int>(i);
    }
  }
  int num = 0;
  int den = 0;
  for (const auto &chain : key.chains) {
    std::set<int> classes;
    int singletons = 0;
    for (const std::string &m : chain) {
      auto it = response_class.find(m);
      if (it == response_class.end()) {
        ++singletons;
      } else {
        classes.insert(it->second);
      }
    }
    num += static_cast<int>(chain.size()) -
           (static_cast<int>(classes.size()) + singletons);
    den += static_cast<int>(chain.size()) - 1;
  }
  return den == 0 ? 1.0 : static_cast<double>(num) / den;
}

// ---------------------------------------------------------------------
// Criteria 6 and 7 support: deterministic synthetic corpus.

const SortHierarchy &synth_sorts() {
  static const SortHierarchy h = SortHierarchy::load(
      "airline < company\n"
      "company < organization\n"
      "union < organization\n");
  return h;
}

const ModifierLexicon &synth_modifiers() {
  static const ModifierLexicon lex =
      ModifierLexicon::load("british, french\n");
  return lex;
}

const HeadLexicon &synth_heads() {
  static const HeadLexicon lex = HeadLexicon::load(
      "company : company\n"
      "airline : airline\n"
      "union : union\n");
  return lex;
}

constexpr int kTemplates = 6;

std::string template_sentence(int which, int slot) {
  const std::string s = std::to_string(slot);
  switch (which) {
    case 0:
      return "<S><M id=\"a" + s + "\" det=\"INDEF\" num=\"SG\" "
             "sort=\"company\" gold=\"g" + s + "\">A company</M> said "
             "nothing. </S>";
    case 1:
      return "<S><M id=\"d" + s + "\" det=\"DEF\" num=\"SG\" "
             "sort=\"company\" gold=\"g" + s + "\">The company</M> grew. "
             "</S>";
    case 2:
      return "<S><M id=\"e" + s + "\" det=\"DEF\" num=\"SG\" "
             "sort=\"airline\" gold=\"g" + s + "\">The british airline</M> "
             "expanded. </S>";
    case 3:
      return "<S><M id=\"u" + s + "\" det=\"INDEF\" num=\"SG\" "
             "sort=\"union\" gold=\"g" + s + "\">A french union</M> "
             "arrived. </S>";
    case 4:
      return "<S><M id=\"p" + s + "\" det=\"PRON\" num=\"SG\" "
             "sort=\"organization\" gold=\"g" + s + "\">It</M> grew "
             "overnight. </S>";
    default:
      return "<S><M id=\"n" + s + "\" det=\"PROPER\" num=\"SG\" "
             "sort=\"company\" gold=\"g" + s + "\">Acme Corp.</M> reported "
             "<M id=\"r" + s + "\" det=\"POSS_PRON\" num=\"SG\" "
             "sort=\"organization\" poss=\"1\" gold=\"g" + s + "\">its</M> "
             "results. </S>";
  }
}

Document synthetic_doc(int index, int slots) {
  std::string raw = "<DOC id=\"syn" + std::to_string(index) + "\"><P>";
  int code = index;
  for (int slot = 0; slot < slots; ++slot) {
    raw += template_sentence(code % kTemplates, slot);
    code = code / kTemplates + slot + index;  // spread the template mix
  }
  raw += "</P></DOC>";
  return parse_document(raw, synth_heads());
}

int window_of(const Mention &m, const ResolutionConfig &config) {
  if (m.det == DetType::PRON || m.det == DetType::POSS_PRON)
    return config.pronoun_window(m.det);
  return config.window_definite;
}

}  // namespace

int main(int argc, char **argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s DATA_DIR\n", argv[0]);
    return 2;
  }
  const std::string data = std::string(argv[1]) + "/";
  Gate gate;

  // -------------------------------------------------------------------
  // 1. Figure 1 regression with default config and gold features.
  ResolutionResult figure1;
  Document doc = [&] {
    HeadLexicon heads = HeadLexicon::load_file(data + "biz.heads");
    return parse_document(read_file(data + "figure1.sgm"), heads);
  }();
  {
    auto start = Clock::now();
    SortHierarchy sorts = SortHierarchy::load_file(data + "biz.sorts");
    ModifierLexicon mods = ModifierLexicon::load_file(data + "biz.mods");
    NameLexicon names;
    names.load_file(data + "known.names");
    Resolver resolver(sorts, mods, ResolutionConfig{});
    resolver.set_known_names(&names);
    figure1 = resolver.resolve(doc);
    double elapsed = seconds_since(start);

    ChainSet response;
    response.chains = figure1.chains;
    std::vector<TypeRow> rows = per_type_report(doc, response);
    int pron_occ = 0, pron_correct = 0;
    for (const TypeRow &r : rows) {
      if (r.type == "Pronouns") {
        pron_occ = r.occurrences;
        pron_correct = r.correct;
      }
    }

    std::map<std::string, int> index = chain_index(figure1.chains);
    bool exact = same_chain(index, "it_1_1", "m_unit") &&
                 same_chain(index, "its_1_1a", "m_unit") &&
                 same_chain(index, "its_1_1b", "m_unit") &&
                 same_chain(index, "h_its", "h_aa") &&
                 same_chain(index, "she_8_1", "msgibbs_7_1");

    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "pronouns %d/%d, required links %s, %.3fs", pron_correct,
                  pron_occ, exact ? "all present" : "MISSING", elapsed);
    gate.report(1, "figure-1 regression",
                pron_occ == 14 && pron_correct >= 10 && exact &&
                    elapsed < 1.0,
                detail);
  }

  // -------------------------------------------------------------------
  // 2. Trace audit: every destructive merge takes the leftmost surviving
  //    tier-1 candidate; the documented same-sentence misresolutions
  //    follow from exactly that rule.
  {
    ChainSet key = key_chains(doc);
    std::map<std::string, int> key_index = chain_index(key.chains);
    std::map<std::string, int> resp_index = chain_index(figure1.chains);
    std::map<std::string, size_t> order;
    for (size_t i = 0; i < doc.mentions.size(); ++i) {
      order[doc.mentions[i].id] = i;
    }

    int merges = 0;
    int leftmost = 0;
    std::map<std::string, bool> merged;
    for (const TraceLine &line : parse_trace(figure1.trace)) {
      if (line.decision.rfind("merge:", 0) != 0) continue;
      ++merges;
      merged[line.anaphor_id] = true;
      if (line.candidates.empty()) continue;
      bool head = line.decision ==
                  "merge:e" + std::to_string(line.candidates[0].eid);
      bool tier_ok = true;
      for (const Candidate &c : line.candidates) {
        if (static_cast<int>(c.tier) <
            static_cast<int>(line.candidates[0].tier)) {
          tier_ok = false;
        }
      }
      if (head && tier_ok) ++leftmost;
    }

    // An anaphor is correctly resolved iff its response chain holds an
    // earlier mention of its key chain.
    auto correct = [&](const std::string &id) {
      for (const Mention &m : doc.mentions) {
        if (m.id == id || order[m.id] >= order[id]) continue;
        if (same_chain(key_index, m.id, id) &&
            same_chain(resp_index, m.id, id)) {
          return true;
        }
      }
      return false;
    };
    bool reproduced = merged["it_3_1"] && merged["its_7_1"] &&
                      !correct("it_3_1") && !correct("its_7_1");

    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "%d/%d merges leftmost-tier-1, 3-1/7-1 failures %s",
                  leftmost, merges, reproduced ? "reproduced" : "MISSING");
    gate.report(2, "trace audit", merges > 0 && leftmost == merges &&
                reproduced, detail);
  }

  // -------------------------------------------------------------------
  // 3. Filter unit suite.
  {
    SortHierarchy sorts = SortHierarchy::load_file(data + "biz.sorts");
    ModifierLexicon mods = ModifierLexicon::load_file(data + "biz.mods");
    auto sort_ok = [&](const std::string &anaphor, const std::string &ante) {
      SortRelation rel = sorts.relation(anaphor, ante);
      return rel == SortRelation::EQUAL || rel == SortRelation::SUBSUMES;
    };
    bool ok = sort_ok("company", "automaker") &&
              !sort_ok("automaker", "company") &&
              !sort_ok("automaker", "airline");
    ok = ok &&
         number_consistent(NumberValue::count(12), NumberValue::pl(), false,
                           "company", sorts) &&
         !number_consistent(NumberValue::count(12), NumberValue::sg(), false,
                            "company", sorts) &&
         number_consistent(NumberValue::pl(), NumberValue::sg(), true,
                           "organization", sorts);
    ok = ok && !modifier_consistent({"french"}, {"british"}, mods) &&
         modifier_consistent({"french"}, {"multinational"}, mods);
    gate.report(3, "filter unit suite", ok,
                ok ? "all 8 checks hold" : "a check FAILED");
  }

  // -------------------------------------------------------------------
  // 4. Alias suite.
  {
    auto merges = [](const std::vector<std::string> &later,
                     const std::vector<std::string> &first,
                     bool case_normalize = false) {
      NameRegistry reg(case_normalize);
      reg.add(1, first, NameType::UNKNOWN, 0);
      auto hit = reg.find(later, NameType::UNKNOWN);
      return hit.has_value() && hit->eid == 1;
    };
    bool ok = merges({"Colonial"}, {"Colonial", "Beef"}) &&
              merges({"GM"}, {"General", "Motors"}) &&
              merges({"American"}, {"American", "Airlines"}) &&
              merges({"Ms.", "Gibbs"}, {"Patt", "Gibbs"}, true) &&
              !merges({"MG"}, {"General", "Motors"});
    gate.report(4, "alias suite", ok,
                ok ? "all 5 checks hold" : "a check FAILED");
  }

  // -------------------------------------------------------------------
  // 5. Scorer oracle equivalence, exhaustive over universes of size <= 5.
  {
    auto start = Clock::now();
    bool ok = true;
    long pairs = 0;
    int five_set = 0;
    for (int n = 1; n <= 5 && ok; ++n) {
      std::vector<std::vector<int>> partitions = all_partitions(n);
      if (n == 5) five_set = static_cast<int>(partitions.size());
      for (const auto &kl : partitions) {
        ChainSet key = to_chains(kl);
        for (const auto &rl : partitions) {
          ChainSet response = to_chains(rl);
          ScoreReport r = muc_score(response, key);
          ScoreReport swapped = muc_score(key, response);
          ++pairs;
          if (std::fabs(r.recall - oracle_recall(key, response)) > 1e-12 ||
              std::fabs(r.precision - oracle_recall(response, key)) > 1e-12 ||
              std::fabs(swapped.recall - r.precision) > 1e-12 ||
              std::fabs(swapped.precision - r.recall) > 1e-12) {
            ok = false;
          }
        }
      }
    }
    double elapsed = seconds_since(start);
    char detail[120];
    std::snprintf(detail, sizeof(detail),
                  "%ld pairs, 5-set partitions %d, %.3fs", pairs, five_set,
                  elapsed);
    gate.report(5, "scorer oracle", ok && five_set == 52 && elapsed < 10.0,
                detail);
  }

  // -------------------------------------------------------------------
  // 6. Invariants over an enumerated synthetic corpus.
  {
    const int kDocs = 1296;  // 6^4 template combinations
    ResolutionConfig config;
    Resolver resolver(synth_sorts(), synth_modifiers(), config);
    bool ok = true;
    for (int i = 0; i < kDocs && ok; ++i) {
      Document d = synthetic_doc(i, 4);
      ResolutionResult r1 = resolver.resolve(d);
      ResolutionResult r2 = resolver.resolve(d);
      if (r1.chains != r2.chains || r1.trace != r2.trace) ok = false;

      std::map<std::string, const Mention *> by_id;
      for (const Mention &m : d.mentions) by_id[m.id] = &m;

      // Partition soundness.
      std::set<std::string> seen;
      size_t total = 0;
      for (const auto &chain : r1.chains) {
        for (const std::string &id : chain) {
          seen.insert(id);
          ++total;
        }
        // Sort monotonicity: members pairwise compatible.
        for (size_t a = 0; a < chain.size() && ok; ++a) {
          for (size_t b = a + 1; b < chain.size(); ++b) {
            if (synth_sorts().relation(by_id.at(chain[a])->sort,
                                       by_id.at(chain[b])->sort) ==
                SortRelation::DISJOINT) {
              ok = false;
            }
          }
        }
      }
      if (seen.size() != total || seen.size() != d.mentions.size()) ok = false;

      // Window soundness and tier ordering from the trace.
      for (const TraceLine &line : parse_trace(r1.trace)) {
        const Mention &anaphor = *by_id.at(line.anaphor_id);
        int window = window_of(anaphor, config);
        Tier prev = Tier::SAME_SENTENCE;
        for (const Candidate &c : line.candidates) {
          if ((c.tier == Tier::SAME_SENTENCE && c.sentence_distance != 0) ||
              (c.tier == Tier::PREV_SENTENCE && c.sentence_distance != 1) ||
              (c.tier == Tier::EARLIER && c.sentence_distance < 2) ||
              c.sentence_distance > window ||
              static_cast<int>(c.tier) < static_cast<int>(prev)) {
            ok = false;
          }
          prev = c.tier;
        }
        if (!line.candidates.empty() &&
            line.decision.rfind("merge:", 0) == 0 &&
            line.decision !=
                "merge:e" + std::to_string(line.candidates[0].eid)) {
          ok = false;
        }
      }
    }
    char detail[80];
    std::snprintf(detail, sizeof(detail), "%d documents enumerated", 1296);
    gate.report(6, "invariant suite", ok, detail);
  }

  // -------------------------------------------------------------------
  // 7. Throughput: 100 fifty-sentence documents under 5 seconds.
  {
    std::vector<Document> docs;
    docs.reserve(100);
    for (int i = 0; i < 100; ++i) docs.push_back(synthetic_doc(i * 31, 50));
    ResolutionConfig config;
    Resolver resolver(synth_sorts(), synth_modifiers(), config);
    auto start = Clock::now();
    size_t mentions = 0;
    for (const Document &d : docs) {
      ResolutionResult r = resolver.resolve(d);
      for (const auto &chain : r.chains) mentions += chain.size();
    }
    double elapsed = seconds_since(start);
    char detail[100];
    std::snprintf(detail, sizeof(detail),
                  "100 docs x 50 sentences (%zu mentions) in %.3fs", mentions,
                  elapsed);
    gate.report(7, "throughput", elapsed < 5.0 && mentions > 0, detail);
  }

  if (gate.failures > 0) {
    std::printf("acceptance: %d criterion(s) FAILED\n", gate.failures);
    return 1;
  }
  std::printf("acceptance: all 7 criteria passed\n");
  return 0;
}
