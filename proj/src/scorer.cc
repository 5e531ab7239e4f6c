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
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace coref {

namespace {

// mention id -> index of its chain within the set; ids absent from every
// chain are implicit singletons.
std::map<std::string, int> chain_index(const ChainSet &set) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < set.chains.size(); ++i) {
    for (const std::string &id : set.chains[i]) {
      index[id] = static_cast<int>(i);
    }
  }
  return index;
}

// One side of the MUC metric: links in `gold` recovered by `proposed`.
// Returns {numerator, denominator}.
std::pair<int, int> muc_side(const ChainSet &gold, const ChainSet &proposed) {
  std::map<std::string, int> index = chain_index(proposed);
  int num = 0;
  int den = 0;
  for (const std::vector<std::string> &chain : gold.chains) {
    if (chain.size() < 2) continue;
    std::set<int> parts;
    int singletons = 0;
    for (const std::string &id : chain) {
      auto it = index.find(id);
      if (it == index.end()) {
        ++singletons;  // unmentioned ids partition alone
      } else {
        parts.insert(it->second);
      }
    }
    int partition = static_cast<int>(parts.size()) + singletons;
    num += static_cast<int>(chain.size()) - partition;
    den += static_cast<int>(chain.size()) - 1;
  }
  return {num, den};
}

std::string type_name(const Mention &m) {
  if (m.possessed) return "Possessed Nominals";
  switch (m.det) {
    case DetType::DEF: return "Definites";
    case DetType::PRON:
    case DetType::POSS_PRON: return "Pronouns";
    case DetType::REFLEXIVE: return "Reflexives";
    case DetType::PROPER: return "Proper Names";
    case DetType::BARE: return "Bare Nominals";
    case DetType::INDEF:
    case DetType::QUANT: return "Indefinites";
  }
  return "Other";
}

const std::vector<std::string> &type_order() {
  static const std::vector<std::string> order = {
      "Definites",      "Pronouns",           "Proper Names", "Reflexives",
      "Bare Nominals",  "Possessed Nominals", "Indefinites"};
  return order;
}

}  // namespace

void ChainSet::validate() const {
  std::set<std::string> seen;
  for (const std::vector<std::string> &chain : chains) {
    if (chain.empty()) throw FormatError("empty chain");
    for (const std::string &id : chain) {
      if (!seen.insert(id).second) {
        throw FormatError("mention in two chains: " + id);
      }
    }
  }
}

ScoreReport muc_score(const ChainSet &response, const ChainSet &key) {
  response.validate();
  key.validate();
  ScoreReport report;

  auto [rn, rd] = muc_side(key, response);
  auto [pn, pd] = muc_side(response, key);
  if (rd == 0) {
    report.recall = 1.0;
    report.recall_by_convention = true;
  } else {
    report.recall = static_cast<double>(rn) / rd;
  }
  if (pd == 0) {
    report.precision = 1.0;
    report.precision_by_convention = true;
  } else {
    report.precision = static_cast<double>(pn) / pd;
  }
  double sum = report.recall + report.precision;
  report.f1 = sum == 0.0 ? 0.0 : 2.0 * report.recall * report.precision / sum;
  return report;
}

ChainSet key_chains(const Document &doc) {
  // Identity links only; order chains by first mention in the document,
  // unannotated mentions become singletons.
  std::map<std::string, std::vector<std::string>> by_gold;
  std::vector<std::string> order;
  ChainSet set;
  for (const Mention &m : doc.mentions) {
    if (m.gold_chain.empty()) {
      set.chains.push_back({m.id});
      order.push_back("");
      continue;
    }
    auto it = by_gold.find(m.gold_chain);
    if (it == by_gold.end()) {
      by_gold[m.gold_chain].push_back(m.id);
      set.chains.push_back({});
      order.push_back(m.gold_chain);
    } else {
      it->second.push_back(m.id);
    }
  }
  for (size_t i = 0; i < set.chains.size(); ++i) {
    if (!order[i].empty()) set.chains[i] = by_gold[order[i]];
  }
  return set;
}

std::vector<TypeRow> per_type_report(const Document &doc,
                                     const ChainSet &response) {
  response.validate();
  std::map<std::string, int> resp_index = chain_index(response);

  // Document position of each mention id.
  std::map<std::string, size_t> pos;
  for (size_t i = 0; i < doc.mentions.size(); ++i) {
    pos[doc.mentions[i].id] = i;
  }

  // Key chain membership and the chain-initial mention per gold id.
  std::map<std::string, std::vector<std::string>> gold_members;
  for (const Mention &m : doc.mentions) {
    if (!m.gold_chain.empty()) gold_members[m.gold_chain].push_back(m.id);
  }

  std::map<std::string, TypeRow> rows;
  for (const std::string &name : type_order()) {
    rows[name].type = name;
  }

  for (const Mention &m : doc.mentions) {
    if (m.gold_chain.empty()) continue;
    const std::vector<std::string> &members = gold_members[m.gold_chain];
    bool initial = members.front() == m.id;
    TypeRow &row = rows[type_name(m)];
    if (initial) {
      // A chain-initial mention is an anaphoric occurrence only when it
      // carries a non-identity gold link; those are never scored.
      if (m.gold_rel != "ident" && !m.gold_rel.empty()) {
        ++row.occurrences;
        ++row.unscored;
      }
      continue;
    }
    ++row.occurrences;
    auto ri = resp_index.find(m.id);
    if (ri == resp_index.end()) continue;  // response singleton
    const std::vector<std::string> &resp = response.chains[ri->second];
    std::set<std::string> key_ids(members.begin(), members.end());
    for (const std::string &other : resp) {
      if (other == m.id) continue;
      if (key_ids.count(other) == 0) continue;
      if (pos.at(other) < pos.at(m.id)) {
        ++row.correct;
        break;
      }
    }
  }

  std::vector<TypeRow> out;
  for (const std::string &name : type_order()) out.push_back(rows[name]);
  return out;
}

std::string format_chains(const ChainSet &set) {
  std::ostringstream out;
  for (const std::vector<std::string> &chain : set.chains) {
    for (size_t i = 0; i < chain.size(); ++i) {
      if (i > 0) out << ' ';
      out << chain[i];
    }
    out << '\n';
  }
  return out.str();
}

ChainSet parse_chains(const std::string &text) {
  ChainSet set;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> chain;
    std::string id;
    while (fields >> id) chain.push_back(id);
    if (!chain.empty()) set.chains.push_back(std::move(chain));
  }
  set.validate();
  return set;
}

std::string format_type_table(const std::vector<TypeRow> &rows) {
  size_t width = std::string("Expression Type").size();
  for (const TypeRow &row : rows) width = std::max(width, row.type.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width) + 2)
      << "Expression Type" << std::right << std::setw(21)
      << "Number of Occurrences" << std::setw(20) << "Correctly Resolved"
      << '\n';
  for (const TypeRow &row : rows) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << row.type
        << std::right << std::setw(21) << row.occurrences << std::setw(20)
        << row.correct;
    if (row.unscored > 0) out << "  (" << row.unscored << " unscored)";
    out << '\n';
  }
  return out.str();
}

std::string format_type_tsv(const std::vector<TypeRow> &rows) {
  std::ostringstream out;
  out << "type\toccurrences\tcorrect\tunscored\n";
  for (const TypeRow &row : rows) {
    out << row.type << '\t' << row.occurrences << '\t' << row.correct << '\t'
        << row.unscored << '\n';
  }
  return out.str();
}

std::string format_score(const ScoreReport &report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "recall    " << report.recall;
  if (report.recall_by_convention) out << " (by convention)";
  out << "\nprecision " << report.precision;
  if (report.precision_by_convention) out << " (by convention)";
  out << "\nf1        " << report.f1 << '\n';
  return out.str();
}

}  // namespace coref
