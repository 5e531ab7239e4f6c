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

#include "coref/ontology.h"

#include <fstream>
#include <sstream>

#include "coref/mention.h"

namespace coref {

namespace {

std::string trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string strip_comment(const std::string &line) {
  size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

const char *to_string(SortRelation r) {
  switch (r) {
    case SortRelation::EQUAL: return "EQUAL";
    case SortRelation::SUBSUMES: return "SUBSUMES";
    case SortRelation::SUBSUMED_BY: return "SUBSUMED_BY";
    case SortRelation::DISJOINT: return "DISJOINT";
  }
  return "?";
}

SortHierarchy::SortHierarchy() { sorts_.insert(kTop); }

void SortHierarchy::add_edge(const std::string &child, const std::string &parent) {
  if (child == kTop) throw FormatError("TOP cannot have a parent");
  auto existing = parent_.find(child);
  if (existing != parent_.end() && existing->second != parent) {
    throw FormatError("multiple parents declared for sort: " + child);
  }
  // Reject cycles before inserting the edge.
  std::string cursor = parent;
  while (cursor != kTop) {
    if (cursor == child) throw FormatError("cycle detected at sort: " + child);
    auto it = parent_.find(cursor);
    if (it == parent_.end()) break;
    cursor = it->second;
  }
  parent_[child] = parent;
  sorts_.insert(child);
  sorts_.insert(parent);
}

SortHierarchy SortHierarchy::load(const std::string &source) {
  SortHierarchy h;
  std::istringstream in(source);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    size_t lt = line.find('<');
    if (lt == std::string::npos) {
      throw FormatError("expected `child < parent` at line " +
                        std::to_string(lineno));
    }
    std::string child = trim(line.substr(0, lt));
    std::string parent = trim(line.substr(lt + 1));
    if (child.empty() || parent.empty()) {
      throw FormatError("expected `child < parent` at line " +
                        std::to_string(lineno));
    }
    h.add_edge(child, parent);
  }
  return h;
}

SortHierarchy SortHierarchy::load_file(const std::string &path) {
  return load(read_file(path));
}

bool SortHierarchy::contains(const std::string &sort) const {
  return sorts_.count(sort) > 0;
}

std::string SortHierarchy::canonical(const std::string &sort) const {
  if (sort.empty() || !contains(sort)) return kTop;
  return sort;
}

SortRelation SortHierarchy::relation(const std::string &s1,
                                     const std::string &s2) const {
  std::string a = canonical(s1);
  std::string b = canonical(s2);
  if (a == b) return SortRelation::EQUAL;
  if (subsumes_or_equal(a, b)) return SortRelation::SUBSUMES;
  if (subsumes_or_equal(b, a)) return SortRelation::SUBSUMED_BY;
  return SortRelation::DISJOINT;
}

bool SortHierarchy::subsumes_or_equal(const std::string &ancestor,
                                      const std::string &descendant) const {
  std::string a = canonical(ancestor);
  std::string cursor = canonical(descendant);
  while (true) {
    if (cursor == a) return true;
    if (cursor == kTop) return false;
    auto it = parent_.find(cursor);
    cursor = it == parent_.end() ? kTop : it->second;
  }
}

HeadLexicon HeadLexicon::load(const std::string &source) {
  HeadLexicon lex;
  std::istringstream in(source);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos) {
      throw FormatError("expected `head : sort` at line " +
                        std::to_string(lineno));
    }
    lex.add(trim(line.substr(0, colon)), trim(line.substr(colon + 1)));
  }
  return lex;
}

HeadLexicon HeadLexicon::load_file(const std::string &path) {
  return load(read_file(path));
}

void HeadLexicon::add(const std::string &head, const std::string &sort) {
  sort_[lowercase(head)] = sort;
}

std::string HeadLexicon::sort_of(const std::string &head) const {
  std::string h = lowercase(head);
  auto it = sort_.find(h);
  if (it != sort_.end()) return it->second;
  if (h.size() > 1 && h.back() == 's') {
    it = sort_.find(h.substr(0, h.size() - 1));
    if (it != sort_.end()) return it->second;
    // -ies plural (companies -> company).
    if (h.size() > 3 && h.compare(h.size() - 3, 3, "ies") == 0) {
      it = sort_.find(h.substr(0, h.size() - 3) + "y");
      if (it != sort_.end()) return it->second;
    }
  }
  return SortHierarchy::kTop;
}

ModifierLexicon ModifierLexicon::load(const std::string &source) {
  ModifierLexicon lex;
  std::istringstream in(source);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    std::vector<std::string> members;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      field = trim(field);
      if (!field.empty()) members.push_back(field);
    }
    if (!members.empty()) lex.add_class(members);
  }
  return lex;
}

ModifierLexicon ModifierLexicon::load_file(const std::string &path) {
  return load(read_file(path));
}

void ModifierLexicon::add_class(const std::vector<std::string> &members) {
  int id = static_cast<int>(classes_.size());
  classes_.emplace_back();
  for (const std::string &m : members) {
    std::string key = lowercase(m);
    classes_.back().insert(key);
    index_[key] = id;
  }
}

int ModifierLexicon::class_of(const std::string &modifier) const {
  auto it = index_.find(lowercase(modifier));
  return it == index_.end() ? -1 : it->second;
}

bool number_consistent(const NumberValue &n1, const NumberValue &n2,
                       bool anaphor_is_plural_pronoun,
                       const std::string &antecedent_sort,
                       const SortHierarchy &h,
                       const std::string &org_sort_name) {
  auto plural = [](const NumberValue &n) {
    return n.kind == NumberValue::PL ||
           (n.kind == NumberValue::EXACT && n.exact > 1);
  };
  auto singular = [](const NumberValue &n) {
    return n.kind == NumberValue::SG ||
           (n.kind == NumberValue::EXACT && n.exact == 1);
  };
  bool base;
  if (n1.kind == NumberValue::UNKNOWN || n2.kind == NumberValue::UNKNOWN) {
    base = true;
  } else if (n1.kind == NumberValue::EXACT && n2.kind == NumberValue::EXACT) {
    base = n1.exact == n2.exact;
  } else {
    base = (plural(n1) && plural(n2)) || (singular(n1) && singular(n2));
  }
  if (base) return true;
  // Plural pronouns (they, we) can take singular organization antecedents.
  return anaphor_is_plural_pronoun && singular(n2) &&
         h.subsumes_or_equal(org_sort_name, antecedent_sort) &&
         antecedent_sort != SortHierarchy::kTop;
}

bool modifier_consistent(const std::vector<std::string> &mods1,
                         const std::vector<std::string> &mods2,
                         const ModifierLexicon &lex) {
  for (const std::string &m1 : mods1) {
    int c1 = lex.class_of(m1);
    if (c1 < 0) continue;
    for (const std::string &m2 : mods2) {
      if (lex.class_of(m2) == c1 && lowercase(m1) != lowercase(m2)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace coref
