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

#ifndef COREF_ONTOLOGY_H_
#define COREF_ONTOLOGY_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "coref/types.h"

namespace coref {

enum class SortRelation { EQUAL, SUBSUMES, SUBSUMED_BY, DISJOINT };

const char *to_string(SortRelation r);

// Single-inheritance subsumption taxonomy. The distinguished sort TOP
// is the implicit parent of every declared root and of unknown heads.
class SortHierarchy {
 public:
  static constexpr const char *kTop = "TOP";

  SortHierarchy();

  // Loads `child < parent` declarations, `#` comments allowed.
  // Throws FormatError on cycles or multi-parent declarations.
  static SortHierarchy load(const std::string &source);
  static SortHierarchy load_file(const std::string &path);

  void add_edge(const std::string &child, const std::string &parent);

  bool contains(const std::string &sort) const;
  // Unknown sorts are canonicalized to TOP.
  std::string canonical(const std::string &sort) const;

  SortRelation relation(const std::string &s1, const std::string &s2) const;

  // True iff ancestor == descendant or ancestor properly subsumes it.
  bool subsumes_or_equal(const std::string &ancestor,
                         const std::string &descendant) const;

  const std::set<std::string> &sorts() const { return sorts_; }

 private:
  std::set<std::string> sorts_;
  std::map<std::string, std::string> parent_;
};

// head string -> sort id lookup; unknown heads map to TOP.
class HeadLexicon {
 public:
  static HeadLexicon load(const std::string &source);
  static HeadLexicon load_file(const std::string &path);

  void add(const std::string &head, const std::string &sort);
  // Tries the exact head, then a naive singular (trailing 's' stripped).
  std::string sort_of(const std::string &head) const;

 private:
  std::map<std::string, std::string> sort_;
};

// Flat incompatibility classes of mutually exclusive modifiers.
class ModifierLexicon {
 public:
  static ModifierLexicon load(const std::string &source);
  static ModifierLexicon load_file(const std::string &path);

  void add_class(const std::vector<std::string> &members);
  // -1 when the modifier is unknown to the lexicon.
  int class_of(const std::string &modifier) const;

 private:
  std::vector<std::set<std::string>> classes_;
  std::map<std::string, int> index_;
};

// Joint satisfiability of two number values. EXACT(1) is consistent
// with SG, EXACT(n>1) with PL, UNKNOWN with everything. As a special
// case a plural pronoun anaphor may take a singular antecedent whose
// sort falls under the organization sort.
bool number_consistent(const NumberValue &n1, const NumberValue &n2,
                       bool anaphor_is_plural_pronoun,
                       const std::string &antecedent_sort,
                       const SortHierarchy &h,
                       const std::string &org_sort_name = "organization");

// False iff some modifier on each side belongs to the same
// incompatibility class but differs; permissive on unknown modifiers.
bool modifier_consistent(const std::vector<std::string> &mods1,
                         const std::vector<std::string> &mods2,
                         const ModifierLexicon &lex);

}  // namespace coref

#endif  // COREF_ONTOLOGY_H_
