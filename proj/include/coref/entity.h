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

#ifndef COREF_ENTITY_H_
#define COREF_ENTITY_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "coref/document.h"
#include "coref/ontology.h"

namespace coref {

// Merged entity object aggregating all mentions of one referent.
// Its current position is always its most recent mention.
struct DiscourseEntity {
  int eid = 0;
  std::vector<int> mentions;  // mention indices, sorted by span start
  std::string sort;           // most specific sort among members
  NumberValue number;         // most specific number among members
  std::set<std::string> names;  // PROPER surface strings
  std::set<std::string> modifiers;
  bool retired = false;

  int current_mention() const { return mentions.back(); }
};

// Per-document entity set for one resolution pass.
class EntityStore {
 public:
  explicit EntityStore(const Document &doc) : doc_(&doc) {}

  // Creates a singleton entity for a non-pleonastic mention.
  int new_entity(int mention_index);

  // Merges the anaphor entity into the antecedent entity. The anaphor's
  // eid is retired and thereafter maps to the antecedent's. Merging an
  // entity with itself is a no-op. Returns the surviving eid.
  int merge(int anaphor_eid, int antecedent_eid, const SortHierarchy &h);

  // Follows retirement links to the surviving entity id.
  int resolve_eid(int eid) const;

  const DiscourseEntity &entity(int eid) const { return entities_.at(eid); }
  DiscourseEntity &entity(int eid) { return entities_.at(eid); }

  // eids of live (unretired) entities, ascending.
  std::vector<int> live_entities() const;

  int entity_of_mention(int mention_index) const;
  bool mention_has_entity(int mention_index) const;

  const Document &doc() const { return *doc_; }

  // Partition of non-pleonastic mention ids by surviving entity,
  // ordered by first mention.
  std::vector<std::vector<std::string>> chains() const;

 private:
  const Document *doc_;
  std::map<int, DiscourseEntity> entities_;
  std::map<int, int> forwarded_;        // retired eid -> surviving eid
  std::map<int, int> mention_entity_;   // mention index -> eid at creation
  int next_eid_ = 1;
};

// Picks the more specific of two sorts; post-filter they are related by
// EQUAL or subsumption, but DISJOINT inputs fall back to the first.
std::string more_specific_sort(const std::string &a, const std::string &b,
                               const SortHierarchy &h);

// EXACT beats SG/PL beats UNKNOWN; ties keep the first argument.
NumberValue more_specific_number(const NumberValue &a, const NumberValue &b);

}  // namespace coref

#endif  // COREF_ENTITY_H_
