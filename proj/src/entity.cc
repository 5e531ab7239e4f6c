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

#include "coref/entity.h"

#include <algorithm>

namespace coref {

std::string more_specific_sort(const std::string &a, const std::string &b,
                               const SortHierarchy &h) {
  switch (h.relation(a, b)) {
    case SortRelation::EQUAL:
    case SortRelation::SUBSUMED_BY:
    case SortRelation::DISJOINT:
      return h.canonical(a);
    case SortRelation::SUBSUMES:
      return h.canonical(b);
  }
  return h.canonical(a);
}

NumberValue more_specific_number(const NumberValue &a, const NumberValue &b) {
  auto rank = [](const NumberValue &n) {
    switch (n.kind) {
      case NumberValue::EXACT: return 2;
      case NumberValue::SG:
      case NumberValue::PL: return 1;
      case NumberValue::UNKNOWN: return 0;
    }
    return 0;
  };
  return rank(b) > rank(a) ? b : a;
}

int EntityStore::new_entity(int mention_index) {
  const Mention &m = doc_->mentions[mention_index];
  DiscourseEntity e;
  e.eid = next_eid_++;
  e.mentions.push_back(mention_index);
  e.sort = m.sort;
  e.number = m.number;
  e.modifiers.insert(m.modifiers.begin(), m.modifiers.end());
  if (m.det == DetType::PROPER) e.names.insert(m.surface);
  entities_[e.eid] = e;
  mention_entity_[mention_index] = e.eid;
  return e.eid;
}

int EntityStore::resolve_eid(int eid) const {
  auto it = forwarded_.find(eid);
  while (it != forwarded_.end()) {
    eid = it->second;
    it = forwarded_.find(eid);
  }
  return eid;
}

int EntityStore::merge(int anaphor_eid, int antecedent_eid,
                       const SortHierarchy &h) {
  anaphor_eid = resolve_eid(anaphor_eid);
  antecedent_eid = resolve_eid(antecedent_eid);
  if (anaphor_eid == antecedent_eid) return antecedent_eid;

  DiscourseEntity &from = entities_.at(anaphor_eid);
  DiscourseEntity &into = entities_.at(antecedent_eid);

  std::vector<int> merged;
  merged.reserve(from.mentions.size() + into.mentions.size());
  std::merge(into.mentions.begin(), into.mentions.end(),
             from.mentions.begin(), from.mentions.end(),
             std::back_inserter(merged), [this](int a, int b) {
               return doc_->mentions[a].span.start < doc_->mentions[b].span.start;
             });
  into.mentions = std::move(merged);
  into.sort = more_specific_sort(into.sort, from.sort, h);
  into.number = more_specific_number(into.number, from.number);
  into.names.insert(from.names.begin(), from.names.end());
  into.modifiers.insert(from.modifiers.begin(), from.modifiers.end());

  from.retired = true;
  forwarded_[anaphor_eid] = antecedent_eid;
  entities_.erase(anaphor_eid);
  return antecedent_eid;
}

std::vector<int> EntityStore::live_entities() const {
  std::vector<int> out;
  out.reserve(entities_.size());
  for (const auto &[eid, e] : entities_) out.push_back(eid);
  return out;
}

int EntityStore::entity_of_mention(int mention_index) const {
  auto it = mention_entity_.find(mention_index);
  if (it == mention_entity_.end()) return -1;
  return resolve_eid(it->second);
}

bool EntityStore::mention_has_entity(int mention_index) const {
  return mention_entity_.count(mention_index) > 0;
}

std::vector<std::vector<std::string>> EntityStore::chains() const {
  std::vector<std::pair<size_t, std::vector<std::string>>> keyed;
  for (const auto &[eid, e] : entities_) {
    std::vector<std::string> chain;
    chain.reserve(e.mentions.size());
    for (int idx : e.mentions) chain.push_back(doc_->mentions[idx].id);
    keyed.emplace_back(doc_->mentions[e.mentions.front()].span.start,
                       std::move(chain));
  }
  // Deterministic output: order chains by their first mention's span.
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<std::string>> out;
  out.reserve(keyed.size());
  for (auto &[start, chain] : keyed) out.push_back(std::move(chain));
  return out;
}

}  // namespace coref
