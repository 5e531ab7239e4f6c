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

#include "coref/resolver.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "coref/pleonastic.h"

namespace coref {

namespace {

constexpr int kUnlimited = 1 << 28;

// Window in sentences for an expression type: the entire preceding text
// for proper names, narrower for definites, even narrower for pronouns,
// and only the current sentence for reflexives.
int window_for(const Mention &m, const ResolutionConfig &cfg) {
  switch (m.det) {
    case DetType::PROPER:
      return kUnlimited;
    case DetType::REFLEXIVE:
      return 0;  // not configurable
    case DetType::PRON:
    case DetType::POSS_PRON:
      return cfg.disable_window ? kUnlimited : cfg.pronoun_window(m.det);
    default:
      return cfg.disable_window ? kUnlimited : cfg.window_definite;
  }
}

const char *tier_code(Tier t) {
  switch (t) {
    case Tier::SAME_SENTENCE: return "S";
    case Tier::PREV_SENTENCE: return "P";
    case Tier::EARLIER: return "E";
  }
  return "?";
}

}  // namespace

bool is_anaphoric(const Mention &m) {
  if (m.pleonastic) return false;
  switch (m.det) {
    case DetType::DEF:
    case DetType::PRON:
    case DetType::POSS_PRON:
    case DetType::REFLEXIVE:
    case DetType::PROPER:
      return true;
    default:
      return false;
  }
}

CandidateList Resolver::collect(const Document &doc, const EntityStore &store,
                                const Mention &m, int anaphor_eid) const {
  CandidateList in_window;
  bool headline = m.region == RegionKind::HEADLINE;
  int window = window_for(m, config_);
  bool cataphora = m.person == Person::FIRST && m.is_pronoun();

  // Most recent entity beyond the window, for the soft-window option.
  int beyond_eid = -1;
  Span beyond_pos{};
  int beyond_dist = 0;

  for (int eid : store.live_entities()) {
    if (eid == anaphor_eid) continue;
    const DiscourseEntity &e = store.entity(eid);
    const Mention &cm = doc.mentions[e.current_mention()];

    Candidate c;
    c.eid = eid;
    c.position = cm.span;

    if (headline) {
      if (cm.region == RegionKind::HEADLINE) {
        if (!config_.headline_to_headline) continue;
        if (cm.span.end > m.span.start) continue;
        c.tier = Tier::SAME_SENTENCE;
      } else {
        c.tier = Tier::EARLIER;
      }
      c.sentence_distance = 0;  // headline anaphors have no window
      in_window.push_back(c);
      continue;
    }

    if (cm.region != RegionKind::TEXT) continue;
    int dist = m.pos.global_no - cm.pos.global_no;
    if (dist < 0) continue;
    bool precedes = cm.span.end <= m.span.start;
    if (!precedes && !(cataphora && dist == 0)) continue;
    c.sentence_distance = dist;
    c.tier = dist == 0   ? Tier::SAME_SENTENCE
             : dist == 1 ? Tier::PREV_SENTENCE
                         : Tier::EARLIER;
    if (dist > window) {
      if (config_.soft_window &&
          (beyond_eid < 0 || dist < beyond_dist ||
           (dist == beyond_dist && cm.span.start > beyond_pos.start))) {
        beyond_eid = eid;
        beyond_pos = cm.span;
        beyond_dist = dist;
      }
      continue;
    }
    in_window.push_back(c);
  }

  if (in_window.empty() && beyond_eid >= 0) {
    // At most one candidate beyond the limit when none are found within.
    Candidate c;
    c.eid = beyond_eid;
    c.position = beyond_pos;
    c.sentence_distance = beyond_dist;
    c.tier = Tier::EARLIER;
    in_window.push_back(c);
  }
  return in_window;
}

CandidateList Resolver::filter(const EntityStore &store, const Mention &m,
                               const DiscourseEntity &anaphor,
                               const CandidateList &candidates) const {
  CandidateList kept;
  std::vector<std::string> anaphor_mods(anaphor.modifiers.begin(),
                                        anaphor.modifiers.end());
  for (const Candidate &c : candidates) {
    const DiscourseEntity &e = store.entity(c.eid);
    if (!config_.disable_number_filter &&
        !number_consistent(anaphor.number, e.number, m.is_plural_pronoun(),
                           e.sort, *sorts_, config_.org_sort_name)) {
      continue;
    }
    if (!config_.disable_sort_filter) {
      SortRelation rel = sorts_->relation(anaphor.sort, e.sort);
      if (rel != SortRelation::EQUAL && rel != SortRelation::SUBSUMES) continue;
    }
    if (!config_.disable_modifier_filter) {
      std::vector<std::string> mods(e.modifiers.begin(), e.modifiers.end());
      if (!modifier_consistent(anaphor_mods, mods, *modifiers_)) continue;
    }
    kept.push_back(c);
  }
  return kept;
}

void Resolver::order(CandidateList &candidates) const {
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &a, const Candidate &b) {
              if (a.tier != b.tier) return a.tier < b.tier;
              if (a.tier == Tier::EARLIER) {
                // Other preceding sentences in right-left order: most
                // recent sentence first, right-to-left within it.
                if (a.position.start != b.position.start) {
                  return a.position.start > b.position.start;
                }
              } else if (a.position.start != b.position.start) {
                return a.position.start < b.position.start;
              }
              return a.eid < b.eid;
            });
}

namespace {

// Ordering used for a HEADLINE anaphor: earlier headline mentions
// left-to-right first, then the whole TEXT left-to-right.
void order_headline(CandidateList &candidates) {
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &a, const Candidate &b) {
              if (a.tier != b.tier) return a.tier < b.tier;
              if (a.position.start != b.position.start) {
                return a.position.start < b.position.start;
              }
              return a.eid < b.eid;
            });
}

struct SentenceMentions {
  int sentence_index;
  std::vector<int> mentions;  // mention indices, left to right
};

NameType name_type_of(const Mention &m, const SortHierarchy &sorts,
                      const std::string &org_sort,
                      const NameLexicon *names,
                      const std::vector<std::string> &tokens) {
  if (sorts.subsumes_or_equal("person", m.sort) &&
      m.sort != SortHierarchy::kTop) {
    return NameType::PERSON;
  }
  if (sorts.subsumes_or_equal("location", m.sort) &&
      m.sort != SortHierarchy::kTop) {
    return NameType::LOCATION;
  }
  if (sorts.subsumes_or_equal(org_sort, m.sort) &&
      m.sort != SortHierarchy::kTop) {
    return NameType::ORGANIZATION;
  }
  if (names != nullptr) return names->type_of(tokens);
  return NameType::UNKNOWN;
}

}  // namespace

ResolutionResult Resolver::resolve(const Document &doc) const {
  EntityStore store(doc);
  NameRegistry registry(config_.case_normalize_names, config_.acronym_min_len);
  ResolutionResult result;
  std::ostringstream trace;

  // Mentions grouped by sentence, left to right.
  std::vector<SentenceMentions> groups;
  {
    std::vector<std::vector<int>> by_sentence(doc.sentences.size());
    for (size_t i = 0; i < doc.mentions.size(); ++i) {
      by_sentence[doc.mentions[i].sentence_index].push_back(
          static_cast<int>(i));
    }
    // TEXT sentences in order; HEADLINE after the full TEXT has been
    // read, since its antecedents lie in the following text.
    for (int s : doc.body_sentences) {
      groups.push_back({s, by_sentence[s]});
    }
    for (int s : doc.headline_sentences) {
      groups.push_back({s, by_sentence[s]});
    }
  }

  auto emit_trace = [&trace](const std::string &id, const CandidateList &cands,
                             const std::string &decision) {
    TraceLine line{id, cands, decision};
    trace << format_trace_line(line) << '\n';
  };

  // Appositive recognition: adjacent comma-delimited co-typed nominals.
  auto appositive_antecedent = [&](int mention_index) -> int {
    const Mention &m = doc.mentions[mention_index];
    int best = -1;
    for (size_t i = 0; i < doc.mentions.size(); ++i) {
      const Mention &p = doc.mentions[i];
      if (p.sentence_index != m.sentence_index) continue;
      if (p.span.end > m.span.start) continue;
      if (best < 0 || p.span.end > doc.mentions[best].span.end) {
        best = static_cast<int>(i);
      }
    }
    if (best < 0) return -1;
    const Mention &p = doc.mentions[best];
    if (p.is_pronoun()) return -1;
    std::string gap = doc.text.substr(p.span.end, m.span.start - p.span.end);
    if (gap.empty() || gap[0] != ',') return -1;
    for (size_t i = 1; i < gap.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(gap[i]))) return -1;
    }
    if (!store.mention_has_entity(best)) return -1;
    if (sorts_->relation(m.sort, p.sort) == SortRelation::DISJOINT) return -1;
    const DiscourseEntity &pe = store.entity(store.entity_of_mention(best));
    if (!number_consistent(m.number, pe.number, false, pe.sort, *sorts_,
                           config_.org_sort_name)) {
      return -1;
    }
    return store.entity_of_mention(best);
  };

  int headline_order = static_cast<int>(doc.body_sentences.size());

  for (const SentenceMentions &group : groups) {
    const Sentence &sentence = doc.sentences[group.sentence_index];
    int sentence_order = sentence.region == RegionKind::HEADLINE
                             ? headline_order
                             : sentence.pos.global_no;

    // Name alias recognition runs first for each new sentence.
    for (int mi : group.mentions) {
      const Mention &m = doc.mentions[mi];
      if (m.det != DetType::PROPER) continue;
      std::vector<std::string> tokens = tokenize(m.surface);
      NameType type =
          name_type_of(m, *sorts_, config_.org_sort_name, names_, tokens);
      int eid = store.new_entity(mi);
      auto match = registry.find(tokens, type);
      if (match.has_value()) {
        int survivor = store.merge(eid, match->eid, *sorts_);
        registry.note_mention(match->eid, survivor, sentence_order);
        registry.add(survivor, tokens, match->adopted_type, sentence_order);
        ResolutionOutcome outcome;
        outcome.anaphor_id = m.id;
        outcome.kind = ResolutionOutcome::MERGED;
        outcome.merged_into = survivor;
        result.outcomes.push_back(outcome);
        emit_trace(m.id, {}, "alias:e" + std::to_string(survivor));
      } else {
        registry.add(eid, tokens, type, sentence_order);
        ResolutionOutcome outcome;
        outcome.anaphor_id = m.id;
        outcome.kind = ResolutionOutcome::UNRESOLVED;
        result.outcomes.push_back(outcome);
        emit_trace(m.id, {}, "unresolved");
      }
    }

    // Fresh entities for non-anaphoric nominals, so that cataphora and
    // appositives can reach them.
    for (int mi : group.mentions) {
      const Mention &m = doc.mentions[mi];
      if (m.det != DetType::INDEF && m.det != DetType::BARE &&
          m.det != DetType::QUANT) {
        continue;
      }
      int apo = appositive_antecedent(mi);
      int eid = store.new_entity(mi);
      if (apo >= 0) {
        int survivor = store.merge(eid, apo, *sorts_);
        emit_trace(m.id, {}, "appositive:e" + std::to_string(survivor));
      }
    }

    // General resolution, left to right.
    for (int mi : group.mentions) {
      Mention m = doc.mentions[mi];  // copy: pleonastic flag is local
      if (m.det != DetType::DEF && m.det != DetType::PRON &&
          m.det != DetType::POSS_PRON && m.det != DetType::REFLEXIVE) {
        continue;
      }
      if (m.det == DetType::PRON) {
        size_t offset = m.span.start - sentence.span.start;
        if (detect_pleonastic(m, doc.sentence_text(group.sentence_index),
                              offset)) {
          emit_trace(m.id, {}, "pleonastic");
          continue;  // no associated entity
        }
      }
      int eid = store.new_entity(mi);
      if (m.det == DetType::DEF) {
        int apo = appositive_antecedent(mi);
        if (apo >= 0 && store.resolve_eid(apo) != eid) {
          int survivor = store.merge(eid, apo, *sorts_);
          ResolutionOutcome outcome;
          outcome.anaphor_id = m.id;
          outcome.kind = ResolutionOutcome::MERGED;
          outcome.merged_into = survivor;
          result.outcomes.push_back(outcome);
          emit_trace(m.id, {}, "appositive:e" + std::to_string(survivor));
          continue;
        }
      }

      CandidateList candidates = collect(doc, store, m, eid);
      candidates = filter(store, m, store.entity(eid), candidates);
      if (m.region == RegionKind::HEADLINE) {
        order_headline(candidates);
      } else {
        order(candidates);
      }

      ResolutionOutcome outcome;
      outcome.anaphor_id = m.id;
      if (candidates.empty()) {
        outcome.kind = ResolutionOutcome::UNRESOLVED;
        result.outcomes.push_back(outcome);
        emit_trace(m.id, candidates, "unresolved");
        continue;
      }
      int target = candidates.front().eid;
      int survivor = store.merge(eid, target, *sorts_);
      if (config_.destructive) {
        outcome.kind = ResolutionOutcome::MERGED;
        outcome.merged_into = target;
        result.outcomes.push_back(outcome);
        emit_trace(m.id, candidates, "merge:e" + std::to_string(target));
      } else {
        outcome.kind = ResolutionOutcome::RANKED;
        for (const Candidate &c : candidates) outcome.ranked.push_back(c.eid);
        result.outcomes.push_back(outcome);
        std::string ids;
        for (const Candidate &c : candidates) {
          if (!ids.empty()) ids.push_back(',');
          ids += "e" + std::to_string(c.eid);
        }
        emit_trace(m.id, candidates, "record:" + ids);
      }
      (void)survivor;
    }
  }

  result.chains = store.chains();
  result.trace = trace.str();
  return result;
}

std::string format_trace_line(const TraceLine &line) {
  std::ostringstream out;
  out << line.anaphor_id << '\t';
  bool any = false;
  Tier tiers[] = {Tier::SAME_SENTENCE, Tier::PREV_SENTENCE, Tier::EARLIER};
  bool first_tier = true;
  for (Tier t : tiers) {
    std::string entries;
    for (const Candidate &c : line.candidates) {
      if (c.tier != t) continue;
      if (!entries.empty()) entries.push_back(',');
      entries += "e" + std::to_string(c.eid) + "@" +
                 std::to_string(c.sentence_distance);
    }
    if (entries.empty()) continue;
    if (!first_tier) out << ' ';
    out << tier_code(t) << ':' << entries;
    first_tier = false;
    any = true;
  }
  if (!any) out << '-';
  out << '\t' << line.decision;
  return out.str();
}

std::vector<TraceLine> parse_trace(const std::string &trace) {
  std::vector<TraceLine> lines;
  std::istringstream in(trace);
  std::string raw;
  while (std::getline(in, raw)) {
    if (raw.empty()) continue;
    size_t t1 = raw.find('\t');
    size_t t2 = raw.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw FormatError("malformed trace line: " + raw);
    }
    TraceLine line;
    line.anaphor_id = raw.substr(0, t1);
    line.decision = raw.substr(t2 + 1);
    std::string middle = raw.substr(t1 + 1, t2 - t1 - 1);
    if (middle != "-") {
      std::istringstream tiers(middle);
      std::string tier_field;
      while (tiers >> tier_field) {
        size_t colon = tier_field.find(':');
        if (colon == std::string::npos) {
          throw FormatError("malformed tier field: " + tier_field);
        }
        std::string code = tier_field.substr(0, colon);
        Tier tier = code == "S"   ? Tier::SAME_SENTENCE
                    : code == "P" ? Tier::PREV_SENTENCE
                                  : Tier::EARLIER;
        std::istringstream entries(tier_field.substr(colon + 1));
        std::string entry;
        while (std::getline(entries, entry, ',')) {
          size_t at = entry.find('@');
          Candidate c;
          c.tier = tier;
          c.eid = std::stoi(entry.substr(1, at - 1));
          c.sentence_distance = std::stoi(entry.substr(at + 1));
          line.candidates.push_back(c);
        }
      }
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace coref
