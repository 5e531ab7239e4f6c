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

#ifndef COREF_RESOLVER_H_
#define COREF_RESOLVER_H_

#include <string>
#include <vector>

#include "coref/alias.h"
#include "coref/document.h"
#include "coref/entity.h"
#include "coref/ontology.h"

namespace coref {

struct ResolutionConfig {
  int window_definite = 10;
  int window_pronoun = 3;
  int window_possessive = -1;  // -1: use window_pronoun
  // Proper names search the entire preceding text; reflexives only the
  // current sentence. Neither window is configurable.
  bool soft_window = false;  // one candidate beyond the limit when none within
  bool destructive = true;
  bool disable_sort_filter = false;
  bool disable_number_filter = false;
  bool disable_modifier_filter = false;
  bool disable_window = false;
  bool case_normalize_names = false;
  bool headline_to_headline = true;  // headline anaphors may take earlier
                                     // headline mentions as antecedents
  int acronym_min_len = 2;
  std::string org_sort_name = "organization";

  int pronoun_window(DetType det) const {
    if (det == DetType::POSS_PRON && window_possessive >= 0)
      return window_possessive;
    return window_pronoun;
  }
};

enum class Tier { SAME_SENTENCE, PREV_SENTENCE, EARLIER };

struct Candidate {
  int eid = 0;
  Tier tier = Tier::EARLIER;
  Span position;     // current-mention span at decision time
  int sentence_distance = 0;
};

using CandidateList = std::vector<Candidate>;

struct ResolutionOutcome {
  std::string anaphor_id;
  enum Kind { MERGED, RANKED, UNRESOLVED } kind = UNRESOLVED;
  int merged_into = -1;        // MERGED
  std::vector<int> ranked;     // RANKED (nondestructive)
};

struct ResolutionResult {
  std::vector<std::vector<std::string>> chains;
  std::vector<ResolutionOutcome> outcomes;
  std::string trace;  // one line per anaphor (see trace format)
};

// True iff the mention type is proposed as an anaphor: proper names,
// definites, and pronouns. Indefinites, bare and quantified nominals
// start fresh entities without search.
bool is_anaphoric(const Mention &m);

// The core resolution pass over one document: sentences in order,
// mentions left-to-right, alias recognition once per sentence before
// general resolution, HEADLINE mentions after the full TEXT.
class Resolver {
 public:
  Resolver(const SortHierarchy &sorts, const ModifierLexicon &modifiers,
           ResolutionConfig config)
      : sorts_(&sorts), modifiers_(&modifiers), config_(config) {}

  ResolutionResult resolve(const Document &doc) const;

  // Exposed stages, usable on a live store for testing.
  CandidateList collect(const Document &doc, const EntityStore &store,
                        const Mention &m, int anaphor_eid) const;
  CandidateList filter(const EntityStore &store, const Mention &m,
                       const DiscourseEntity &anaphor,
                       const CandidateList &candidates) const;
  // Orders in place: SAME_SENTENCE left-right, PREV_SENTENCE left-right,
  // EARLIER right-left (recency); identical spans break ties by eid.
  void order(CandidateList &candidates) const;

  const ResolutionConfig &config() const { return config_; }

  // Optional known-names lexicon for typing proper names whose sort is
  // uninformative.
  void set_known_names(const NameLexicon *names) { names_ = names; }

 private:
  const SortHierarchy *sorts_;
  const ModifierLexicon *modifiers_;
  const NameLexicon *names_ = nullptr;
  ResolutionConfig config_;
};

// Trace line format: `anaphor_id TAB tier:eid@dist,... TAB decision`
// with tiers S (same sentence), P (previous sentence), E (earlier).
struct TraceLine {
  std::string anaphor_id;
  CandidateList candidates;
  std::string decision;
};

std::string format_trace_line(const TraceLine &line);
std::vector<TraceLine> parse_trace(const std::string &trace);

}  // namespace coref

#endif  // COREF_RESOLVER_H_
