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

#include "coref/document.h"

#include <cstdlib>

namespace coref {

int sentence_distance(const SentencePos &a, const SentencePos &b) {
  if (a.in_headline() || b.in_headline()) {
    throw DomainError("sentence_distance is undefined for HEADLINE positions");
  }
  return std::abs(a.global_no - b.global_no);
}

std::vector<Span> accessible_region(const Mention &m, const Document &d) {
  std::vector<Span> result;
  if (m.region == RegionKind::HEADLINE) {
    // The headline summarizes the text: the entire TEXT is accessible.
    for (int i : d.body_sentences) result.push_back(d.sentences[i].span);
    return result;
  }
  const Sentence &own = d.sentence_of(m);
  for (int i : d.body_sentences) {
    const Sentence &s = d.sentences[i];
    if (s.span.end <= m.span.start) {
      result.push_back(s.span);
    } else if (s.span.start < m.span.start) {
      // The sentence containing the mention: the preceding part, plus
      // the remainder for first-person pronouns (cataphora).
      if (m.person == Person::FIRST && m.is_pronoun() &&
          s.pos == own.pos) {
        result.push_back(s.span);
      } else {
        result.push_back({s.span.start, m.span.start});
      }
    }
  }
  return result;
}

}  // namespace coref
