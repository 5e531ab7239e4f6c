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

#ifndef COREF_DOCUMENT_H_
#define COREF_DOCUMENT_H_

#include <string>
#include <vector>

#include "coref/mention.h"
#include "coref/types.h"

namespace coref {

struct Sentence {
  Span span;
  RegionKind region = RegionKind::TEXT;
  SentencePos pos;
};

// A parsed corpus document. Immutable after parsing; all queries are
// read-only and safe from multiple threads.
struct Document {
  std::string doc_id;
  std::string text;  // detagged character content
  std::vector<Sentence> sentences;
  std::vector<Mention> mentions;  // in document order (span start)

  // Indices of HEADLINE and TEXT sentences, in order.
  std::vector<int> headline_sentences;
  std::vector<int> body_sentences;

  const Sentence &sentence_of(const Mention &m) const {
    return sentences[m.sentence_index];
  }
  std::string mention_text(const Mention &m) const {
    return text.substr(m.span.start, m.span.length());
  }
  std::string sentence_text(int index) const {
    const Span &s = sentences[index].span;
    return text.substr(s.start, s.length());
  }
};

// Absolute sentence distance over TEXT-region global ordinals.
// Throws DomainError for HEADLINE positions.
int sentence_distance(const SentencePos &a, const SentencePos &b);

// The text region an anaphor may draw antecedents from:
//  - HEADLINE mention: the entire TEXT region;
//  - TEXT mention: everything preceding its span in the TEXT region;
//  - first-person pronouns additionally see the rest of their own
//    sentence (intrasentential cataphora).
std::vector<Span> accessible_region(const Mention &m, const Document &d);

}  // namespace coref

#endif  // COREF_DOCUMENT_H_
