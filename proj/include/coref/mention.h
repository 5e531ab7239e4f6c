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

#ifndef COREF_MENTION_H_
#define COREF_MENTION_H_

#include <string>
#include <vector>

#include "coref/types.h"

namespace coref {

class HeadLexicon;

// One referring expression with its textual, syntactic, and semantic
// features. Immutable after document parsing.
struct Mention {
  std::string id;
  DetType det = DetType::BARE;
  Person person = Person::NONE;
  NumberValue number;
  std::string head;                    // lowercased head string
  std::string sort;                    // sort id, "TOP" when unknown
  std::vector<std::string> modifiers;  // lowercased
  Span span;
  SentencePos pos;
  RegionKind region = RegionKind::TEXT;
  std::string surface;   // original string, casing preserved
  std::string min_form;  // optional minimal string from the corpus tag
  bool possessed = false;   // nominal governed by a possessive
  bool pleonastic = false;  // set by the pleonastic detector

  // Gold annotation carried through for scoring; empty when absent.
  std::string gold_chain;
  std::string gold_rel = "ident";
  std::string gold_parent;

  int sentence_index = -1;  // index into Document::sentences

  bool is_pronoun() const {
    return det == DetType::PRON || det == DetType::POSS_PRON ||
           det == DetType::REFLEXIVE;
  }
  bool is_plural_pronoun() const {
    return is_pronoun() &&
           (number.kind == NumberValue::PL ||
            (number.kind == NumberValue::EXACT && number.exact > 1));
  }
};

// Surface-derived features for a mention string. Fields left at their
// defaults are filled in; explicit corpus attributes override these.
struct DerivedFeatures {
  DetType det = DetType::BARE;
  Person person = Person::NONE;
  NumberValue number;
  std::string head;
  std::vector<std::string> modifiers;
};

// Whitespace/punctuation tokenization keeping hyphenated words and
// abbreviation dots inside tokens.
std::vector<std::string> tokenize(const std::string &text);

std::string lowercase(const std::string &s);

// Derive determiner type, head, number, person, and modifiers from a
// detagged mention string. Throws FormatError on an empty surface.
DerivedFeatures derive_features(const std::string &surface);

// Maps spelled-out numerals and digit strings to EXACT values.
// Returns UNKNOWN number when the token is not a numeral.
NumberValue numeral_value(const std::string &token);

}  // namespace coref

#endif  // COREF_MENTION_H_
