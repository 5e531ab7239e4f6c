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

#ifndef COREF_PLEONASTIC_H_
#define COREF_PLEONASTIC_H_

#include <string>
#include <vector>

#include "coref/mention.h"

namespace coref {

// Finite-state detection of non-referential "it" from the tokens that
// follow it in the sentence. Patterns:
//   it seems/appears/turns out ...
//   it is/was [adverb|adjective]{0,2} that/to ...
//   it is/was <weather or time predicate>
// Only applies to the surface form "it"; pleonastic mentions create no
// entity.
bool detect_pleonastic(const Mention &m,
                       const std::vector<std::string> &following_tokens);

// Convenience overload taking the full sentence text.
bool detect_pleonastic(const Mention &m, const std::string &sentence_text,
                       size_t mention_offset_in_sentence);

}  // namespace coref

#endif  // COREF_PLEONASTIC_H_
