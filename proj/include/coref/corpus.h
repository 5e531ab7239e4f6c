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

#ifndef COREF_CORPUS_H_
#define COREF_CORPUS_H_

#include <string>

#include "coref/document.h"
#include "coref/ontology.h"

namespace coref {

// Parses one document in the inline-tag corpus format:
//
//   <DOC id="...">
//   <HEADLINE> ...text with <M .../> mention tags... </HEADLINE>
//   <P><S> ... </S><S> ... </S></P> ...
//   </DOC>
//
// Mention tags carry optional feature attributes (det, num, head, sort,
// min, poss) that override surface derivation, plus gold/goldrel/goldof
// chain annotation for scoring. Byte offsets are computed over the
// detagged text. Throws FormatError with the byte offset on malformed
// nesting or duplicate mention ids.
Document parse_document(const std::string &raw, const HeadLexicon &heads);

Document parse_document_file(const std::string &path, const HeadLexicon &heads);

}  // namespace coref

#endif  // COREF_CORPUS_H_
