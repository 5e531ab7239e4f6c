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

#ifndef COREF_SCORER_H_
#define COREF_SCORER_H_

#include <string>
#include <vector>

#include "coref/document.h"

namespace coref {

// A partition of mention ids into disjoint non-empty chains.
struct ChainSet {
  std::vector<std::vector<std::string>> chains;

  // Throws FormatError when chains overlap.
  void validate() const;
};

struct TypeRow {
  std::string type;
  int occurrences = 0;
  int correct = 0;
  int unscored = 0;  // goldrel != ident links, counted but not scored
};

struct ScoreReport {
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
  bool precision_by_convention = false;  // 0 proposed links -> precision 1
  bool recall_by_convention = false;     // 0 key links -> recall 1
  std::vector<TypeRow> per_type;
};

// MUC link-based score (Vilain et al.):
//   recall    = sum over key chains S of (|S| - |partition of S by
//               response|) / sum of (|S| - 1)
// and precision the same with roles swapped. A 0/0 ratio is reported as
// 1 by convention and flagged.
ScoreReport muc_score(const ChainSet &response, const ChainSet &key);

// Per-expression-type occurrence/correct counts over the gold corpus.
// Occurrences exclude each key chain's initial mention except when that
// mention carries a non-identity gold link (subset/part/member), which
// is counted but never scored correct. An identity anaphor is correct
// iff its response chain contains an earlier mention of its key chain.
std::vector<TypeRow> per_type_report(const Document &doc,
                                     const ChainSet &response);

// Key chains from the document's gold annotations (identity links only;
// unannotated mentions become singletons).
ChainSet key_chains(const Document &doc);

// Chain file round-trip: one chain per line, mention ids separated by
// single spaces, `#` comments ignored.
std::string format_chains(const ChainSet &chains);
ChainSet parse_chains(const std::string &text);

// Plain-text aligned table (Expression Type / Number of Occurrences /
// Correctly Resolved) and its machine-readable TSV twin.
std::string format_type_table(const std::vector<TypeRow> &rows);
std::string format_type_tsv(const std::vector<TypeRow> &rows);

std::string format_score(const ScoreReport &report);

}  // namespace coref

#endif  // COREF_SCORER_H_
