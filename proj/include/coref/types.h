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

#ifndef COREF_TYPES_H_
#define COREF_TYPES_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coref {

// Half-open byte range into the detagged document text.
struct Span {
  size_t start = 0;
  size_t end = 0;

  size_t length() const { return end - start; }
  bool contains(const Span &other) const {
    return start <= other.start && other.end <= end;
  }
  bool precedes(size_t offset) const { return end <= offset; }
  bool operator==(const Span &other) const = default;
};

enum class RegionKind { HEADLINE, TEXT };

// Sentence coordinates. Paragraph and sentence ordinals are 1-based.
// global_no counts sentences over the TEXT region only; HEADLINE
// sentences carry global_no = -1.
struct SentencePos {
  int paragraph_no = 0;
  int sentence_no = 0;
  int global_no = -1;

  bool in_headline() const { return global_no < 0; }
  bool operator==(const SentencePos &other) const = default;
};

enum class DetType { DEF, INDEF, PRON, POSS_PRON, REFLEXIVE, PROPER, BARE, QUANT };

enum class Person { NONE, FIRST, SECOND, THIRD };

// Grammatical or numerical number.
struct NumberValue {
  enum Kind { UNKNOWN, SG, PL, EXACT };
  Kind kind = UNKNOWN;
  int exact = 0;  // valid when kind == EXACT, always >= 1

  static NumberValue unknown() { return {UNKNOWN, 0}; }
  static NumberValue sg() { return {SG, 0}; }
  static NumberValue pl() { return {PL, 0}; }
  static NumberValue count(int n) { return {EXACT, n}; }

  bool operator==(const NumberValue &other) const = default;
};

const char *to_string(DetType det);
const char *to_string(RegionKind region);
std::string to_string(const NumberValue &n);

// Raised on malformed corpus or lexicon input.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string &message, size_t offset)
      : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  explicit FormatError(const std::string &message)
      : std::runtime_error(message), offset_(0) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Raised on queries outside an operation's domain.
class DomainError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace coref

#endif  // COREF_TYPES_H_
