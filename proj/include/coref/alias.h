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

#ifndef COREF_ALIAS_H_
#define COREF_ALIAS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coref {

enum class NameType { PERSON, LOCATION, ORGANIZATION, UNKNOWN };

const char *to_string(NameType t);
NameType name_type_from_string(const std::string &s);

struct NameRecord {
  int eid = 0;
  std::vector<std::string> tokens;  // original-case full name tokens
  NameType type = NameType::UNKNOWN;
  int last_sentence = -1;  // global sentence of the most recent mention
  int order = 0;           // registration order, for recency tie-breaks
};

// True iff `token` is a corporate designator (Inc., Corp., Co., &),
// skippable on the full-name side of alias and acronym tests.
bool is_corporate_designator(const std::string &token);

// True iff `token` is an honorific (Mr., Mrs., Ms., Dr.), stripped
// before matching.
bool is_honorific(const std::string &token);

// An alias is a proper, non-empty, in-order token subsequence of the
// full name, with exact token match; corporate designators on the full
// side may be skipped without penalty.
bool is_alias(const std::vector<std::string> &short_tokens,
              const std::vector<std::string> &full_tokens);

// An acronym is an in-order selection of the initial characters of the
// full name's tokens (designators skippable). Requires an all-uppercase
// token of at least `min_len` characters.
bool is_acronym(const std::string &short_token,
                const std::vector<std::string> &full_tokens,
                int min_len = 2);

struct AliasMatch {
  int eid = 0;
  bool exact = false;
  NameType adopted_type = NameType::UNKNOWN;
};

// Per-document registry of names seen so far, consulted once per
// sentence before general resolution.
class NameRegistry {
 public:
  explicit NameRegistry(bool case_normalize = false, int acronym_min_len = 2)
      : case_normalize_(case_normalize), acronym_min_len_(acronym_min_len) {}

  // Looks up a new name against registered names. Preference: exact
  // match, then alias/acronym, then most recently mentioned. Name types
  // must not conflict; UNKNOWN merges with anything.
  std::optional<AliasMatch> find(const std::vector<std::string> &tokens,
                                 NameType type) const;

  void add(int eid, const std::vector<std::string> &tokens, NameType type,
           int sentence);
  // Redirects records after an entity merge and refreshes recency.
  void note_mention(int old_eid, int new_eid, int sentence);

  const std::vector<NameRecord> &records() const { return records_; }

 private:
  std::vector<std::string> normalize(std::vector<std::string> tokens) const;

  std::vector<NameRecord> records_;
  bool case_normalize_;
  int acronym_min_len_;
};

// Known-names lexicon: full name -> type, used when a proper mention's
// sort does not determine one. Lines are `Full Name : TYPE`.
class NameLexicon {
 public:
  void load(const std::string &text);
  void load_file(const std::string &path);
  NameType type_of(const std::vector<std::string> &tokens) const;
  size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, NameType> entries_;  // space-joined tokens
};

}  // namespace coref

#endif  // COREF_ALIAS_H_
