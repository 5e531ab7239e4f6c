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

#include "coref/alias.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "coref/types.h"

#include "coref/mention.h"

namespace coref {

namespace {

std::string strip_dots(const std::string &token) {
  std::string out;
  for (char c : token) {
    if (c != '.' && c != ',') out.push_back(c);
  }
  return out;
}

bool type_conflict(NameType a, NameType b) {
  if (a == NameType::UNKNOWN || b == NameType::UNKNOWN) return false;
  return a != b;
}

}  // namespace

const char *to_string(NameType t) {
  switch (t) {
    case NameType::PERSON: return "PERSON";
    case NameType::LOCATION: return "LOCATION";
    case NameType::ORGANIZATION: return "ORGANIZATION";
    case NameType::UNKNOWN: return "UNKNOWN";
  }
  return "?";
}

NameType name_type_from_string(const std::string &s) {
  if (s == "PERSON") return NameType::PERSON;
  if (s == "LOCATION") return NameType::LOCATION;
  if (s == "ORGANIZATION") return NameType::ORGANIZATION;
  return NameType::UNKNOWN;
}

bool is_corporate_designator(const std::string &token) {
  static const std::set<std::string> designators = {
      "inc", "corp", "co", "ltd", "plc", "llc", "&"};
  return designators.count(lowercase(strip_dots(token))) > 0;
}

bool is_honorific(const std::string &token) {
  static const std::set<std::string> honorifics = {"mr", "mrs", "ms", "dr",
                                                   "prof"};
  return honorifics.count(lowercase(strip_dots(token))) > 0;
}

bool is_alias(const std::vector<std::string> &short_tokens,
              const std::vector<std::string> &full_tokens) {
  if (short_tokens.empty() || full_tokens.empty()) return false;
  // Proper subsequence: the alias must be shorter than the full name.
  if (short_tokens.size() >= full_tokens.size()) return false;
  size_t si = 0;
  for (const std::string &full : full_tokens) {
    if (si == short_tokens.size()) break;
    if (short_tokens[si] == full) ++si;
    // Skipped tokens are allowed, the alias is selective.
  }
  return si == short_tokens.size();
}

bool is_acronym(const std::string &short_token,
                const std::vector<std::string> &full_tokens, int min_len) {
  if (static_cast<int>(short_token.size()) < min_len) return false;
  for (char c : short_token) {
    if (!std::isupper(static_cast<unsigned char>(c))) return false;
  }
  if (full_tokens.empty()) return false;
  size_t si = 0;
  for (const std::string &full : full_tokens) {
    if (si == short_token.size()) break;
    if (full.empty()) continue;
    if (full[0] == short_token[si]) {
      ++si;
    }
    // Any token, designator or not, may be skipped (selective sequence).
  }
  return si == short_token.size();
}

std::vector<std::string> NameRegistry::normalize(
    std::vector<std::string> tokens) const {
  // Honorifics are dropped before matching.
  std::vector<std::string> out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i == 0 && is_honorific(tokens[i]) && tokens.size() > 1) continue;
    out.push_back(case_normalize_ ? lowercase(tokens[i]) : tokens[i]);
  }
  return out;
}

std::optional<AliasMatch> NameRegistry::find(
    const std::vector<std::string> &tokens, NameType type) const {
  std::vector<std::string> name = normalize(tokens);
  if (name.empty()) return std::nullopt;

  const NameRecord *best = nullptr;
  bool best_exact = false;
  for (const NameRecord &record : records_) {
    if (type_conflict(type, record.type)) continue;
    std::vector<std::string> full = normalize(record.tokens);
    bool exact = name == full;
    bool matched = exact || is_alias(name, full);
    if (!matched && name.size() == 1) {
      // Acronym tests run against the original-case short token.
      std::string short_tok = tokens.size() == 1 ? tokens[0] : name[0];
      matched = is_acronym(short_tok, full, acronym_min_len_);
    }
    if (!matched) continue;
    // Preference: exact match first, then most recent mention.
    if (best == nullptr || (exact && !best_exact) ||
        (exact == best_exact &&
         (record.last_sentence > best->last_sentence ||
          (record.last_sentence == best->last_sentence &&
           record.order > best->order)))) {
      best = &record;
      best_exact = exact;
    }
  }
  if (best == nullptr) return std::nullopt;
  AliasMatch match;
  match.eid = best->eid;
  match.exact = best_exact;
  match.adopted_type = best->type == NameType::UNKNOWN ? type : best->type;
  return match;
}

void NameRegistry::add(int eid, const std::vector<std::string> &tokens,
                       NameType type, int sentence) {
  NameRecord record;
  record.eid = eid;
  record.tokens = tokens;
  record.type = type;
  record.last_sentence = sentence;
  record.order = static_cast<int>(records_.size());
  records_.push_back(std::move(record));
}

void NameLexicon::load(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t colon = line.rfind(':');
    if (colon == std::string::npos) {
      throw FormatError("names line " + std::to_string(line_no) +
                        " is not `name : TYPE`: " + line);
    }
    std::vector<std::string> tokens = tokenize(line.substr(0, colon));
    std::string type_str;
    for (char c : line.substr(colon + 1)) {
      if (!std::isspace(static_cast<unsigned char>(c))) type_str.push_back(c);
    }
    if (tokens.empty()) {
      throw FormatError("names line " + std::to_string(line_no) +
                        " has an empty name");
    }
    std::string key;
    for (const std::string &t : tokens) {
      if (!key.empty()) key.push_back(' ');
      key += t;
    }
    entries_[key] = name_type_from_string(type_str);
  }
}

void NameLexicon::load_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open names file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  load(buf.str());
}

NameType NameLexicon::type_of(const std::vector<std::string> &tokens) const {
  std::string key;
  for (const std::string &t : tokens) {
    if (!key.empty()) key.push_back(' ');
    key += t;
  }
  auto it = entries_.find(key);
  return it == entries_.end() ? NameType::UNKNOWN : it->second;
}

void NameRegistry::note_mention(int old_eid, int new_eid, int sentence) {
  for (NameRecord &record : records_) {
    if (record.eid == old_eid) {
      record.eid = new_eid;
      record.last_sentence = std::max(record.last_sentence, sentence);
    }
  }
}

}  // namespace coref
