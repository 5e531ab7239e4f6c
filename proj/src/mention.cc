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

#include "coref/mention.h"

#include <cctype>
#include <map>
#include <set>

namespace coref {

namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) != 0; }

struct PronounInfo {
  DetType det;
  Person person;
  NumberValue number;
};

const std::map<std::string, PronounInfo> &pronoun_table() {
  static const std::map<std::string, PronounInfo> table = {
      {"i", {DetType::PRON, Person::FIRST, NumberValue::sg()}},
      {"me", {DetType::PRON, Person::FIRST, NumberValue::sg()}},
      {"we", {DetType::PRON, Person::FIRST, NumberValue::pl()}},
      {"us", {DetType::PRON, Person::FIRST, NumberValue::pl()}},
      {"you", {DetType::PRON, Person::SECOND, NumberValue::unknown()}},
      {"he", {DetType::PRON, Person::THIRD, NumberValue::sg()}},
      {"him", {DetType::PRON, Person::THIRD, NumberValue::sg()}},
      {"she", {DetType::PRON, Person::THIRD, NumberValue::sg()}},
      {"it", {DetType::PRON, Person::THIRD, NumberValue::sg()}},
      {"they", {DetType::PRON, Person::THIRD, NumberValue::pl()}},
      {"them", {DetType::PRON, Person::THIRD, NumberValue::pl()}},
      {"hers", {DetType::PRON, Person::THIRD, NumberValue::sg()}},
      {"theirs", {DetType::PRON, Person::THIRD, NumberValue::pl()}},
      {"ours", {DetType::PRON, Person::FIRST, NumberValue::pl()}},
      {"mine", {DetType::PRON, Person::FIRST, NumberValue::sg()}},
      {"my", {DetType::POSS_PRON, Person::FIRST, NumberValue::sg()}},
      {"our", {DetType::POSS_PRON, Person::FIRST, NumberValue::pl()}},
      {"your", {DetType::POSS_PRON, Person::SECOND, NumberValue::unknown()}},
      {"his", {DetType::POSS_PRON, Person::THIRD, NumberValue::sg()}},
      {"her", {DetType::POSS_PRON, Person::THIRD, NumberValue::sg()}},
      {"its", {DetType::POSS_PRON, Person::THIRD, NumberValue::sg()}},
      {"their", {DetType::POSS_PRON, Person::THIRD, NumberValue::pl()}},
      {"myself", {DetType::REFLEXIVE, Person::FIRST, NumberValue::sg()}},
      {"ourselves", {DetType::REFLEXIVE, Person::FIRST, NumberValue::pl()}},
      {"yourself", {DetType::REFLEXIVE, Person::SECOND, NumberValue::sg()}},
      {"yourselves", {DetType::REFLEXIVE, Person::SECOND, NumberValue::pl()}},
      {"himself", {DetType::REFLEXIVE, Person::THIRD, NumberValue::sg()}},
      {"herself", {DetType::REFLEXIVE, Person::THIRD, NumberValue::sg()}},
      {"itself", {DetType::REFLEXIVE, Person::THIRD, NumberValue::sg()}},
      {"themselves", {DetType::REFLEXIVE, Person::THIRD, NumberValue::pl()}},
  };
  return table;
}

const std::set<std::string> &quantifier_words() {
  static const std::set<std::string> words = {
      "every", "each", "all", "both", "some", "many", "few", "several",
      "most", "no"};
  return words;
}

std::string strip_token(std::string token, bool *possessive) {
  if (possessive != nullptr) *possessive = false;
  while (!token.empty() && (token.back() == '.' || token.back() == ',')) {
    token.pop_back();
  }
  // Possessive markers: 's or a bare apostrophe after plural s.
  if (token.size() >= 2 && token.compare(token.size() - 2, 2, "'s") == 0) {
    token.erase(token.size() - 2);
    if (possessive != nullptr) *possessive = true;
  } else if (token.size() >= 2 && token.back() == '\'' &&
             token[token.size() - 2] == 's') {
    token.pop_back();
    if (possessive != nullptr) *possessive = true;
  }
  while (!token.empty() &&
         (token.back() == '.' || token.back() == ',' || token.back() == '\'')) {
    token.pop_back();
  }
  return token;
}

}  // namespace

std::string lowercase(const std::string &s) {
  std::string out = s;
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> tokenize(const std::string &text) {
  std::vector<std::string> tokens;
  std::string current;
  const size_t n = text.size();
  for (size_t i = 0; i < n; ++i) {
    unsigned char c = text[i];
    unsigned char next = i + 1 < n ? text[i + 1] : '\0';
    bool keep = false;
    if (is_word_char(c) || c == '&') {
      keep = true;
    } else if (!current.empty()) {
      if (c == '-') {
        keep = is_word_char(next);
      } else if (c == '\'') {
        keep = true;  // possessive marker, stripped later
      } else if (c == '.' && (is_word_char(next) || next == '\'')) {
        keep = true;
      } else if (c == ',' && std::isdigit(static_cast<unsigned char>(current.back())) &&
                 std::isdigit(next)) {
        keep = true;
      }
    }
    if (keep) {
      current.push_back(static_cast<char>(c));
    } else if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(current);
  return tokens;
}

NumberValue numeral_value(const std::string &token) {
  static const std::map<std::string, int> words = {
      {"one", 1},    {"two", 2},    {"three", 3},  {"four", 4},
      {"five", 5},   {"six", 6},    {"seven", 7},  {"eight", 8},
      {"nine", 9},   {"ten", 10},   {"eleven", 11}, {"twelve", 12},
      {"thirteen", 13}, {"fourteen", 14}, {"fifteen", 15},
      {"sixteen", 16},  {"seventeen", 17}, {"eighteen", 18},
      {"nineteen", 19}, {"twenty", 20},    {"thirty", 30},
      {"forty", 40},    {"fifty", 50},     {"sixty", 60},
      {"seventy", 70},  {"eighty", 80},    {"ninety", 90},
      {"hundred", 100}, {"thousand", 1000}, {"million", 1000000}};
  std::string t = lowercase(token);
  auto it = words.find(t);
  if (it != words.end()) return NumberValue::count(it->second);
  bool digits = !t.empty();
  long value = 0;
  for (char c : t) {
    if (c == ',') continue;
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      digits = false;
      break;
    }
    value = value * 10 + (c - '0');
    if (value > 1000000000L) break;
  }
  if (digits && value >= 1) return NumberValue::count(static_cast<int>(value));
  return NumberValue::unknown();
}

DerivedFeatures derive_features(const std::string &surface) {
  std::vector<std::string> raw = tokenize(surface);
  if (raw.empty()) throw FormatError("empty mention surface");

  DerivedFeatures out;
  std::string first = lowercase(strip_token(raw.front(), nullptr));

  // Closed-class pronouns.
  if (raw.size() == 1) {
    auto it = pronoun_table().find(first);
    if (it != pronoun_table().end()) {
      out.det = it->second.det;
      out.person = it->second.person;
      out.number = it->second.number;
      out.head = first;
      return out;
    }
    if (first == "that" || first == "this") {
      out.det = DetType::PRON;
      out.person = Person::THIRD;
      out.number = NumberValue::sg();
      out.head = first;
      return out;
    }
    if (first == "these" || first == "those") {
      out.det = DetType::PRON;
      out.person = Person::THIRD;
      out.number = NumberValue::pl();
      out.head = first;
      return out;
    }
  }

  size_t content_begin = 0;
  if (first == "the" || first == "this" || first == "that" ||
      first == "these" || first == "those") {
    out.det = DetType::DEF;
    content_begin = 1;
  } else if (first == "a" || first == "an") {
    out.det = DetType::INDEF;
    content_begin = 1;
  } else if (quantifier_words().count(first) > 0 ||
             numeral_value(raw.front()).kind == NumberValue::EXACT) {
    out.det = DetType::QUANT;
    content_begin = quantifier_words().count(first) > 0 ? 1 : 0;
  } else {
    // Proper when every alphabetic token is capitalized.
    bool all_caps = true;
    for (const std::string &tok : raw) {
      unsigned char c = tok.front();
      if (std::isalpha(c) && !std::isupper(c) && tok != "&") {
        all_caps = false;
        break;
      }
    }
    out.det = all_caps ? DetType::PROPER : DetType::BARE;
  }

  // Head: last non-possessive token.
  std::vector<std::string> stripped;
  std::vector<bool> possessive;
  for (const std::string &tok : raw) {
    bool poss = false;
    std::string s = strip_token(tok, &poss);
    stripped.push_back(s);
    possessive.push_back(poss);
  }
  int head_index = -1;
  for (int i = static_cast<int>(stripped.size()) - 1; i >= 0; --i) {
    if (!possessive[i] && !stripped[i].empty() && stripped[i] != "&") {
      head_index = i;
      break;
    }
  }
  if (head_index < 0) head_index = static_cast<int>(stripped.size()) - 1;
  out.head = lowercase(stripped[head_index]);

  // Number: numeral token wins, then head morphology.
  for (size_t i = content_begin; i < stripped.size(); ++i) {
    NumberValue v = numeral_value(stripped[i]);
    if (v.kind == NumberValue::EXACT) {
      out.number = v;
      break;
    }
  }
  if (out.number.kind == NumberValue::UNKNOWN) {
    if (out.det == DetType::PROPER) {
      out.number = NumberValue::sg();
    } else if (out.head.size() > 2 && out.head.back() == 's' &&
               out.head[out.head.size() - 2] != 's' &&
               out.head[out.head.size() - 2] != 'u') {
      out.number = NumberValue::pl();
    } else {
      out.number = NumberValue::sg();
    }
  }

  // Modifiers: remaining tokens minus determiner and head.
  for (size_t i = content_begin; i < stripped.size(); ++i) {
    if (static_cast<int>(i) == head_index) continue;
    if (stripped[i].empty() || stripped[i] == "&") continue;
    out.modifiers.push_back(lowercase(stripped[i]));
  }
  return out;
}

}  // namespace coref
