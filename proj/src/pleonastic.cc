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

#include "coref/pleonastic.h"

#include <set>

namespace coref {

namespace {

const std::set<std::string> &seem_verbs() {
  static const std::set<std::string> verbs = {
      "seems", "seemed", "seem", "appears", "appeared", "appear"};
  return verbs;
}

const std::set<std::string> &copulas() {
  static const std::set<std::string> verbs = {"is", "was", "'s", "isn't",
                                              "wasn't"};
  return verbs;
}

const std::set<std::string> &weather_time_predicates() {
  static const std::set<std::string> preds = {
      "raining", "snowing", "sunny",  "cloudy", "windy",   "cold",
      "hot",     "late",    "early",  "noon",   "midnight", "morning",
      "evening", "dark"};
  return preds;
}

// Adjectives licensing extraposition ("it is clear that...").
const std::set<std::string> &extraposition_adjectives() {
  static const std::set<std::string> adjs = {
      "clear",     "possible",  "impossible", "likely",   "unlikely",
      "important", "certain",   "uncertain",  "true",     "false",
      "necessary", "hard",      "easy",       "difficult", "premature",
      "obvious",   "surprising", "unclear",   "doubtful", "evident",
      "essential", "crucial",   "useful",     "helpful",  "better",
      "best",      "good",      "bad"};
  return adjs;
}

bool is_adverb(const std::string &token) {
  return token.size() > 2 && token.compare(token.size() - 2, 2, "ly") == 0;
}

}  // namespace

bool detect_pleonastic(const Mention &m,
                       const std::vector<std::string> &following_tokens) {
  if (m.det != DetType::PRON) return false;
  if (lowercase(m.surface) != "it") return false;
  if (following_tokens.empty()) return false;

  std::vector<std::string> toks;
  toks.reserve(following_tokens.size());
  for (const std::string &t : following_tokens) toks.push_back(lowercase(t));

  // it seems/appears (that) ...
  if (seem_verbs().count(toks[0]) > 0) return true;
  // it turns/turned out ...
  if ((toks[0] == "turns" || toks[0] == "turned") && toks.size() > 1 &&
      toks[1] == "out") {
    return true;
  }
  if (copulas().count(toks[0]) == 0) return false;

  // it is/was <weather or time predicate>
  if (toks.size() > 1 && weather_time_predicates().count(toks[1]) > 0) {
    return true;
  }
  // it is/was [adverb|adjective]{0,2} that/to.  No determiner may
  // intervene, which keeps referential uses like "it is a nice, clean
  // way to ..." out.
  size_t i = 1;
  bool saw_adjective = false;
  while (i < toks.size() && i <= 3) {
    if (toks[i] == "that" || toks[i] == "to") return saw_adjective;
    if (extraposition_adjectives().count(toks[i]) > 0) {
      saw_adjective = true;
    } else if (!is_adverb(toks[i])) {
      return false;
    }
    ++i;
  }
  return false;
}

bool detect_pleonastic(const Mention &m, const std::string &sentence_text,
                       size_t mention_offset_in_sentence) {
  size_t after = mention_offset_in_sentence + m.span.length();
  if (after > sentence_text.size()) return false;
  std::vector<std::string> tokens = tokenize(sentence_text.substr(after));
  if (tokens.size() > 8) tokens.resize(8);
  return detect_pleonastic(m, tokens);
}

}  // namespace coref
