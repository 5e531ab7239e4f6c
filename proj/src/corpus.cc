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

#include "coref/corpus.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace coref {

namespace {

struct Tag {
  bool closing = false;
  std::string name;
  std::map<std::string, std::string> attrs;
  size_t raw_end = 0;  // offset just past '>'
};

// Parses the tag starting at raw[pos] == '<'.
Tag parse_tag(const std::string &raw, size_t pos) {
  Tag tag;
  size_t i = pos + 1;
  if (i < raw.size() && raw[i] == '/') {
    tag.closing = true;
    ++i;
  }
  size_t name_start = i;
  while (i < raw.size() && (std::isalnum(static_cast<unsigned char>(raw[i])) != 0)) ++i;
  tag.name = raw.substr(name_start, i - name_start);
  if (tag.name.empty()) throw FormatError("empty tag name", pos);
  while (i < raw.size() && raw[i] != '>') {
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
    if (i >= raw.size() || raw[i] == '>') break;
    size_t key_start = i;
    while (i < raw.size() && raw[i] != '=' && raw[i] != '>' &&
           !std::isspace(static_cast<unsigned char>(raw[i]))) {
      ++i;
    }
    std::string key = raw.substr(key_start, i - key_start);
    if (i >= raw.size() || raw[i] != '=') {
      throw FormatError("attribute without value: " + key, key_start);
    }
    ++i;
    if (i >= raw.size() || (raw[i] != '"' && raw[i] != '\'')) {
      throw FormatError("unquoted attribute value for: " + key, i);
    }
    char quote = raw[i++];
    size_t val_start = i;
    while (i < raw.size() && raw[i] != quote) ++i;
    if (i >= raw.size()) throw FormatError("unterminated attribute value", val_start);
    tag.attrs[key] = raw.substr(val_start, i - val_start);
    ++i;
  }
  if (i >= raw.size()) throw FormatError("unterminated tag", pos);
  tag.raw_end = i + 1;
  return tag;
}

DetType det_from_string(const std::string &s, size_t offset) {
  if (s == "DEF") return DetType::DEF;
  if (s == "INDEF") return DetType::INDEF;
  if (s == "PRON") return DetType::PRON;
  if (s == "POSS_PRON") return DetType::POSS_PRON;
  if (s == "REFLEXIVE") return DetType::REFLEXIVE;
  if (s == "PROPER") return DetType::PROPER;
  if (s == "BARE") return DetType::BARE;
  if (s == "QUANT") return DetType::QUANT;
  throw FormatError("unknown det value: " + s, offset);
}

NumberValue num_from_string(const std::string &s, size_t offset) {
  if (s == "SG") return NumberValue::sg();
  if (s == "PL") return NumberValue::pl();
  if (s == "UNKNOWN") return NumberValue::unknown();
  NumberValue v = numeral_value(s);
  if (v.kind != NumberValue::EXACT) {
    throw FormatError("unknown num value: " + s, offset);
  }
  return v;
}

}  // namespace

Document parse_document(const std::string &raw, const HeadLexicon &heads) {
  Document doc;
  std::vector<std::string> stack;
  std::set<std::string> seen_ids;

  bool in_headline = false;
  int paragraph_no = 0;
  int sentence_no = 0;
  int global_no = 0;
  int open_sentence = -1;  // index into doc.sentences

  // Open mention, at most one (no nesting).
  bool in_mention = false;
  Mention mention;
  size_t mention_raw_pos = 0;

  size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] != '<') {
      doc.text.push_back(raw[i]);
      ++i;
      continue;
    }
    Tag tag = parse_tag(raw, i);
    size_t tag_pos = i;
    i = tag.raw_end;

    if (!tag.closing) {
      if (tag.name == "DOC") {
        if (!stack.empty()) throw FormatError("DOC must be outermost", tag_pos);
        auto it = tag.attrs.find("id");
        doc.doc_id = it == tag.attrs.end() ? "" : it->second;
        stack.push_back("DOC");
      } else if (tag.name == "HEADLINE") {
        if (stack.empty() || stack.back() != "DOC") {
          throw FormatError("HEADLINE must be directly inside DOC", tag_pos);
        }
        stack.push_back("HEADLINE");
        in_headline = true;
        Sentence s;
        s.region = RegionKind::HEADLINE;
        s.pos = {0, 1, -1};
        s.span.start = doc.text.size();
        open_sentence = static_cast<int>(doc.sentences.size());
        doc.sentences.push_back(s);
      } else if (tag.name == "P") {
        if (stack.empty() || stack.back() != "DOC") {
          throw FormatError("P must be directly inside DOC", tag_pos);
        }
        stack.push_back("P");
        ++paragraph_no;
        sentence_no = 0;
      } else if (tag.name == "S") {
        if (stack.empty() || stack.back() != "P") {
          throw FormatError("S must be directly inside P", tag_pos);
        }
        stack.push_back("S");
        ++sentence_no;
        Sentence s;
        s.region = RegionKind::TEXT;
        s.pos = {paragraph_no, sentence_no, global_no++};
        s.span.start = doc.text.size();
        open_sentence = static_cast<int>(doc.sentences.size());
        doc.sentences.push_back(s);
      } else if (tag.name == "M") {
        if (in_mention) throw FormatError("nested mention tag", tag_pos);
        if (open_sentence < 0 || (stack.back() != "S" && stack.back() != "HEADLINE")) {
          throw FormatError("mention outside sentence", tag_pos);
        }
        in_mention = true;
        mention = Mention();
        mention_raw_pos = tag_pos;
        auto it = tag.attrs.find("id");
        if (it == tag.attrs.end() || it->second.empty()) {
          throw FormatError("mention without id", tag_pos);
        }
        mention.id = it->second;
        if (!seen_ids.insert(mention.id).second) {
          throw FormatError("duplicate mention id: " + mention.id, tag_pos);
        }
        mention.span.start = doc.text.size();
        mention.sentence_index = open_sentence;
        mention.region = doc.sentences[open_sentence].region;
        mention.pos = doc.sentences[open_sentence].pos;
      } else {
        throw FormatError("unknown tag: " + tag.name, tag_pos);
      }
    } else {
      if (tag.name == "M") {
        if (!in_mention) throw FormatError("unmatched </M>", tag_pos);
        in_mention = false;
        mention.span.end = doc.text.size();
        mention.surface = doc.text.substr(mention.span.start,
                                          mention.span.length());
        // Surface-derived features, overridden by explicit attributes.
        Tag open_tag = parse_tag(raw, mention_raw_pos);
        DerivedFeatures derived = derive_features(mention.surface);
        mention.det = derived.det;
        mention.person = derived.person;
        mention.number = derived.number;
        mention.head = derived.head;
        mention.modifiers = derived.modifiers;
        for (const auto &[key, value] : open_tag.attrs) {
          if (key == "id") continue;
          if (key == "det") {
            mention.det = det_from_string(value, mention_raw_pos);
          } else if (key == "num") {
            mention.number = num_from_string(value, mention_raw_pos);
          } else if (key == "head") {
            mention.head = lowercase(value);
          } else if (key == "sort") {
            mention.sort = value;
          } else if (key == "min") {
            mention.min_form = value;
          } else if (key == "poss") {
            mention.possessed = value == "1" || value == "true";
          } else if (key == "gold") {
            mention.gold_chain = value;
          } else if (key == "goldrel") {
            mention.gold_rel = value;
          } else if (key == "goldof") {
            mention.gold_parent = value;
          } else {
            throw FormatError("unknown mention attribute: " + key,
                              mention_raw_pos);
          }
        }
        if (mention.sort.empty()) mention.sort = heads.sort_of(mention.head);
        doc.mentions.push_back(mention);
      } else {
        if (in_mention) throw FormatError("tag inside mention", tag_pos);
        if (stack.empty() || stack.back() != tag.name) {
          throw FormatError("malformed tag nesting: </" + tag.name + ">",
                            tag_pos);
        }
        stack.pop_back();
        if (tag.name == "S" || tag.name == "HEADLINE") {
          doc.sentences[open_sentence].span.end = doc.text.size();
          open_sentence = -1;
          if (tag.name == "HEADLINE") in_headline = false;
        }
      }
    }
  }
  if (!stack.empty()) {
    throw FormatError("unclosed tag: <" + stack.back() + ">", raw.size());
  }
  (void)in_headline;

  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    if (doc.sentences[s].region == RegionKind::HEADLINE) {
      doc.headline_sentences.push_back(static_cast<int>(s));
    } else {
      doc.body_sentences.push_back(static_cast<int>(s));
    }
  }
  std::stable_sort(doc.mentions.begin(), doc.mentions.end(),
                   [](const Mention &a, const Mention &b) {
                     return a.span.start < b.span.start;
                   });
  return doc;
}

Document parse_document_file(const std::string &path, const HeadLexicon &heads) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open corpus file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), heads);
}

}  // namespace coref
