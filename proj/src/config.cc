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

#include "coref/config.h"

#include <fstream>
#include <sstream>

namespace coref {

namespace {

std::string trimmed(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string &value, const std::string &key) {
  if (value == "1" || value == "true" || value == "on" || value == "yes") {
    return true;
  }
  if (value == "0" || value == "false" || value == "off" || value == "no") {
    return false;
  }
  throw FormatError("bad boolean for " + key + ": " + value);
}

int parse_int(const std::string &value, const std::string &key) {
  try {
    size_t used = 0;
    int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception &) {
    throw FormatError("bad integer for " + key + ": " + value);
  }
}

}  // namespace

ResolutionConfig parse_config(const std::string &text, ResolutionConfig base) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw FormatError("config line " + std::to_string(line_no) +
                        " is not key=value: " + line);
    }
    std::string key = trimmed(line.substr(0, eq));
    std::string value = trimmed(line.substr(eq + 1));
    if (key == "window_definite") {
      base.window_definite = parse_int(value, key);
    } else if (key == "window_pronoun") {
      base.window_pronoun = parse_int(value, key);
    } else if (key == "window_possessive") {
      base.window_possessive = parse_int(value, key);
    } else if (key == "soft_window") {
      base.soft_window = parse_bool(value, key);
    } else if (key == "destructive") {
      base.destructive = parse_bool(value, key);
    } else if (key == "disable_sort_filter") {
      base.disable_sort_filter = parse_bool(value, key);
    } else if (key == "disable_number_filter") {
      base.disable_number_filter = parse_bool(value, key);
    } else if (key == "disable_modifier_filter") {
      base.disable_modifier_filter = parse_bool(value, key);
    } else if (key == "disable_window") {
      base.disable_window = parse_bool(value, key);
    } else if (key == "case_normalize_names") {
      base.case_normalize_names = parse_bool(value, key);
    } else if (key == "headline_to_headline") {
      base.headline_to_headline = parse_bool(value, key);
    } else if (key == "acronym_min_len") {
      base.acronym_min_len = parse_int(value, key);
    } else if (key == "org_sort_name") {
      base.org_sort_name = value;
    } else {
      throw FormatError("unknown config key: " + key);
    }
  }
  if (base.window_definite < 0 || base.window_pronoun < 0) {
    throw FormatError("window counts must be >= 0");
  }
  return base;
}

ResolutionConfig parse_config_file(const std::string &path,
                                   ResolutionConfig base) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), base);
}

std::string format_config(const ResolutionConfig &c) {
  std::ostringstream out;
  out << "window_definite=" << c.window_definite << '\n'
      << "window_pronoun=" << c.window_pronoun << '\n'
      << "window_possessive=" << c.window_possessive << '\n'
      << "soft_window=" << (c.soft_window ? 1 : 0) << '\n'
      << "destructive=" << (c.destructive ? 1 : 0) << '\n'
      << "disable_sort_filter=" << (c.disable_sort_filter ? 1 : 0) << '\n'
      << "disable_number_filter=" << (c.disable_number_filter ? 1 : 0) << '\n'
      << "disable_modifier_filter=" << (c.disable_modifier_filter ? 1 : 0)
      << '\n'
      << "disable_window=" << (c.disable_window ? 1 : 0) << '\n'
      << "case_normalize_names=" << (c.case_normalize_names ? 1 : 0) << '\n'
      << "headline_to_headline=" << (c.headline_to_headline ? 1 : 0) << '\n'
      << "acronym_min_len=" << c.acronym_min_len << '\n'
      << "org_sort_name=" << c.org_sort_name << '\n';
  return out.str();
}

}  // namespace coref
