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

#include "coref/types.h"

namespace coref {

const char *to_string(DetType det) {
  switch (det) {
    case DetType::DEF: return "DEF";
    case DetType::INDEF: return "INDEF";
    case DetType::PRON: return "PRON";
    case DetType::POSS_PRON: return "POSS_PRON";
    case DetType::REFLEXIVE: return "REFLEXIVE";
    case DetType::PROPER: return "PROPER";
    case DetType::BARE: return "BARE";
    case DetType::QUANT: return "QUANT";
  }
  return "?";
}

const char *to_string(RegionKind region) {
  return region == RegionKind::HEADLINE ? "HEADLINE" : "TEXT";
}

std::string to_string(const NumberValue &n) {
  switch (n.kind) {
    case NumberValue::UNKNOWN: return "UNKNOWN";
    case NumberValue::SG: return "SG";
    case NumberValue::PL: return "PL";
    case NumberValue::EXACT: return std::to_string(n.exact);
  }
  return "?";
}

}  // namespace coref
