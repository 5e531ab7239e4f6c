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

#ifndef COREF_CONFIG_H_
#define COREF_CONFIG_H_

#include <string>

#include "coref/resolver.h"

namespace coref {

// Flat key=value configuration text; `#` starts a comment, unknown keys
// raise FormatError. Keys mirror the ResolutionConfig fields.
ResolutionConfig parse_config(const std::string &text,
                              ResolutionConfig base = ResolutionConfig());
ResolutionConfig parse_config_file(const std::string &path,
                                   ResolutionConfig base = ResolutionConfig());

std::string format_config(const ResolutionConfig &config);

}  // namespace coref

#endif  // COREF_CONFIG_H_
