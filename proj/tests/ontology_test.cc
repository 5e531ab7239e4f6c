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

#include "coref/ontology.h"

#include "doctest.h"

using namespace coref;

namespace {

SortHierarchy business_sorts() {
  return SortHierarchy::load(
      "automaker < company\n"
      "airline < company\n"
      "company < organization\n"
      "union < organization\n");
}

}  // namespace

TEST_CASE("sort relation covers all four outcomes") {
  SortHierarchy h = business_sorts();
  CHECK(h.relation("company", "company") == SortRelation::EQUAL);
  CHECK(h.relation("company", "automaker") == SortRelation::SUBSUMES);
  CHECK(h.relation("automaker", "company") == SortRelation::SUBSUMED_BY);
  CHECK(h.relation("automaker", "airline") == SortRelation::DISJOINT);
  CHECK(h.relation("organization", "airline") == SortRelation::SUBSUMES);
  CHECK(h.relation(SortHierarchy::kTop, "union") == SortRelation::SUBSUMES);
  CHECK(h.relation("union", SortHierarchy::kTop) == SortRelation::SUBSUMED_BY);
}

TEST_CASE("unknown sorts canonicalize to TOP") {
  SortHierarchy h = business_sorts();
  CHECK(h.canonical("gadget") == SortHierarchy::kTop);
  CHECK(h.canonical("") == SortHierarchy::kTop);
  CHECK(h.relation("gadget", "widget") == SortRelation::EQUAL);  // both TOP
  CHECK(h.relation("gadget", "company") == SortRelation::SUBSUMES);
}

TEST_CASE("declared roots may hang directly under TOP") {
  SortHierarchy h = SortHierarchy::load("situation < TOP\n");
  CHECK(h.contains("situation"));
  CHECK(h.relation("situation", "accident") == SortRelation::SUBSUMED_BY);
  CHECK(h.relation("situation", "situation") == SortRelation::EQUAL);
}

TEST_CASE("hierarchy loader rejects cycles and multiple parents") {
  CHECK_THROWS_AS(SortHierarchy::load("a < b\nb < a\n"), FormatError);
  CHECK_THROWS_AS(SortHierarchy::load("a < b\na < c\n"), FormatError);
  CHECK_THROWS_AS(SortHierarchy::load("TOP < a\n"), FormatError);
  CHECK_THROWS_AS(SortHierarchy::load("nonsense line\n"), FormatError);
  CHECK_THROWS_AS(SortHierarchy::load("a <\n"), FormatError);
  // Comments and blank lines are fine; re-declaring the same edge is fine.
  SortHierarchy h = SortHierarchy::load("# taxonomy\n\na < b\na < b\n");
  CHECK(h.relation("b", "a") == SortRelation::SUBSUMES);
}

TEST_CASE("head lexicon falls back through naive singulars") {
  HeadLexicon lex = HeadLexicon::load(
      "company : company\n"
      "talk : talk\n"
      "# comment\n"
      "attendant : attendant\n");
  CHECK(lex.sort_of("company") == "company");
  CHECK(lex.sort_of("companies") == "company");  // -ies
  CHECK(lex.sort_of("talks") == "talk");         // -s
  CHECK(lex.sort_of("Attendants") == "attendant");
  CHECK(lex.sort_of("gadget") == SortHierarchy::kTop);
  CHECK_THROWS_AS(HeadLexicon::load("no colon here\n"), FormatError);
}

TEST_CASE("number consistency matches singular/plural/exact") {
  SortHierarchy h = business_sorts();
  auto ok = [&](NumberValue a, NumberValue b) {
    return number_consistent(a, b, false, "", h);
  };
  CHECK(ok(NumberValue::sg(), NumberValue::sg()));
  CHECK(ok(NumberValue::pl(), NumberValue::pl()));
  CHECK_FALSE(ok(NumberValue::sg(), NumberValue::pl()));
  CHECK_FALSE(ok(NumberValue::pl(), NumberValue::sg()));
  CHECK(ok(NumberValue::unknown(), NumberValue::sg()));
  CHECK(ok(NumberValue::pl(), NumberValue::unknown()));

  // twelve <-> PL accepted, twelve <-> SG rejected.
  CHECK(ok(NumberValue::count(12), NumberValue::pl()));
  CHECK_FALSE(ok(NumberValue::count(12), NumberValue::sg()));
  CHECK(ok(NumberValue::count(1), NumberValue::sg()));
  CHECK_FALSE(ok(NumberValue::count(1), NumberValue::pl()));
  // Distinct exact counts never unify.
  CHECK_FALSE(ok(NumberValue::count(2), NumberValue::count(3)));
  CHECK(ok(NumberValue::count(2), NumberValue::count(2)));
}

TEST_CASE("plural pronouns may take singular organization antecedents") {
  SortHierarchy h = business_sorts();
  // "they" against a singular company: allowed, companies are aggregates.
  CHECK(number_consistent(NumberValue::pl(), NumberValue::sg(), true,
                          "company", h));
  CHECK(number_consistent(NumberValue::pl(), NumberValue::sg(), true,
                          "organization", h));
  // Not for non-organization sorts, unknown sorts, or non-pronouns.
  CHECK_FALSE(number_consistent(NumberValue::pl(), NumberValue::sg(), true,
                                "person", h));
  CHECK_FALSE(number_consistent(NumberValue::pl(), NumberValue::sg(), true,
                                SortHierarchy::kTop, h));
  CHECK_FALSE(number_consistent(NumberValue::pl(), NumberValue::sg(), false,
                                "company", h));
}

TEST_CASE("modifier incompatibility classes") {
  ModifierLexicon lex = ModifierLexicon::load(
      "french, british, german\n"
      "two-tier, three-tier\n");
  auto ok = [&](std::vector<std::string> a, std::vector<std::string> b) {
    return modifier_consistent(a, b, lex);
  };
  CHECK_FALSE(ok({"french"}, {"british"}));
  CHECK(ok({"french"}, {"multinational"}));  // unknown modifiers are free
  CHECK(ok({"french"}, {"french", "large"}));
  CHECK_FALSE(ok({"new", "two-tier"}, {"three-tier"}));
  CHECK(ok({}, {"british"}));
  CHECK(lex.class_of("FRENCH") == lex.class_of("german"));
  CHECK(lex.class_of("large") == -1);
}
