// Copyright 2026 The pcrystal Authors. All Rights Reserved.
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

#include "doctest.h"
#include "pcrystal/arm_sequence.hpp"
#include "pcrystal/errors.hpp"

using namespace pcrystal;

TEST_CASE("validation") {
  CHECK(ArmSequence::validate(3, {1, 3, 4}).str() == "(1,3,4)");
  CHECK(ArmSequence::validate(3, {1, 2, 4}).length() == 3);
  CHECK(ArmSequence::validate(3, {0, 1, 2}).length() == 3);
  CHECK(ArmSequence::validate(3, {2, 4, 6}).length() == 3);

  auto v = find_violation(3, {1, 4});
  REQUIRE(v);
  CHECK(v->kind == ArmViolation::Kind::Additivity);
  CHECK(v->t == 1);
  CHECK(v->u == 1);

  v = find_violation(3, {3});
  REQUIRE(v);
  CHECK(v->kind == ArmViolation::Kind::Range);
  CHECK(v->t == 1);

  CHECK_THROWS_AS(ArmSequence::validate(3, {1, 4}), InvalidArmSequence);
  try {
    ArmSequence::validate(3, {1, 3, 6});
    FAIL("expected a violation");
  } catch (const InvalidArmSequence& ex) {
    CHECK(ex.violation().kind == ArmViolation::Kind::Additivity);
  }
}

TEST_CASE("broadened range") {
  CHECK(find_violation(3, {0, 0}));
  CHECK_FALSE(find_violation(3, {0, 0}, true));
  CHECK_FALSE(find_violation(3, {2, 5}, true));
  CHECK(find_violation(3, {3}, true));
  CHECK(ArmSequence::validate(3, {0, 0}, true).broad());
}

TEST_CASE("canonical families") {
  CHECK(ArmSequence::canonical(3, Rational(3, 2), true, 6).prefix() == std::vector<long>{1, 3, 4, 6, 7, 9});
  CHECK(ArmSequence::canonical(3, Rational(3, 2), false, 6).prefix() == std::vector<long>{1, 2, 4, 5, 7, 8});
  CHECK(ArmSequence::berg(4, 4).prefix() == std::vector<long>{1, 2, 3, 4});
  CHECK(ArmSequence::restricted(4, 3).prefix() == std::vector<long>{3, 6, 9});
  CHECK(ArmSequence::lower_extreme(3, 3).prefix() == std::vector<long>{0, 1, 2});
  CHECK(ArmSequence::canonical(4, Rational(3, 2), true, 4).prefix() == std::vector<long>{1, 3, 4, 6});
  CHECK_THROWS_AS(ArmSequence::canonical(3, Rational(5, 2), true, 3), DomainError);
  CHECK_THROWS_AS(ArmSequence::canonical(3, Rational(1, 2), true, 3), DomainError);
  // Every canonical prefix satisfies the axioms.
  for (int n = 3; n <= 5; ++n)
    for (int num = 7; num <= (n - 1) * 7; ++num)
      for (bool plus : {true, false})
        CHECK_FALSE(find_violation(n, ArmSequence::canonical(n, Rational(num, 7), plus, 15).prefix()));
}

TEST_CASE("access and extension") {
  const auto a = ArmSequence::validate(3, {1, 3, 4});
  CHECK(a.at(0) == 0);
  CHECK(a.at(2) == 3);
  CHECK_THROWS_AS(a.at(4), ResourceError);
  CHECK(a.extended(5).prefix() == std::vector<long>{1, 3, 4, 6, 7});
  CHECK(a.extended(2) == a);
  CHECK(a.truncated(2).prefix() == std::vector<long>{1, 3});
  CHECK_FALSE(find_violation(3, a.extended(20).prefix()));
}

TEST_CASE("limit interval") {
  const auto iv = limit_interval(ArmSequence::validate(3, {1, 3, 4}));
  CHECK(iv.lo == Rational(3, 2));
  CHECK(iv.hi == Rational(5, 3));
  const auto b = limit_interval(ArmSequence::berg(3, 5));
  CHECK(b.lo == Rational(1));
  CHECK(b.hi == Rational(6, 5));
  const auto r = limit_interval(ArmSequence::restricted(3, 4));
  CHECK(r.lo == Rational(2));
  CHECK(r.hi == Rational(2));
}

TEST_CASE("extremes") {
  CHECK(is_extreme(ArmSequence::restricted(3, 4)) == Extreme::Upper);
  CHECK(is_extreme(ArmSequence::lower_extreme(3, 4)) == Extreme::Lower);
  CHECK(is_extreme(ArmSequence::berg(3, 4)) == Extreme::None);
}

TEST_CASE("rationals and prefix sizes") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("2") == Rational(2));
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK(prefix_for_hooks(3, 9) == 3);
  CHECK(prefix_for_signatures(3, 11) == 4);
}
