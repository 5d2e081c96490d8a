// Copyright 2026 The balclust Authors
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

#include <algorithm>
#include <cmath>
#include <random>

#include "balclust/ratio.hpp"
#include "doctest.h"

using balclust::Ratio;

TEST_CASE("ratio compares by cross multiplication") {
  CHECK(Ratio(1, 3) == Ratio(2, 6));
  CHECK(Ratio(0.2, 0.8) < Ratio(0.9, 1.0));
  CHECK(Ratio(0.9, 0.2) > Ratio::One());
  CHECK(Ratio::Zero() == Ratio(0.0, 0.7));
  CHECK_FALSE(Ratio(1, 3).SameTerms(Ratio(2, 6)));
  CHECK(balclust::Max(Ratio(1, 4), Ratio(1, 3)).SameTerms(Ratio(1, 3)));
}

TEST_CASE("ratio separates quotients that round to the same double") {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  int collisions = 0;
  for (int i = 0; i < 20000; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const double a_up = std::nextafter(a, 2.0);
    if (a / b != a_up / b) continue;
    ++collisions;
    REQUIRE(Ratio(a, b) < Ratio(a_up, b));
  }
  CHECK(collisions > 0);
}

TEST_CASE("ratio ordering agrees with division when quotients are far apart") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(1e-6, 1.0);
  for (int i = 0; i < 100000; ++i) {
    const Ratio x(u(rng), u(rng));
    const Ratio y(u(rng), u(rng));
    const double qx = x.value();
    const double qy = y.value();
    if (std::abs(qx - qy) <= 1e-12 * std::max(qx, qy)) continue;
    REQUIRE((x < y) == (qx < qy));
    REQUIRE((y < x) == (qy < qx));
  }
}

TEST_CASE("ratio ordering is a strict weak order on random samples") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> small(1, 12);
  for (int i = 0; i < 20000; ++i) {
    const Ratio a(small(rng), small(rng));
    const Ratio b(small(rng), small(rng));
    const Ratio c(small(rng), small(rng));
    if (a < b && b < c) REQUIRE(a < c);
    if (a == b && b == c) REQUIRE(a == c);
    REQUIRE(((a < b) + (b < a) + (a == b)) == 1);
  }
}
