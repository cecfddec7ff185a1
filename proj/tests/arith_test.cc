// Copyright 2026 The dihquiver Authors
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

#include "dihquiver/arith.h"

#include <stdexcept>

#include "gtest/gtest.h"

namespace dihquiver {
namespace {

TEST(GcdTest, Examples) {
  EXPECT_EQ(Gcd(36, 12), 12);
  EXPECT_EQ(Gcd(0, 4), 4);
  EXPECT_EQ(Gcd(5, 4), 1);
  EXPECT_EQ(Gcd(0, 0), 0);
}

TEST(PAdicValuationTest, Examples) {
  EXPECT_EQ(PAdicValuation(2, 36), 2);
  EXPECT_EQ(PAdicValuation(3, 36), 2);
  EXPECT_EQ(PAdicValuation(5, 36), 0);
  EXPECT_EQ(PAdicValuation(2, BigInt(1) << 100), 100);
}

TEST(PAdicValuationTest, RejectsZero) {
  EXPECT_THROW(PAdicValuation(2, 0), std::domain_error);
  EXPECT_THROW(PAdicValuation(3, BigInt(0)), std::domain_error);
}

TEST(FactorizeTest, Examples) {
  EXPECT_EQ(Factorize(12).factors, (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_TRUE(Factorize(1).empty());
  EXPECT_EQ(Factorize(27).factors, (std::vector<PrimePower>{{3, 3}}));
  EXPECT_THROW(Factorize(0), std::domain_error);
}

TEST(FactorizeTest, RoundTripsUpToAMillion) {
  for (std::int64_t n = 1; n <= 1'000'000; ++n) {
    const Factorization f = Factorize(n);
    ASSERT_EQ(f.Value(), n);
    for (std::size_t i = 0; i < f.size(); ++i) {
      ASSERT_GE(f.factors[i].exponent, 1);
      if (i > 0) ASSERT_LT(f.factors[i - 1].prime, f.factors[i].prime);
    }
  }
}

TEST(FactorizeTest, ListedFactorsArePrime) {
  for (std::int64_t n = 2; n <= 5000; ++n) {
    for (const PrimePower& pp : Factorize(n).factors) {
      for (std::int64_t d = 2; d * d <= pp.prime; ++d) ASSERT_NE(pp.prime % d, 0) << n;
    }
  }
}

TEST(EulerTotientTest, Examples) {
  EXPECT_EQ(EulerTotient(9), 6);
  EXPECT_EQ(EulerTotient(1), 1);
  EXPECT_EQ(EulerTotient(12), 4);
}

TEST(EulerTotientTest, MatchesUnitCount) {
  for (std::int64_t n = 1; n <= 500; ++n) {
    std::int64_t units = 0;
    for (std::int64_t k = 0; k < n; ++k) units += Gcd(k, n) == 1 ? 1 : 0;
    ASSERT_EQ(EulerTotient(n), units) << n;
  }
}

TEST(EulerTotientTest, PrimePowers) {
  for (std::int64_t p = 2; p <= 10'000; ++p) {
    if (Factorize(p).factors.size() != 1 || Factorize(p).factors[0].exponent != 1) continue;
    std::int64_t pk = p;
    for (int k = 1; pk <= 10'000; ++k, pk *= p) {
      ASSERT_EQ(EulerTotient(pk), IntPow(p, k - 1) * (p - 1)) << p << "^" << k;
    }
  }
}

TEST(SolveLinearCongruenceTest, Examples) {
  EXPECT_EQ(SolveLinearCongruence(2, 0, 4), (std::vector<std::int64_t>{0, 2}));
  EXPECT_TRUE(SolveLinearCongruence(2, 1, 4).empty());
  EXPECT_EQ(SolveLinearCongruence(1, 3, 4), (std::vector<std::int64_t>{3}));
  EXPECT_EQ(SolveLinearCongruence(0, 0, 3), (std::vector<std::int64_t>{0, 1, 2}));
}

TEST(SolveLinearCongruenceTest, MatchesScanAndCountFormula) {
  for (std::int64_t n = 1; n <= 64; ++n) {
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t b = 0; b < n; ++b) {
        std::vector<std::int64_t> scan;
        for (std::int64_t x = 0; x < n; ++x) {
          if ((a * x - b) % n == 0) scan.push_back(x);
        }
        const auto solutions = SolveLinearCongruence(a, b, n);
        ASSERT_EQ(solutions, scan) << a << "x = " << b << " mod " << n;
        const std::int64_t g = Gcd(a, n);
        ASSERT_EQ(static_cast<std::int64_t>(solutions.size()), b % g == 0 ? g : 0);
      }
    }
  }
}

TEST(ModInverseTest, InvertsUnitsAndRejectsOthers) {
  EXPECT_EQ(ModInverse(2, 5), 3);
  EXPECT_EQ(ModInverse(-1, 4), 3);
  EXPECT_THROW(ModInverse(2, 4), std::domain_error);
}

TEST(ReduceModTest, NegativeAndBig) {
  EXPECT_EQ(ReduceMod(-7, 12), 5);
  EXPECT_EQ(ReduceMod(BigInt(-7), 12), 5);
  EXPECT_EQ(ReduceMod((BigInt(1) << 80) + 3, 1024), 3);
}

TEST(MultiIndexTest, DivisorRoundTrip) {
  const Factorization f = Factorize(360);  // 2^3 3^2 5
  for (std::int64_t d = 1; d <= 360; ++d) {
    if (360 % d != 0) continue;
    const MultiIndex j = MultiIndexOf(f, d);
    ASSERT_EQ(j.size(), 3u);
    ASSERT_EQ(DivisorOf(f, j), d);
  }
  EXPECT_THROW(MultiIndexOf(f, 7), std::invalid_argument);
  EXPECT_TRUE(MultiIndexOf(Factorize(1), 1).empty());
}

TEST(MultiIndexTest, PrecedesIsComponentwise) {
  EXPECT_TRUE(Precedes({0, 1}, {1, 1}));
  EXPECT_TRUE(Precedes({1, 1}, {1, 1}));
  EXPECT_FALSE(Precedes({2, 0}, {1, 1}));
  EXPECT_FALSE(Precedes({1, 0}, {0, 1}));
  EXPECT_TRUE(Precedes({}, {}));
}

}  // namespace
}  // namespace dihquiver
