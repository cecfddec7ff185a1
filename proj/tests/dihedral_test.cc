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

#include "dihquiver/dihedral.h"

#include <random>
#include <set>
#include <stdexcept>

#include "dihquiver/arith.h"
#include "gtest/gtest.h"

namespace dihquiver {
namespace {

TEST(DihedralQuandleTest, OpExamples) {
  EXPECT_EQ(DihedralQuandle(5).Op(1, 3), 0);
  EXPECT_EQ(DihedralQuandle(4).Op(2, 2), 2);
  EXPECT_EQ(DihedralQuandle(12).Op(7, 0), 5);
  EXPECT_THROW(DihedralQuandle(0), std::invalid_argument);
}

TEST(DihedralQuandleTest, QuandleAxiomsAndInvolution) {
  for (int n = 1; n <= 64; ++n) {
    const DihedralQuandle q(n);
    for (int x = 0; x < n; ++x) ASSERT_EQ(q.Op(x, x), x);
    for (int y = 0; y < n; ++y) {
      std::set<int> image;
      for (int x = 0; x < n; ++x) {
        image.insert(q.Op(x, y));
        ASSERT_EQ(q.Op(q.Op(x, y), y), x);
      }
      ASSERT_EQ(static_cast<int>(image.size()), n) << "beta_" << y << " not bijective mod " << n;
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          ASSERT_EQ(q.Op(q.Op(x, y), z), q.Op(q.Op(x, z), q.Op(y, z)));
        }
      }
    }
  }
}

TEST(AffineMapTest, EveryAffineMapIsAnEndomorphism) {
  for (int n = 1; n <= 64; ++n) {
    const DihedralQuandle q(n);
    for (const AffineMap& f : AllEndomorphisms(q)) {
      for (int a = 0; a < n; ++a) {
        // a y - (a - 1) x
        ASSERT_EQ(f.Apply(a), ReduceMod(static_cast<std::int64_t>(a) * f.y -
                                            static_cast<std::int64_t>(a - 1) * f.x, n));
        for (int b = 0; b < n; ++b) {
          ASSERT_EQ(f.Apply(q.Op(a, b)), q.Op(f.Apply(a), f.Apply(b)));
        }
      }
    }
  }
}

TEST(AllEndomorphismsTest, SmallOrders) {
  const auto two = AllEndomorphisms(DihedralQuandle(2));
  ASSERT_EQ(two.size(), 4u);
  // const-0, identity, a -> a + 1, const-1.
  EXPECT_EQ(two[0], (AffineMap{2, 0, 0}));
  EXPECT_EQ(two[1], AffineMap::Identity(2));
  EXPECT_EQ(two[2].Apply(0), 1);
  EXPECT_EQ(two[2].Apply(1), 0);
  EXPECT_EQ(two[3], AffineMap::Constant(2, 1));
  EXPECT_EQ(AllEndomorphisms(DihedralQuandle(3)).size(), 9u);
  EXPECT_EQ(AllEndomorphisms(DihedralQuandle(1)).size(), 1u);
}

TEST(AllAutomorphismsTest, CountIsNTimesPhi) {
  EXPECT_EQ(AllAutomorphisms(DihedralQuandle(4)).size(), 8u);
  EXPECT_EQ(AllAutomorphisms(DihedralQuandle(3)).size(), 6u);
  EXPECT_EQ(AllAutomorphisms(DihedralQuandle(1)).size(), 1u);
  for (int n = 1; n <= 64; ++n) {
    const auto autos = AllAutomorphisms(DihedralQuandle(n));
    ASSERT_EQ(static_cast<std::int64_t>(autos.size()), n * EulerTotient(n));
    for (const AffineMap& f : autos) {
      std::set<int> image;
      for (int a = 0; a < n; ++a) image.insert(f.Apply(a));
      ASSERT_EQ(static_cast<int>(image.size()), n);
    }
  }
}

TEST(ComposeTest, Examples) {
  const AffineMap f{4, 1, 3};
  EXPECT_EQ(Compose(AffineMap::Identity(4), f), f);
  EXPECT_EQ(Compose(f, AffineMap{4, 0, 2}), (AffineMap{4, 1, 1}));
  EXPECT_EQ(Compose(AffineMap::Constant(4, 2), f), AffineMap::Constant(4, 2));
  EXPECT_THROW(Compose(AffineMap::Identity(4), AffineMap::Identity(5)), std::invalid_argument);
}

TEST(ComposeTest, MonoidLaws) {
  std::mt19937 rng(20240611);
  for (int n = 1; n <= 24; ++n) {
    std::uniform_int_distribution<int> residue(0, n - 1);
    auto random_map = [&] { return AffineMap{n, residue(rng), residue(rng)}; };
    for (int trial = 0; trial < 300; ++trial) {
      const AffineMap f = random_map(), g = random_map(), h = random_map();
      ASSERT_EQ(Compose(Compose(f, g), h), Compose(f, Compose(g, h)));
      ASSERT_EQ(Compose(AffineMap::Identity(n), f), f);
      ASSERT_EQ(Compose(f, AffineMap::Identity(n)), f);
      const AffineMap fg = Compose(f, g);
      for (int a = 0; a < n; ++a) ASSERT_EQ(fg.Apply(a), f.Apply(g.Apply(a)));
    }
  }
}

TEST(InvertTest, Examples) {
  EXPECT_EQ(Invert(AffineMap::Identity(7)), AffineMap::Identity(7));
  EXPECT_EQ(Invert(AffineMap{5, 0, 2}), (AffineMap{5, 0, 3}));
  EXPECT_EQ(Invert(AffineMap{4, 1, 2}), (AffineMap{4, 3, 0}));
  EXPECT_THROW(Invert(AffineMap{4, 0, 2}), std::invalid_argument);
  EXPECT_THROW(Invert(AffineMap::Constant(3, 1)), std::invalid_argument);
}

TEST(InvertTest, TwoSidedInverse) {
  for (int n = 1; n <= 40; ++n) {
    for (const AffineMap& f : AllAutomorphisms(DihedralQuandle(n))) {
      const AffineMap g = Invert(f);
      ASSERT_EQ(Compose(f, g), AffineMap::Identity(n));
      ASSERT_EQ(Compose(g, f), AffineMap::Identity(n));
    }
  }
}

TEST(AffineCompletenessTest, Examples) {
  EXPECT_TRUE(VerifyAffineCompleteness(DihedralQuandle(2)));
  EXPECT_TRUE(VerifyAffineCompleteness(DihedralQuandle(5)));
  EXPECT_TRUE(VerifyAffineCompleteness(DihedralQuandle(6)));
}

TEST(AffineCompletenessTest, CensusCounts) {
  for (int n = 1; n <= kMaxExhaustiveOrder; ++n) {
    const EndomorphismCensus census = CensusEndomorphisms(DihedralQuandle(n));
    ASSERT_EQ(census.functions_checked, static_cast<std::uint64_t>(IntPow(n, n)));
    ASSERT_EQ(census.endomorphisms, static_cast<std::uint64_t>(n * n));
    ASSERT_EQ(census.affine, static_cast<std::uint64_t>(n * n));
  }
}

TEST(AffineCompletenessTest, RejectsLargeOrders) {
  EXPECT_THROW(VerifyAffineCompleteness(DihedralQuandle(kMaxExhaustiveOrder + 1)),
               std::invalid_argument);
}

}  // namespace
}  // namespace dihquiver
