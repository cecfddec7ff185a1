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

#include "dihquiver/homset.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "gtest/gtest.h"

namespace dihquiver {
namespace {

using Pair = std::pair<int, int>;

std::set<Pair> Seeds(const std::vector<Coloring>& colorings) {
  std::set<Pair> out;
  for (const Coloring& c : colorings) out.emplace(c.a, c.b);
  return out;
}

std::multiset<std::uint64_t> BruteOrbitSizes(const TangleWord& word, int n) {
  std::multiset<std::uint64_t> sizes;
  for (const Orbit& o : DecomposeOrbits(EnumerateColoringsBruteforce(word, n), n).orbits) {
    sizes.insert(o.size());
  }
  return sizes;
}

TEST(ExtendColoringTest, TrivialSeedsGiveConstantColoring) {
  for (const TangleWord& word : EnumerateWords(5)) {
    const Coloring c = ExtendColoring(word, 7, 3, 3);
    for (const auto& tangle : c.strands) {
      for (int v : tangle) ASSERT_EQ(v, 3);
    }
  }
}

TEST(ExtendColoringTest, TrefoilStrands) {
  const Coloring c = ExtendColoring(TangleWord({3}), 3, 0, 1);
  ASSERT_EQ(c.strands.size(), 1u);
  EXPECT_EQ(c.strands[0], (std::vector<int>{0, 1, 2, 0, 1}));
}

TEST(ExtendColoringTest, ClaimValueForTwoTwo) {
  // [Delta_2] = [5] = 5 b - 4 a = 5 = 0 mod 5 for a = 0, b = 1.
  const Coloring c = ExtendColoring(TangleWord({2, 2}), 5, 0, 1);
  EXPECT_EQ(c.strand(2, 3), 0);
  EXPECT_EQ(c.strand(2, 3), c.a);
  // [Delta_2 + Delta_1] = [7] = 7 = 2 mod 5, which must equal psi(x_{1,3}).
  EXPECT_EQ(c.strand(2, 4), 2);
  EXPECT_EQ(c.strand(2, 4), c.strand(1, 3));
}

TEST(ExtendColoringTest, RejectsSeedsOutsideTheHomSet) {
  EXPECT_THROW(ExtendColoring(TangleWord({2, 2}), 4, 0, 1), std::invalid_argument);
  EXPECT_THROW(ExtendColoring(TangleWord({3}), 3, 0, 3), std::invalid_argument);
}

TEST(EnumerateTest, Examples) {
  EXPECT_EQ(EnumerateColoringsBruteforce(TangleWord({4}), 4).size(), 16u);
  EXPECT_EQ(EnumerateColoringsBruteforce(TangleWord({3}), 3).size(), 9u);
  const auto two_two = EnumerateColoringsBruteforce(TangleWord({2, 2}), 4);
  ASSERT_EQ(two_two.size(), 4u);
  for (const Coloring& c : two_two) EXPECT_TRUE(c.is_trivial());
}

TEST(EnumerateTest, SortedAndSerialMatchesParallel) {
  for (const TangleWord& word : EnumerateWords(5)) {
    for (int n = 1; n <= 10; ++n) {
      const auto par = EnumerateColoringsBruteforce(word, n, Execution::kParallel);
      const auto ser = EnumerateColoringsBruteforce(word, n, Execution::kSerial);
      ASSERT_TRUE(std::is_sorted(par.begin(), par.end()));
      ASSERT_EQ(par, ser);
    }
  }
}

TEST(ClosedFormCountTest, Examples) {
  EXPECT_EQ(ColoringCountClosedForm(4, 4), 16u);
  EXPECT_EQ(ColoringCountClosedForm(36, 12), 144u);
  EXPECT_EQ(ColoringCountClosedForm(5, 4), 4u);
  EXPECT_EQ(EnumerateColoringsBruteforce(TangleWord({36}), 12).size(), 144u);
}

// Brute force against the seed characterization, the count formula and the
// strand values predicted by the determinant sequence.
TEST(HomSetOracleTest, SeedsCountAndClaim) {
  for (const TangleWord& word : EnumerateWords(8)) {
    const DeterminantSequence seq = ComputeDeterminantSequence(word);
    for (int n = 1; n <= 16; ++n) {
      const auto homset = EnumerateColoringsBruteforce(word, n);
      ASSERT_EQ(homset.size(), ColoringCountClosedForm(seq.determinant(), n));
      std::set<Pair> expected;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (ReduceMod(seq.determinant() * (b - a), n) == 0) expected.emplace(a, b);
        }
      }
      ASSERT_EQ(Seeds(homset), expected) << word.ToString() << " n=" << n;
      for (const Coloring& c : homset) {
        for (std::size_t j = 1; j <= word.length(); ++j) {
          const BigInt& dj = seq.values[j];
          const BigInt& dprev = seq.values[j - 1];
          const int p = static_cast<int>(word[j - 1]);
          ASSERT_EQ(c.strand(static_cast<int>(j), p + 1), ReduceMod(dj * c.b - (dj - 1) * c.a, n));
          ASSERT_EQ(c.strand(static_cast<int>(j), p + 2),
                    ReduceMod((dj + dprev) * c.b - (dj + dprev - 1) * c.a, n));
        }
      }
    }
  }
}

TEST(TrivialColoringsTest, ConstantsInsideHomSet) {
  const auto three = TrivialColorings(TangleWord({2, 1}), 3);
  ASSERT_EQ(three.size(), 3u);
  for (int c = 0; c < 3; ++c) {
    EXPECT_EQ(three[c].a, c);
    EXPECT_EQ(three[c].b, c);
  }
  EXPECT_EQ(TrivialColorings(TangleWord({5}), 1).size(), 1u);
  for (const TangleWord& word : EnumerateWords(5)) {
    const auto all = Seeds(EnumerateColoringsBruteforce(word, 4));
    for (const Coloring& c : TrivialColorings(word, 4)) {
      ASSERT_EQ(c.a, c.b);
      ASSERT_TRUE(all.count({c.a, c.b}));
    }
  }
}

TEST(ActTest, Examples) {
  const Coloring psi = ExtendColoring(TangleWord({4}), 4, 1, 3);
  const Coloring same = Act(AffineMap::Identity(4), psi);
  EXPECT_EQ(same, psi);
  EXPECT_EQ(same.strands, psi.strands);
  const Coloring constant = Act(AffineMap::Constant(4, 2), psi);
  EXPECT_EQ(constant.a, 2);
  EXPECT_EQ(constant.b, 2);
  const Coloring fixed = Act(AffineMap{4, 0, 3}, ExtendColoring(TangleWord({4}), 4, 0, 2));
  EXPECT_EQ(fixed.a, 0);
  EXPECT_EQ(fixed.b, 2);
  EXPECT_THROW(Act(AffineMap::Identity(5), psi), std::invalid_argument);
}

TEST(ActTest, EveryEndomorphismMapsIntoTheHomSet) {
  for (const TangleWord& word : EnumerateWords(6)) {
    for (int n = 1; n <= 12; ++n) {
      const auto homset = EnumerateColoringsBruteforce(word, n);
      std::map<Pair, const Coloring*> by_seed;
      for (const Coloring& c : homset) by_seed[{c.a, c.b}] = &c;
      for (const AffineMap& f : AllEndomorphisms(DihedralQuandle(n))) {
        for (const Coloring& psi : homset) {
          const Coloring image = Act(f, psi);
          auto it = by_seed.find({image.a, image.b});
          ASSERT_NE(it, by_seed.end());
          // The pointwise image is the extension of the image seeds.
          ASSERT_EQ(image.strands, it->second->strands);
        }
      }
    }
  }
}

TEST(OrbitDecompositionTest, FourCrossingTorusLinkOverZ4) {
  const auto homset = EnumerateColoringsBruteforce(TangleWord({4}), 4);
  const OrbitDecomposition d = DecomposeOrbits(homset, 4);
  ASSERT_EQ(d.orbits.size(), 3u);
  std::set<std::set<Pair>> got;
  for (const Orbit& o : d.orbits) got.insert(Seeds(o.members));
  const std::set<std::set<Pair>> want = {
      {{0, 0}, {1, 1}, {2, 2}, {3, 3}},
      {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 3}, {1, 0}, {2, 1}, {3, 2}},
      {{0, 2}, {1, 3}, {2, 0}, {3, 1}},
  };
  EXPECT_EQ(got, want);
  EXPECT_EQ(d.orbits[0].divisor, 1);
  EXPECT_EQ(d.orbits[0].representative.b, 1);
  EXPECT_EQ(d.orbits[1].divisor, 2);
  EXPECT_EQ(d.orbits[1].representative.b, 2);
  EXPECT_EQ(d.orbits[2].divisor, 4);
  EXPECT_EQ(d.orbits[2].representative.b, 0);
  EXPECT_EQ(d.OrbitIndexOf(3, 0), 0);
  EXPECT_EQ(d.OrbitIndexOf(0, 5), -1);
}

TEST(OrbitDecompositionTest, TorusLinkT36Z12) {
  std::multiset<std::uint64_t> sizes = BruteOrbitSizes(TangleWord({36}), 12);
  EXPECT_EQ(sizes, (std::multiset<std::uint64_t>{48, 24, 24, 24, 12, 12}));
}

TEST(OrbitDecompositionTest, TrivialColoringsFormOneOrbit) {
  for (int n = 1; n <= 16; ++n) {
    const OrbitDecomposition d = DecomposeOrbits(EnumerateColoringsBruteforce(TangleWord({2, 3}), n), n);
    const Orbit& top = d.orbits.back();
    ASSERT_EQ(top.divisor, n);
    ASSERT_EQ(Seeds(top.members), Seeds(TrivialColorings(TangleWord({2, 3}), n)));
  }
}

TEST(OrbitDecompositionTest, RejectsSetsNotClosedUnderAut) {
  std::vector<Coloring> partial = EnumerateColoringsBruteforce(TangleWord({4}), 4);
  partial.pop_back();
  EXPECT_THROW(DecomposeOrbits(partial, 4), std::logic_error);
}

TEST(OrbitSizesClosedFormTest, Examples) {
  using Sizes = std::map<MultiIndex, std::uint64_t>;
  EXPECT_EQ(OrbitSizesClosedForm(4, 4), (Sizes{{{0}, 8}, {{1}, 4}, {{2}, 4}}));
  EXPECT_EQ(OrbitSizesClosedForm(36, 12), (Sizes{{{0, 0}, 48},
                                                 {{1, 0}, 24},
                                                 {{2, 0}, 24},
                                                 {{0, 1}, 24},
                                                 {{1, 1}, 12},
                                                 {{2, 1}, 12}}));
  EXPECT_EQ(OrbitSizesClosedForm(5, 4), (Sizes{{{2}, 4}}));
  EXPECT_EQ(OrbitSizesClosedForm(9, 1), (Sizes{{{}, 1}}));
}

TEST(OrbitSizesClosedFormTest, SizesSumToColoringCount) {
  for (int det = 1; det <= 80; ++det) {
    for (int n = 1; n <= 64; ++n) {
      std::uint64_t total = 0;
      for (const auto& [j, size] : OrbitSizesClosedForm(det, n)) total += size;
      ASSERT_EQ(total, ColoringCountClosedForm(det, n)) << det << " " << n;
    }
  }
}

TEST(OrbitSizesClosedFormTest, MatchBruteForceAndHaveZeroRepresentatives) {
  for (const TangleWord& word : EnumerateWords(7)) {
    const BigInt delta = Determinant(word);
    for (int n = 1; n <= 16; ++n) {
      std::multiset<std::uint64_t> want;
      for (const auto& [j, size] : OrbitSizesClosedForm(delta, n)) want.insert(size);
      const auto homset = EnumerateColoringsBruteforce(word, n);
      const OrbitDecomposition d = DecomposeOrbits(homset, n);
      std::multiset<std::uint64_t> got;
      for (const Orbit& o : d.orbits) {
        got.insert(o.size());
        ASSERT_EQ(o.representative.a, 0);
        for (const Coloring& m : o.members) ASSERT_EQ(DivisorLabel(m.a, m.b, n), o.divisor);
      }
      ASSERT_EQ(got, want) << word.ToString() << " n=" << n;
      ASSERT_EQ(d.total_size(), homset.size());
    }
  }
}

TEST(OrbitGridTest, LambdaBox) {
  const OrbitGrid g = ComputeOrbitGrid(36, 12);
  EXPECT_EQ(g.alpha, (MultiIndex{2, 1}));
  EXPECT_EQ(g.beta, (MultiIndex{2, 1}));
  EXPECT_EQ(g.lambda.size(), 6u);
  const OrbitGrid partial = ComputeOrbitGrid(2, 8);
  EXPECT_EQ(partial.beta, (MultiIndex{1}));
  EXPECT_EQ(partial.lambda, (std::vector<MultiIndex>{{2}, {3}}));
  EXPECT_THROW(ComputeOrbitGrid(0, 4), std::invalid_argument);
}

}  // namespace
}  // namespace dihquiver
