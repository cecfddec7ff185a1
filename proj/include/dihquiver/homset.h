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

#ifndef DIHQUIVER_HOMSET_H_
#define DIHQUIVER_HOMSET_H_

// Colorings of a 2-bridge link by Z_n^dih: brute-force enumeration through
// the strand presentation, the closed-form count, and the decomposition of
// the coloring set into orbits of Aut(Z_n^dih).

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "dihquiver/arith.h"
#include "dihquiver/dihedral.h"
#include "dihquiver/tangle.h"

namespace dihquiver {

enum class Execution { kSerial, kParallel };

// The homomorphism [a, b] with psi(x_{1,1}) = a and psi(x_{1,2}) = b. Two
// colorings are equal iff their seeds agree; the strand values are carried
// along for verification only.
struct Coloring {
  int n = 1;
  int a = 0;
  int b = 0;
  // strands[j - 1][i - 1] = psi(x_{j,i}).
  std::vector<std::vector<int>> strands;

  int strand(int j, int i) const { return strands[j - 1][i - 1]; }
  bool is_trivial() const { return a == b; }

  friend bool operator==(const Coloring& l, const Coloring& r) {
    return l.n == r.n && l.a == r.a && l.b == r.b;
  }
  friend std::strong_ordering operator<=>(const Coloring& l, const Coloring& r) {
    if (auto c = l.n <=> r.n; c != 0) return c;
    if (auto c = l.a <=> r.a; c != 0) return c;
    return l.b <=> r.b;
  }
};

// gcd(b - a, n), with gcd(0, n) = n.
std::int64_t DivisorLabel(int a, int b, int n);

// The unique extension of the seeds (a, b). Throws std::invalid_argument
// unless n | Delta (b - a).
Coloring ExtendColoring(const TangleWord& word, int n, int a, int b);

// Propagates all n^2 seeds through the presentation and keeps those whose
// closure relations hold. Does not use the determinant. Sorted by (a, b).
std::vector<Coloring> EnumerateColoringsBruteforce(
    const TangleWord& word, int n, Execution execution = Execution::kParallel);

// n * gcd(Delta, n).
std::uint64_t ColoringCountClosedForm(const BigInt& determinant, int n);

// The n constant colorings psi_c.
std::vector<Coloring> TrivialColorings(const TangleWord& word, int n);

// f o psi, strand by strand. Throws std::invalid_argument on modulus mismatch.
Coloring Act(const AffineMap& f, const Coloring& psi);

struct Orbit {
  // The member [0, b] with the smallest b.
  Coloring representative;
  std::vector<Coloring> members;  // sorted
  std::int64_t divisor = 0;

  std::size_t size() const { return members.size(); }
};

struct OrbitDecomposition {
  int n = 1;
  std::vector<Orbit> orbits;  // sorted by divisor

  // Index into orbits of the orbit holding [a, b], or -1.
  int OrbitIndexOf(int a, int b) const;
  std::size_t total_size() const;
};

// Orbits of Aut(Z_n^dih) acting on a full coloring set. Throws
// std::logic_error if the set is not closed under the action, an orbit mixes
// divisor labels, or an orbit has no member with a = 0.
OrbitDecomposition DecomposeOrbits(std::span<const Coloring> homset, int n);

// Index set Lambda = { j : alpha - beta <= j <= alpha } of the orbit grid,
// where beta_i = min(alpha_i, nu_{p_i}(N)).
struct OrbitGrid {
  Factorization factorization;
  MultiIndex alpha;
  MultiIndex beta;
  std::vector<MultiIndex> lambda;  // lexicographic
};

OrbitGrid ComputeOrbitGrid(const BigInt& determinant, int n);

// n_j = prod_i n_{j_i}, with n_{j_i} = p^{2 alpha - j - 1} (p - 1) below the
// top exponent and p^alpha at it.
std::uint64_t OrbitSize(const Factorization& factorization, const MultiIndex& j);

std::map<MultiIndex, std::uint64_t> OrbitSizesClosedForm(const BigInt& determinant, int n);

}  // namespace dihquiver

#endif  // DIHQUIVER_HOMSET_H_
