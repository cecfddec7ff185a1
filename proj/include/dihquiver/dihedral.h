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

#ifndef DIHQUIVER_DIHEDRAL_H_
#define DIHQUIVER_DIHEDRAL_H_

#include <cstdint>
#include <string>
#include <vector>

namespace dihquiver {

// Residues mod n with x |> y = 2y - x.
class DihedralQuandle {
 public:
  // Throws std::invalid_argument for n < 1.
  explicit DihedralQuandle(int n);

  int order() const { return n_; }

  int Op(int x, int y) const {
    const std::int64_t r = (2 * static_cast<std::int64_t>(y) - x) % n_;
    return static_cast<int>(r < 0 ? r + n_ : r);
  }

  int Reduce(std::int64_t x) const {
    const std::int64_t r = x % n_;
    return static_cast<int>(r < 0 ? r + n_ : r);
  }

 private:
  int n_;
};

// The endomorphism [[x, y]] of Z_n^dih sending 0 to x and 1 to y, i.e.
// a |-> (y - x) a + x. Every endomorphism has this form (see
// VerifyAffineCompleteness for the exhaustive check on small n).
struct AffineMap {
  int n = 1;
  int x = 0;
  int y = 0;

  static AffineMap Identity(int n) { return {n, 0, n == 1 ? 0 : 1}; }
  static AffineMap Constant(int n, int c) { return {n, c, c}; }

  int slope() const { return static_cast<int>(((static_cast<std::int64_t>(y) - x) % n + n) % n); }

  int Apply(int a) const {
    const std::int64_t r = (static_cast<std::int64_t>(slope()) * a + x) % n;
    return static_cast<int>(r < 0 ? r + n : r);
  }

  bool IsAutomorphism() const;
  std::string ToString() const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
  friend auto operator<=>(const AffineMap&, const AffineMap&) = default;
};

// All n^2 endomorphisms, lexicographic in (x, y).
std::vector<AffineMap> AllEndomorphisms(const DihedralQuandle& q);

// The n * phi(n) endomorphisms with unit slope, lexicographic in (x, y).
std::vector<AffineMap> AllAutomorphisms(const DihedralQuandle& q);

// f o g. Throws std::invalid_argument on modulus mismatch.
AffineMap Compose(const AffineMap& f, const AffineMap& g);

// Throws std::invalid_argument if f is not an automorphism.
AffineMap Invert(const AffineMap& f);

// Largest n for which the n^n exhaustive search is run.
inline constexpr int kMaxExhaustiveOrder = 7;

struct EndomorphismCensus {
  std::uint64_t functions_checked = 0;
  std::uint64_t endomorphisms = 0;
  // Endomorphisms that coincide with some AffineMap.
  std::uint64_t affine = 0;

  friend bool operator==(const EndomorphismCensus&, const EndomorphismCensus&) = default;
};

// Checks every self-map of Z_n against the endomorphism law. Throws
// std::invalid_argument above kMaxExhaustiveOrder.
EndomorphismCensus CensusEndomorphisms(const DihedralQuandle& q);

// True iff the census finds exactly n^2 endomorphisms, all affine.
bool VerifyAffineCompleteness(const DihedralQuandle& q);

}  // namespace dihquiver

#endif  // DIHQUIVER_DIHEDRAL_H_
