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

#ifndef DIHQUIVER_VERIFY_H_
#define DIHQUIVER_VERIFY_H_

// Batch cross-check of brute force against the closed forms over a range of
// words and moduli.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dihquiver {

enum class Check {
  kCount,        // |Hom| = n gcd(Delta, n)
  kSeeds,        // accepted seeds are exactly n | Delta (b - a)
  kClaim,        // psi(x_{j, p_j + 1}) = Delta_j b - (Delta_j - 1) a
  kOrbits,       // orbit sizes match n_j
  kEdges,        // [0,a] -> [0,b] multiplicity = gcd(a, n) [gcd(a, n) | b]
  kCertificate,  // brute-force certificate = closed-form certificate
  kPrimePower,   // G_beta certificate = Lambda certificate (n = p^alpha)
  kAffine,       // exhaustive endomorphism census (n <= 7)
};
inline constexpr std::size_t kCheckCount = 8;

std::string_view CheckName(Check check);

struct CheckTally {
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct VerificationRow {
  int n = 0;
  std::size_t words = 0;
  std::array<CheckTally, kCheckCount> tallies{};

  const CheckTally& tally(Check c) const { return tallies[static_cast<std::size_t>(c)]; }
};

struct VerificationReport {
  int max_sum = 0;
  int max_n = 0;
  std::vector<VerificationRow> rows;
  // Human-readable description of each failure, capped.
  std::vector<std::string> failures;

  bool all_passed() const;
};

// Throws std::invalid_argument unless max_sum >= 1 and max_n >= 1.
VerificationReport RunVerification(int max_sum, int max_n);

}  // namespace dihquiver

#endif  // DIHQUIVER_VERIFY_H_
