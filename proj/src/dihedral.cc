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

#include <stdexcept>

#include "dihquiver/arith.h"
#include "dihquiver/kernels.h"

namespace dihquiver {

DihedralQuandle::DihedralQuandle(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("dihedral quandle order must be >= 1, got " +
                                std::to_string(n));
  }
}

bool AffineMap::IsAutomorphism() const { return Gcd(slope(), n) == 1; }

std::string AffineMap::ToString() const {
  return "[[" + std::to_string(x) + "," + std::to_string(y) + "]]";
}

std::vector<AffineMap> AllEndomorphisms(const DihedralQuandle& q) {
  const int n = q.order();
  std::vector<AffineMap> maps;
  maps.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) maps.push_back({n, x, y});
  }
  return maps;
}

std::vector<AffineMap> AllAutomorphisms(const DihedralQuandle& q) {
  std::vector<AffineMap> maps;
  for (const AffineMap& f : AllEndomorphisms(q)) {
    if (f.IsAutomorphism()) maps.push_back(f);
  }
  return maps;
}

AffineMap Compose(const AffineMap& f, const AffineMap& g) {
  if (f.n != g.n) {
    throw std::invalid_argument("Compose: modulus mismatch (" + std::to_string(f.n) +
                                " vs " + std::to_string(g.n) + ")");
  }
  return {f.n, f.Apply(g.x), f.Apply(g.y)};
}

AffineMap Invert(const AffineMap& f) {
  if (!f.IsAutomorphism()) {
    throw std::invalid_argument("Invert: " + f.ToString() + " is not an automorphism of Z_" +
                                std::to_string(f.n));
  }
  // a |-> s^{-1} (a - x)
  const std::int64_t inv = ModInverse(f.slope(), f.n);
  return {f.n, static_cast<int>(ReduceMod(inv * -f.x, f.n)),
          static_cast<int>(ReduceMod(inv * (1 - f.x), f.n))};
}

EndomorphismCensus CensusEndomorphisms(const DihedralQuandle& q) {
  if (q.order() > kMaxExhaustiveOrder) {
    throw std::invalid_argument("exhaustive endomorphism search is limited to n <= " +
                                std::to_string(kMaxExhaustiveOrder) + ", got " +
                                std::to_string(q.order()));
  }
  return kernels::omp::CensusEndomorphisms(q.order());
}

bool VerifyAffineCompleteness(const DihedralQuandle& q) {
  const EndomorphismCensus census = CensusEndomorphisms(q);
  const auto n2 = static_cast<std::uint64_t>(q.order()) * q.order();
  return census.endomorphisms == n2 && census.affine == n2;
}

}  // namespace dihquiver
