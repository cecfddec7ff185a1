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

#include "dihquiver/kernels.h"

namespace dihquiver::kernels::serial {

std::vector<std::uint8_t> AcceptSeeds(const PropagationPlan& plan, int n) {
  const DihedralQuandle q(n);
  std::vector<std::uint8_t> accepted(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> strands(plan.strand_count);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      accepted[static_cast<std::size_t>(a) * n + b] = Propagate(plan, q, a, b, strands) ? 1 : 0;
    }
  }
  return accepted;
}

QuiverRows BuildQuiverRows(const QuiverInput& input) {
  const std::size_t v = input.vertices.size();
  QuiverRows rows;
  rows.multiplicity.assign(v * v, 0);
  for (std::size_t s = 0; s < v; ++s) {
    const auto [a, b] = input.vertices[s];
    for (const AffineMap& f : input.maps) {
      const std::int32_t t = input.index_of[static_cast<std::size_t>(f.Apply(a)) * input.n + f.Apply(b)];
      if (t < 0) {
        rows.closed = false;
        continue;
      }
      ++rows.multiplicity[s * v + static_cast<std::size_t>(t)];
    }
  }
  return rows;
}

EndomorphismCensus CensusEndomorphisms(int n) {
  const DihedralQuandle q(n);
  EndomorphismCensus census;
  std::vector<int> f(n, 0);
  while (true) {
    ++census.functions_checked;
    bool hom = true;
    for (int a = 0; a < n && hom; ++a) {
      for (int b = 0; b < n; ++b) {
        if (f[q.Op(a, b)] != q.Op(f[a], f[b])) {
          hom = false;
          break;
        }
      }
    }
    if (hom) {
      ++census.endomorphisms;
      const AffineMap candidate{n, f[0], n == 1 ? 0 : f[1]};
      bool affine = true;
      for (int a = 0; a < n; ++a) affine = affine && candidate.Apply(a) == f[a];
      if (affine) ++census.affine;
    }
    // Odometer increment over Z_n^n.
    int pos = 0;
    while (pos < n && ++f[pos] == n) f[pos++] = 0;
    if (pos == n) break;
  }
  return census;
}

}  // namespace dihquiver::kernels::serial
