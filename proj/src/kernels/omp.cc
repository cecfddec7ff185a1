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

#include <omp.h>

#include <stdexcept>

#include "dihquiver/kernels.h"

namespace dihquiver::kernels {

void SetWorkerCount(int k) {
  if (k < 1) throw std::invalid_argument("worker count must be >= 1");
  omp_set_num_threads(k);
}

int WorkerCount() { return omp_get_max_threads(); }

namespace omp {

std::vector<std::uint8_t> AcceptSeeds(const PropagationPlan& plan, int n) {
  const DihedralQuandle q(n);
  const std::int64_t seeds = static_cast<std::int64_t>(n) * n;
  std::vector<std::uint8_t> accepted(static_cast<std::size_t>(seeds), 0);
#pragma omp parallel
  {
    std::vector<int> strands(plan.strand_count);
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < seeds; ++s) {
      const int a = static_cast<int>(s / n);
      const int b = static_cast<int>(s % n);
      accepted[static_cast<std::size_t>(s)] = Propagate(plan, q, a, b, strands) ? 1 : 0;
    }
  }
  return accepted;
}

QuiverRows BuildQuiverRows(const QuiverInput& input) {
  const auto v = static_cast<std::int64_t>(input.vertices.size());
  QuiverRows rows;
  rows.multiplicity.assign(static_cast<std::size_t>(v * v), 0);
  int closed = 1;
  // Each vertex owns its row of the matrix.
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : closed)
  for (std::int64_t s = 0; s < v; ++s) {
    const auto [a, b] = input.vertices[static_cast<std::size_t>(s)];
    std::uint32_t* row = rows.multiplicity.data() + s * v;
    for (const AffineMap& f : input.maps) {
      const std::int32_t t =
          input.index_of[static_cast<std::size_t>(f.Apply(a)) * input.n + f.Apply(b)];
      if (t < 0) {
        closed = 0;
        continue;
      }
      ++row[t];
    }
  }
  rows.closed = closed != 0;
  return rows;
}

EndomorphismCensus CensusEndomorphisms(int n) {
  const DihedralQuandle q(n);
  // Partition Z_n^n by the values of f(0) and f(1); the remaining n - 2
  // coordinates run through an odometer inside each chunk.
  const int fixed = n >= 2 ? 2 : 1;
  std::int64_t chunks = 1;
  for (int i = 0; i < fixed; ++i) chunks *= n;

  std::uint64_t checked = 0, endos = 0, affine_count = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : checked, endos, affine_count)
  for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
    std::vector<int> f(n, 0);
    f[0] = static_cast<int>(chunk % n);
    if (fixed == 2) f[1] = static_cast<int>(chunk / n);
    while (true) {
      ++checked;
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
        ++endos;
        const AffineMap candidate{n, f[0], n == 1 ? 0 : f[1]};
        bool affine = true;
        for (int a = 0; a < n; ++a) affine = affine && candidate.Apply(a) == f[a];
        if (affine) ++affine_count;
      }
      int pos = fixed;
      while (pos < n && ++f[pos] == n) f[pos++] = 0;
      if (pos == n) break;
    }
  }
  return {checked, endos, affine_count};
}

}  // namespace omp
}  // namespace dihquiver::kernels
