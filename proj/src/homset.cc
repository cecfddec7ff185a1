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
#include <stdexcept>
#include <string>

#include "dihquiver/kernels.h"

namespace dihquiver {
namespace {

Coloring MakeColoring(const StrandPresentation& pres, int n, std::span<const int> flat) {
  Coloring c;
  c.n = n;
  c.a = flat[0];
  c.b = flat[1];
  c.strands.reserve(pres.strand_counts.size());
  std::size_t offset = 0;
  for (int count : pres.strand_counts) {
    c.strands.emplace_back(flat.begin() + offset, flat.begin() + offset + count);
    offset += count;
  }
  return c;
}

}  // namespace

std::int64_t DivisorLabel(int a, int b, int n) {
  return Gcd(ReduceMod(static_cast<std::int64_t>(b) - a, n), n);
}

Coloring ExtendColoring(const TangleWord& word, int n, int a, int b) {
  const DihedralQuandle q(n);
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw std::invalid_argument("seed residues must lie in [0, n)");
  }
  const BigInt delta = Determinant(word);
  if (ReduceMod(delta * (b - a), n) != 0) {
    throw std::invalid_argument("seeds [" + std::to_string(a) + "," + std::to_string(b) +
                                "] do not extend: " + std::to_string(n) +
                                " does not divide Delta*(b-a) for Delta = " + delta.str());
  }
  const StrandPresentation pres = BuildStrandPresentation(word);
  const kernels::PropagationPlan plan = kernels::CompilePlan(pres);
  std::vector<int> flat(plan.strand_count);
  if (!kernels::Propagate(plan, q, a, b, flat)) {
    throw std::logic_error("closure relations fail for seeds satisfying the determinant condition");
  }
  return MakeColoring(pres, n, flat);
}

std::vector<Coloring> EnumerateColoringsBruteforce(const TangleWord& word, int n,
                                                   Execution execution) {
  const DihedralQuandle q(n);
  const StrandPresentation pres = BuildStrandPresentation(word);
  const kernels::PropagationPlan plan = kernels::CompilePlan(pres);
  const std::vector<std::uint8_t> accepted = execution == Execution::kSerial
                                                 ? kernels::serial::AcceptSeeds(plan, n)
                                                 : kernels::omp::AcceptSeeds(plan, n);
  std::vector<Coloring> colorings;
  std::vector<int> flat(plan.strand_count);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!accepted[static_cast<std::size_t>(a) * n + b]) continue;
      kernels::Propagate(plan, q, a, b, flat);
      colorings.push_back(MakeColoring(pres, n, flat));
    }
  }
  return colorings;
}

std::uint64_t ColoringCountClosedForm(const BigInt& determinant, int n) {
  return static_cast<std::uint64_t>(n) *
         static_cast<std::uint64_t>(Gcd(ReduceMod(determinant, n), n));
}

std::vector<Coloring> TrivialColorings(const TangleWord& word, int n) {
  const StrandPresentation pres = BuildStrandPresentation(word);
  std::vector<Coloring> result;
  for (int c = 0; c < n; ++c) {
    std::vector<int> flat(pres.generator_count(), c);
    result.push_back(MakeColoring(pres, n, flat));
  }
  return result;
}

Coloring Act(const AffineMap& f, const Coloring& psi) {
  if (f.n != psi.n) {
    throw std::invalid_argument("Act: modulus mismatch (" + std::to_string(f.n) + " vs " +
                                std::to_string(psi.n) + ")");
  }
  Coloring image = psi;
  image.a = f.Apply(psi.a);
  image.b = f.Apply(psi.b);
  for (auto& tangle : image.strands) {
    for (int& v : tangle) v = f.Apply(v);
  }
  return image;
}

int OrbitDecomposition::OrbitIndexOf(int a, int b) const {
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const auto& m = orbits[k].members;
    Coloring probe{n, a, b, {}};
    if (std::binary_search(m.begin(), m.end(), probe)) return static_cast<int>(k);
  }
  return -1;
}

std::size_t OrbitDecomposition::total_size() const {
  std::size_t total = 0;
  for (const Orbit& o : orbits) total += o.size();
  return total;
}

OrbitDecomposition DecomposeOrbits(std::span<const Coloring> homset, int n) {
  const DihedralQuandle q(n);
  const std::vector<AffineMap> automorphisms = AllAutomorphisms(q);
  std::vector<std::int32_t> index_of(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t k = 0; k < homset.size(); ++k) {
    index_of[static_cast<std::size_t>(homset[k].a) * n + homset[k].b] = static_cast<std::int32_t>(k);
  }

  OrbitDecomposition result;
  result.n = n;
  std::vector<bool> assigned(homset.size(), false);
  for (std::size_t k = 0; k < homset.size(); ++k) {
    if (assigned[k]) continue;
    const Coloring& psi = homset[k];
    std::vector<std::int32_t> member_ids;
    for (const AffineMap& g : automorphisms) {
      const std::int32_t id =
          index_of[static_cast<std::size_t>(g.Apply(psi.a)) * n + g.Apply(psi.b)];
      if (id < 0) {
        throw std::logic_error("coloring set is not closed under Aut(Z_" + std::to_string(n) + ")");
      }
      member_ids.push_back(id);
    }
    std::sort(member_ids.begin(), member_ids.end());
    member_ids.erase(std::unique(member_ids.begin(), member_ids.end()), member_ids.end());

    Orbit orbit;
    orbit.divisor = DivisorLabel(psi.a, psi.b, n);
    for (std::int32_t id : member_ids) {
      assigned[id] = true;
      orbit.members.push_back(homset[id]);
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    for (const Coloring& m : orbit.members) {
      if (DivisorLabel(m.a, m.b, n) != orbit.divisor) {
        throw std::logic_error("divisor label is not constant on an orbit");
      }
    }
    // Members are sorted by (a, b), so the first with a = 0 has the smallest b.
    auto rep = std::find_if(orbit.members.begin(), orbit.members.end(),
                            [](const Coloring& m) { return m.a == 0; });
    if (rep == orbit.members.end()) throw std::logic_error("orbit without a [0, b] member");
    orbit.representative = *rep;
    result.orbits.push_back(std::move(orbit));
  }
  std::sort(result.orbits.begin(), result.orbits.end(), [](const Orbit& l, const Orbit& r) {
    if (l.divisor != r.divisor) return l.divisor < r.divisor;
    return l.representative < r.representative;
  });
  return result;
}

OrbitGrid ComputeOrbitGrid(const BigInt& determinant, int n) {
  if (determinant <= 0) throw std::invalid_argument("determinant must be positive");
  OrbitGrid grid;
  grid.factorization = Factorize(n);
  for (const PrimePower& pp : grid.factorization.factors) {
    grid.alpha.push_back(pp.exponent);
    grid.beta.push_back(std::min(pp.exponent, PAdicValuation(pp.prime, determinant)));
  }
  // Odometer over the box alpha - beta <= j <= alpha, last coordinate fastest.
  const int k = static_cast<int>(grid.alpha.size());
  MultiIndex j(k);
  for (int i = 0; i < k; ++i) j[i] = grid.alpha[i] - grid.beta[i];
  while (true) {
    grid.lambda.push_back(j);
    int pos = k - 1;
    while (pos >= 0 && j[pos] == grid.alpha[pos]) {
      j[pos] = grid.alpha[pos] - grid.beta[pos];
      --pos;
    }
    if (pos < 0) break;
    ++j[pos];
  }
  return grid;
}

std::uint64_t OrbitSize(const Factorization& factorization, const MultiIndex& j) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const PrimePower& pp = factorization.factors[i];
    if (j[i] < pp.exponent) {
      size *= static_cast<std::uint64_t>(IntPow(pp.prime, 2 * pp.exponent - j[i] - 1)) *
              static_cast<std::uint64_t>(pp.prime - 1);
    } else {
      size *= static_cast<std::uint64_t>(IntPow(pp.prime, pp.exponent));
    }
  }
  return size;
}

std::map<MultiIndex, std::uint64_t> OrbitSizesClosedForm(const BigInt& determinant, int n) {
  const OrbitGrid grid = ComputeOrbitGrid(determinant, n);
  std::map<MultiIndex, std::uint64_t> sizes;
  for (const MultiIndex& j : grid.lambda) sizes[j] = OrbitSize(grid.factorization, j);
  return sizes;
}

}  // namespace dihquiver
