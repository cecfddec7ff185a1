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

#include "dihquiver/quiver.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dihquiver/kernels.h"

namespace dihquiver {

std::uint64_t Quiver::TotalMultiplicity() const {
  return std::accumulate(multiplicity.begin(), multiplicity.end(), std::uint64_t{0});
}

int Quiver::IndexOf(int a, int b) const {
  const Coloring probe{n, a, b, {}};
  auto it = std::lower_bound(vertices.begin(), vertices.end(), probe);
  if (it == vertices.end() || !(*it == probe)) return -1;
  return static_cast<int>(it - vertices.begin());
}

Quiver BuildQuiverBruteforce(const TangleWord& word, int n, std::span<const AffineMap> maps,
                             Execution execution) {
  for (const AffineMap& f : maps) {
    if (f.n != n) throw std::invalid_argument("endomorphism " + f.ToString() + " has the wrong modulus");
  }
  Quiver quiver;
  quiver.n = n;
  quiver.determinant = Determinant(word);
  quiver.vertices = EnumerateColoringsBruteforce(word, n, execution);
  quiver.generator_count = maps.size();
  if (quiver.vertices.size() > kMaxDenseVertices) {
    throw std::length_error("quiver has " + std::to_string(quiver.vertices.size()) +
                            " vertices; the dense builder supports at most " +
                            std::to_string(kMaxDenseVertices));
  }

  std::vector<std::pair<int, int>> seeds;
  std::vector<std::int32_t> index_of(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t k = 0; k < quiver.vertices.size(); ++k) {
    const Coloring& c = quiver.vertices[k];
    seeds.emplace_back(c.a, c.b);
    index_of[static_cast<std::size_t>(c.a) * n + c.b] = static_cast<std::int32_t>(k);
  }
  const kernels::QuiverInput input{n, seeds, index_of, maps};
  kernels::QuiverRows rows = execution == Execution::kSerial
                                 ? kernels::serial::BuildQuiverRows(input)
                                 : kernels::omp::BuildQuiverRows(input);
  if (!rows.closed) {
    throw std::logic_error("an endomorphism maps a coloring outside the coloring set");
  }
  quiver.multiplicity = std::move(rows.multiplicity);
  return quiver;
}

Quiver BuildFullQuiverBruteforce(const TangleWord& word, int n, Execution execution) {
  const std::vector<AffineMap> maps = AllEndomorphisms(DihedralQuandle(n));
  return BuildQuiverBruteforce(word, n, maps, execution);
}

std::vector<AffineMap> ConnectingEndomorphisms(const Coloring& from, const Coloring& to,
                                               std::span<const AffineMap> maps) {
  std::vector<AffineMap> result;
  for (const AffineMap& f : maps) {
    if (f.n == from.n && f.Apply(from.a) == to.a && f.Apply(from.b) == to.b) result.push_back(f);
  }
  return result;
}

std::uint64_t CountEdgesClosedForm(int a, int b, int n) {
  const std::int64_t g = Gcd(ReduceMod(a, n), n);
  return ReduceMod(b, n) % g == 0 ? static_cast<std::uint64_t>(g) : 0;
}

std::uint64_t ClosedFormQuiver::vertex_count() const {
  std::uint64_t total = 0;
  for (const auto& [j, size] : orbit_size) total += size;
  return total;
}

ClosedFormQuiver BuildQuiverClosedForm(const BigInt& determinant, int n) {
  ClosedFormQuiver cf;
  cf.n = n;
  cf.determinant = determinant;
  cf.grid = ComputeOrbitGrid(determinant, n);
  for (const MultiIndex& j : cf.grid.lambda) {
    cf.orbit_size[j] = OrbitSize(cf.grid.factorization, j);
    cf.internal_mult[j] = static_cast<std::uint64_t>(DivisorOf(cf.grid.factorization, j));
  }
  for (const MultiIndex& j : cf.grid.lambda) {
    for (const MultiIndex& k : cf.grid.lambda) {
      cf.cross_mult[{j, k}] = (j != k && Precedes(j, k)) ? cf.internal_mult[j] : 0;
    }
  }
  return cf;
}

BlockQuiver BlockQuiver::Complete(std::int64_t divisor, std::uint64_t size, std::uint64_t mult) {
  BlockQuiver q;
  q.blocks_.push_back({divisor, size, mult});
  q.cross_.assign(1, std::vector<std::uint64_t>(1, 0));
  return q;
}

BlockQuiver BlockQuiver::Nabla(const BlockQuiver& g, const BlockQuiver& h, std::uint64_t m) {
  BlockQuiver q;
  q.blocks_ = g.blocks_;
  q.blocks_.insert(q.blocks_.end(), h.blocks_.begin(), h.blocks_.end());
  const std::size_t ng = g.blocks_.size();
  const std::size_t total = q.blocks_.size();
  q.cross_.assign(total, std::vector<std::uint64_t>(total, 0));
  for (std::size_t i = 0; i < ng; ++i) {
    for (std::size_t k = 0; k < ng; ++k) q.cross_[i][k] = g.cross_[i][k];
  }
  for (std::size_t i = ng; i < total; ++i) {
    for (std::size_t k = ng; k < total; ++k) q.cross_[i][k] = h.cross_[i - ng][k - ng];
    for (std::size_t k = 0; k < ng; ++k) q.cross_[i][k] += m;
  }
  return q;
}

BlockQuiver BuildPrimePowerQuiver(const BigInt& determinant, std::int64_t p, int alpha) {
  if (alpha < 1) throw std::invalid_argument("prime power exponent must be >= 1");
  const Factorization f = Factorize(p);
  if (f.size() != 1 || f.factors[0].exponent != 1) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  const int beta = std::min(alpha, PAdicValuation(p, determinant));
  const auto pa = static_cast<std::uint64_t>(IntPow(p, alpha));
  BlockQuiver g = BlockQuiver::Complete(IntPow(p, alpha), pa, pa);
  for (int j = 1; j <= beta; ++j) {
    const auto mult = static_cast<std::uint64_t>(IntPow(p, alpha - j));
    const auto size = static_cast<std::uint64_t>(IntPow(p, alpha + j - 1)) *
                      static_cast<std::uint64_t>(p - 1);
    g = BlockQuiver::Nabla(g, BlockQuiver::Complete(IntPow(p, alpha - j), size, mult), mult);
  }
  return g;
}

std::string QuiverCertificate::ToString() const {
  std::ostringstream out;
  out << "orbits:";
  for (const OrbitSummary& o : orbits) {
    out << " (d=" << o.divisor << " size=" << o.size << " loop=" << o.self_loop << " internal=";
    if (o.internal) {
      out << *o.internal;
    } else {
      out << '-';
    }
    out << ')';
  }
  out << " cross:";
  for (std::size_t i = 0; i < cross.size(); ++i) {
    for (std::size_t k = 0; k < cross[i].size(); ++k) {
      if (cross[i][k] != 0) {
        out << ' ' << orbits[i].divisor << "->" << orbits[k].divisor << '=' << cross[i][k];
      }
    }
  }
  return out.str();
}

QuiverCertificate Certify(const Quiver& quiver, const OrbitDecomposition& decomp) {
  const std::size_t v = quiver.vertex_count();
  if (decomp.n != quiver.n || decomp.total_size() != v) {
    throw std::invalid_argument("orbit decomposition does not match the quiver's vertex set");
  }
  const std::size_t m = decomp.orbits.size();
  std::vector<std::vector<std::size_t>> members(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (const Coloring& c : decomp.orbits[k].members) {
      const int idx = quiver.IndexOf(c.a, c.b);
      if (idx < 0) throw std::invalid_argument("orbit member is not a quiver vertex");
      members[k].push_back(static_cast<std::size_t>(idx));
    }
  }

  auto non_uniform = [&](std::size_t i, std::size_t k, const char* what) {
    return NonUniformMultiplicityError(
        "non-uniform multiplicity: " + std::string(what) + " from orbit " +
        std::to_string(decomp.orbits[i].divisor) + " to orbit " +
        std::to_string(decomp.orbits[k].divisor));
  };

  QuiverCertificate cert;
  cert.cross.assign(m, std::vector<std::uint64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    OrbitSummary summary;
    summary.divisor = decomp.orbits[i].divisor;
    summary.size = members[i].size();
    std::optional<std::uint64_t> loop;
    for (std::size_t s : members[i]) {
      for (std::size_t t : members[i]) {
        const std::uint64_t mult = quiver.Multiplicity(s, t);
        std::optional<std::uint64_t>& slot = s == t ? loop : summary.internal;
        if (!slot) {
          slot = mult;
        } else if (*slot != mult) {
          throw non_uniform(i, i, s == t ? "self-loops" : "internal edges");
        }
      }
    }
    summary.self_loop = loop.value_or(0);
    cert.orbits.push_back(summary);

    for (std::size_t k = 0; k < m; ++k) {
      if (k == i) continue;
      std::optional<std::uint64_t> common;
      for (std::size_t s : members[i]) {
        for (std::size_t t : members[k]) {
          const std::uint64_t mult = quiver.Multiplicity(s, t);
          if (!common) {
            common = mult;
          } else if (*common != mult) {
            throw non_uniform(i, k, "cross edges");
          }
        }
      }
      cert.cross[i][k] = common.value_or(0);
    }
  }
  return cert;
}

QuiverCertificate CertifyClosedForm(const ClosedFormQuiver& cf) {
  std::vector<MultiIndex> order = cf.grid.lambda;
  std::sort(order.begin(), order.end(), [&](const MultiIndex& l, const MultiIndex& r) {
    return DivisorOf(cf.grid.factorization, l) < DivisorOf(cf.grid.factorization, r);
  });
  QuiverCertificate cert;
  for (const MultiIndex& j : order) {
    OrbitSummary summary;
    summary.divisor = DivisorOf(cf.grid.factorization, j);
    summary.size = cf.orbit_size.at(j);
    summary.self_loop = cf.internal_mult.at(j);
    if (summary.size > 1) summary.internal = cf.internal_mult.at(j);
    cert.orbits.push_back(summary);
  }
  cert.cross.assign(order.size(), std::vector<std::uint64_t>(order.size(), 0));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (i != k) cert.cross[i][k] = cf.cross_mult.at({order[i], order[k]});
    }
  }
  return cert;
}

QuiverCertificate CertifyBlocks(const BlockQuiver& blocks) {
  const auto& b = blocks.blocks();
  std::vector<std::size_t> order(b.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return b[l].divisor < b[r].divisor; });
  QuiverCertificate cert;
  for (std::size_t i : order) {
    OrbitSummary summary;
    summary.divisor = b[i].divisor;
    summary.size = b[i].size;
    summary.self_loop = b[i].mult;
    if (b[i].size > 1) summary.internal = b[i].mult;
    cert.orbits.push_back(summary);
  }
  cert.cross.assign(order.size(), std::vector<std::uint64_t>(order.size(), 0));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (i != k) cert.cross[i][k] = blocks.cross(order[i], order[k]);
    }
  }
  return cert;
}

bool QuiversIsomorphic(const Quiver& quiver, const OrbitDecomposition& decomp,
                       const ClosedFormQuiver& closed_form) {
  if (quiver.n != closed_form.n) return false;
  return Certify(quiver, decomp) == CertifyClosedForm(closed_form);
}

}  // namespace dihquiver
