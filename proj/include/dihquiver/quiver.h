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

#ifndef DIHQUIVER_QUIVER_H_
#define DIHQUIVER_QUIVER_H_

// Full quandle coloring quivers of 2-bridge links over Z_n^dih.
//
// Two independent constructions are provided. BuildQuiverBruteforce applies
// every endomorphism to every coloring and counts where it lands. The closed
// forms describe the same multigraph orbit by orbit: BuildQuiverClosedForm
// uses the multi-index grid Lambda and the weight w(j, j'), and
// BuildPrimePowerQuiver iterates G_j = G_{j-1} <-nabla_{p^{alpha-j}} K for
// n = p^alpha. All three reduce to a QuiverCertificate, and two quivers of
// this family are isomorphic iff their certificates are equal: vertices in
// one orbit are interchangeable, and orbits carry distinct divisor labels.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dihquiver/arith.h"
#include "dihquiver/dihedral.h"
#include "dihquiver/homset.h"
#include "dihquiver/tangle.h"

namespace dihquiver {

// The dense multiplicity matrix is V x V.
inline constexpr std::size_t kMaxDenseVertices = 4096;

struct Quiver {
  int n = 1;
  BigInt determinant = 1;
  std::vector<Coloring> vertices;  // sorted by (a, b)
  std::size_t generator_count = 0;  // |S|
  // Row-major, multiplicity[s * V + t] = #{f in S : f o vertices[s] = vertices[t]}.
  std::vector<std::uint32_t> multiplicity;

  std::size_t vertex_count() const { return vertices.size(); }
  std::uint32_t Multiplicity(std::size_t s, std::size_t t) const {
    return multiplicity[s * vertices.size() + t];
  }
  std::uint64_t TotalMultiplicity() const;
  int IndexOf(int a, int b) const;
};

// Vertices are the brute-force coloring set; S must consist of endomorphisms
// of Z_n^dih. Throws std::length_error above kMaxDenseVertices.
Quiver BuildQuiverBruteforce(const TangleWord& word, int n, std::span<const AffineMap> maps,
                             Execution execution = Execution::kParallel);

// S = End(Z_n^dih).
Quiver BuildFullQuiverBruteforce(const TangleWord& word, int n,
                                 Execution execution = Execution::kParallel);

// The f in S with f o from = to; lists the parallel edges behind one entry
// of the multiplicity matrix.
std::vector<AffineMap> ConnectingEndomorphisms(const Coloring& from, const Coloring& to,
                                               std::span<const AffineMap> maps);

// Number of endomorphisms sending [0, a] to [0, b]: gcd(a, n) if it divides
// b, else 0.
std::uint64_t CountEdgesClosedForm(int a, int b, int n);

struct ClosedFormQuiver {
  int n = 1;
  BigInt determinant = 1;
  OrbitGrid grid;
  std::map<MultiIndex, std::uint64_t> orbit_size;     // n_j
  std::map<MultiIndex, std::uint64_t> internal_mult;  // p^j
  std::map<std::pair<MultiIndex, MultiIndex>, std::uint64_t> cross_mult;  // w(j, j')

  std::uint64_t vertex_count() const;
};

ClosedFormQuiver BuildQuiverClosedForm(const BigInt& determinant, int n);

// A disjoint union of complete blocks (K_size, mult) plus uniform cross
// edges: cross[i][k] edges from every vertex of block i to every vertex of
// block k (i != k).
class BlockQuiver {
 public:
  struct Block {
    std::int64_t divisor = 0;
    std::uint64_t size = 0;
    std::uint64_t mult = 0;
  };

  static BlockQuiver Complete(std::int64_t divisor, std::uint64_t size, std::uint64_t mult);

  // g <-nabla_m h: the union of g and h with m edges from every vertex of h
  // to every vertex of g.
  static BlockQuiver Nabla(const BlockQuiver& g, const BlockQuiver& h, std::uint64_t m);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::uint64_t cross(std::size_t from, std::size_t to) const { return cross_[from][to]; }

 private:
  std::vector<Block> blocks_;
  std::vector<std::vector<std::uint64_t>> cross_;
};

// G_beta for n = p^alpha. Block introduced at step j is labeled by the
// divisor p^{alpha - j} of the orbit it models.
BlockQuiver BuildPrimePowerQuiver(const BigInt& determinant, std::int64_t p, int alpha);

struct OrbitSummary {
  std::int64_t divisor = 0;
  std::uint64_t size = 0;
  std::uint64_t self_loop = 0;
  // Edges between two distinct vertices of the orbit; absent for a
  // single-vertex orbit.
  std::optional<std::uint64_t> internal;

  friend bool operator==(const OrbitSummary&, const OrbitSummary&) = default;
};

struct QuiverCertificate {
  std::vector<OrbitSummary> orbits;  // sorted by divisor
  // cross[i][k] for orbits i != k; the diagonal is zero.
  std::vector<std::vector<std::uint64_t>> cross;

  std::string ToString() const;
  friend bool operator==(const QuiverCertificate&, const QuiverCertificate&) = default;
};

class NonUniformMultiplicityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws NonUniformMultiplicityError if the multiplicity is not constant over
// some ordered orbit pair, and std::invalid_argument if decomp does not cover
// exactly the quiver's vertices.
QuiverCertificate Certify(const Quiver& quiver, const OrbitDecomposition& decomp);
QuiverCertificate CertifyClosedForm(const ClosedFormQuiver& closed_form);
QuiverCertificate CertifyBlocks(const BlockQuiver& blocks);

bool QuiversIsomorphic(const Quiver& quiver, const OrbitDecomposition& decomp,
                       const ClosedFormQuiver& closed_form);

}  // namespace dihquiver

#endif  // DIHQUIVER_QUIVER_H_
