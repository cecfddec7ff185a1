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

#ifndef DIHQUIVER_KERNELS_H_
#define DIHQUIVER_KERNELS_H_

// Exhaustive enumeration kernels. Each kernel exists twice: a plain serial
// reference in kernels::serial, and an OpenMP version in kernels::omp that
// must return bit-identical results for any thread count. The library entry
// points call the OpenMP versions; tests and the benchmark compare the two.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dihquiver/dihedral.h"
#include "dihquiver/tangle.h"

namespace dihquiver::kernels {

// A StrandPresentation compiled into straight-line code over flat strand
// indices: the two seeds x_{1,1}, x_{1,2} at positions 0 and 1, then a fixed
// sequence of copy and twist steps, then equality checks. Relations that are
// not needed to determine a strand (closures, and any redundant twist or
// gluing) become checks.
struct PropagationPlan {
  enum class StepKind : std::uint8_t { kCopy, kTwist };
  struct Step {
    StepKind kind;
    std::uint32_t target;
    std::uint32_t first;   // copy source, or left operand of the twist
    std::uint32_t second;  // right operand of the twist
  };

  std::size_t strand_count = 0;
  std::vector<Step> steps;
  std::vector<Step> checks;  // target must equal the value the step computes
};

// Throws std::logic_error if the relations do not determine every strand
// from the two seeds.
PropagationPlan CompilePlan(const StrandPresentation& presentation);

// Fills strands (size plan.strand_count) from seeds a, b and returns whether
// every check holds.
bool Propagate(const PropagationPlan& plan, const DihedralQuandle& q, int a, int b,
               std::span<int> strands);

// Dense edge-multiplicity matrix: vertices are seed pairs (a, b), index_of
// maps a * n + b to the vertex index or -1. Row-major, size V * V.
struct QuiverInput {
  int n = 1;
  std::span<const std::pair<int, int>> vertices;
  std::span<const std::int32_t> index_of;
  std::span<const AffineMap> maps;
};

struct QuiverRows {
  std::vector<std::uint32_t> multiplicity;
  // False if some f o psi fell outside the vertex set.
  bool closed = true;
};

namespace serial {

// accepted[a * n + b] != 0 iff seed (a, b) satisfies every check.
std::vector<std::uint8_t> AcceptSeeds(const PropagationPlan& plan, int n);
QuiverRows BuildQuiverRows(const QuiverInput& input);
EndomorphismCensus CensusEndomorphisms(int n);

}  // namespace serial

namespace omp {

std::vector<std::uint8_t> AcceptSeeds(const PropagationPlan& plan, int n);
QuiverRows BuildQuiverRows(const QuiverInput& input);
EndomorphismCensus CensusEndomorphisms(int n);

}  // namespace omp

// Sets the OpenMP thread count used by the omp kernels (k >= 1).
void SetWorkerCount(int k);
int WorkerCount();

}  // namespace dihquiver::kernels

#endif  // DIHQUIVER_KERNELS_H_
