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

#ifndef DIHQUIVER_EXPORT_H_
#define DIHQUIVER_EXPORT_H_

// JSON and Graphviz renderings. All lists are emitted in sorted order and
// object keys alphabetically, so output is byte-stable.

#include <string>

#include "json.hpp"

#include "dihquiver/homset.h"
#include "dihquiver/quiver.h"

namespace dihquiver {

// As a number when it fits in 64 bits, otherwise as a decimal string.
nlohmann::json BigIntToJson(const BigInt& value);

// {"a": a, "b": b}
nlohmann::json ColoringToJson(const Coloring& coloring);

// [{"divisor": d, "size": s, "members": [[a, b], ...]}, ...]
nlohmann::json OrbitsToJson(const OrbitDecomposition& decomp);

// {"orbits": [{"divisor", "size", "self_loop", "internal"}, ...],
//  "cross": [[from_divisor, to_divisor, multiplicity], ...]}
nlohmann::json CertificateToJson(const QuiverCertificate& cert);

// {"n", "determinant", "vertices", "edges": [[s, t, mult], ...], "orbits",
//  "certificate"}; edges with multiplicity 0 are omitted.
nlohmann::json QuiverToJson(const Quiver& quiver, const OrbitDecomposition& decomp,
                            const QuiverCertificate& cert);

// Vertices are named "a_b" and grouped into one same-rank cluster per orbit.
// Parallel edges are merged into one edge labeled with the multiplicity
// unless expand_edges is set.
std::string QuiverToDot(const Quiver& quiver, const OrbitDecomposition& decomp,
                        bool expand_edges);

// dump(2) plus a trailing newline.
std::string DumpJson(const nlohmann::json& value);

}  // namespace dihquiver

#endif  // DIHQUIVER_EXPORT_H_
