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

#include "dihquiver/export.h"

#include <limits>
#include <sstream>

namespace dihquiver {
namespace {

std::string VertexName(const Coloring& c) {
  return "\"" + std::to_string(c.a) + "_" + std::to_string(c.b) + "\"";
}

}  // namespace

nlohmann::json BigIntToJson(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  return value.str();
}

nlohmann::json ColoringToJson(const Coloring& coloring) {
  return {{"a", coloring.a}, {"b", coloring.b}};
}

nlohmann::json OrbitsToJson(const OrbitDecomposition& decomp) {
  nlohmann::json orbits = nlohmann::json::array();
  for (const Orbit& o : decomp.orbits) {
    nlohmann::json members = nlohmann::json::array();
    for (const Coloring& c : o.members) members.push_back({c.a, c.b});
    orbits.push_back({{"divisor", o.divisor}, {"size", o.size()}, {"members", members}});
  }
  return orbits;
}

nlohmann::json CertificateToJson(const QuiverCertificate& cert) {
  nlohmann::json orbits = nlohmann::json::array();
  for (const OrbitSummary& o : cert.orbits) {
    nlohmann::json entry = {{"divisor", o.divisor},
                            {"size", o.size},
                            {"self_loop", o.self_loop},
                            {"internal", nullptr}};
    if (o.internal) entry["internal"] = *o.internal;
    orbits.push_back(entry);
  }
  nlohmann::json cross = nlohmann::json::array();
  for (std::size_t i = 0; i < cert.cross.size(); ++i) {
    for (std::size_t k = 0; k < cert.cross[i].size(); ++k) {
      if (i == k) continue;
      cross.push_back({cert.orbits[i].divisor, cert.orbits[k].divisor, cert.cross[i][k]});
    }
  }
  return {{"orbits", orbits}, {"cross", cross}};
}

nlohmann::json QuiverToJson(const Quiver& quiver, const OrbitDecomposition& decomp,
                            const QuiverCertificate& cert) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const Coloring& c : quiver.vertices) vertices.push_back({c.a, c.b});
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t s = 0; s < quiver.vertex_count(); ++s) {
    for (std::size_t t = 0; t < quiver.vertex_count(); ++t) {
      const std::uint32_t mult = quiver.Multiplicity(s, t);
      if (mult != 0) edges.push_back({s, t, mult});
    }
  }
  nlohmann::json orbits = nlohmann::json::array();
  for (const Orbit& o : decomp.orbits) {
    orbits.push_back({{"divisor", o.divisor}, {"size", o.size()}});
  }
  return {{"n", quiver.n},
          {"determinant", BigIntToJson(quiver.determinant)},
          {"vertices", vertices},
          {"edges", edges},
          {"orbits", orbits},
          {"certificate", CertificateToJson(cert)}};
}

std::string QuiverToDot(const Quiver& quiver, const OrbitDecomposition& decomp,
                        bool expand_edges) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  out << "  label=\"full coloring quiver over Z_" << quiver.n << ", determinant "
      << quiver.determinant.str() << "\";\n";
  for (const Orbit& o : decomp.orbits) {
    out << "  subgraph cluster_d" << o.divisor << " {\n";
    out << "    label=\"divisor " << o.divisor << "\";\n";
    out << "    rank=same;\n";
    for (const Coloring& c : o.members) out << "    " << VertexName(c) << ";\n";
    out << "  }\n";
  }
  for (std::size_t s = 0; s < quiver.vertex_count(); ++s) {
    for (std::size_t t = 0; t < quiver.vertex_count(); ++t) {
      const std::uint32_t mult = quiver.Multiplicity(s, t);
      if (mult == 0) continue;
      const std::string edge =
          "  " + VertexName(quiver.vertices[s]) + " -> " + VertexName(quiver.vertices[t]);
      if (expand_edges) {
        for (std::uint32_t k = 0; k < mult; ++k) out << edge << ";\n";
      } else {
        out << edge << " [label=\"" << mult << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string DumpJson(const nlohmann::json& value) { return value.dump(2) + "\n"; }

}  // namespace dihquiver
