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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dihquiver/export.h"
#include "dihquiver/homset.h"
#include "dihquiver/kernels.h"
#include "dihquiver/quiver.h"
#include "dihquiver/tangle.h"
#include "dihquiver/verify.h"

namespace dihquiver::cli {
namespace {

struct RunConfig {
  std::string link;
  int n = 0;
  std::string format;
  std::string out_path;
  bool expand_edges = false;
  int max_sum = 8;
  int max_n = 12;
  int workers = 1;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Painter {
 public:
  explicit Painter(bool enabled) : enabled_(enabled) {}
  std::string Verdict(bool ok) const {
    const char* text = ok ? "yes" : "no";
    if (!enabled_) return text;
    return std::string(ok ? "\033[32m" : "\033[31m") + text + "\033[0m";
  }
  std::string Mark(bool ok) const {
    const char* text = ok ? "pass" : "FAIL";
    if (!enabled_) return text;
    return std::string(ok ? "\033[32m" : "\033[31m") + text + "\033[0m";
  }

 private:
  bool enabled_;
};

void ValidateModulus(int n) {
  if (n < 1) throw ConfigError("--n must be >= 1");
}

std::string LinkHeader(const TangleWord& word) {
  return "link " + word.ToString() + " = " + WordToFraction(word).ToString();
}

std::string ColoringsReport(const RunConfig& cfg, const Painter& paint, bool& agree) {
  ValidateModulus(cfg.n);
  const TangleWord word = ParseLinkSpec(cfg.link);
  const BigInt delta = Determinant(word);
  const std::vector<Coloring> homset = EnumerateColoringsBruteforce(word, cfg.n);
  const std::uint64_t closed = ColoringCountClosedForm(delta, cfg.n);
  const OrbitDecomposition decomp = DecomposeOrbits(homset, cfg.n);
  agree = closed == homset.size();

  if (cfg.format == "json") {
    nlohmann::json report = {{"link", word.ToString()},
                             {"fraction", WordToFraction(word).ToString()},
                             {"determinant", BigIntToJson(delta)},
                             {"n", cfg.n},
                             {"count_closed_form", closed},
                             {"count_bruteforce", homset.size()},
                             {"counts_agree", agree},
                             {"orbits", OrbitsToJson(decomp)}};
    return DumpJson(report);
  }
  std::ostringstream out;
  out << LinkHeader(word) << "\n";
  out << "determinant " << delta.str() << "\n";
  out << "n " << cfg.n << "\n";
  out << "colorings (closed form) " << closed << "\n";
  out << "colorings (brute force) " << homset.size() << "\n";
  out << "orbits " << decomp.orbits.size() << "\n";
  out << "  divisor      size  representative\n";
  for (const Orbit& o : decomp.orbits) {
    out << "  " << std::setw(7) << o.divisor << "  " << std::setw(8) << o.size() << "  ["
        << o.representative.a << "," << o.representative.b << "]\n";
  }
  out << "counts agree: " << paint.Verdict(agree) << "\n";
  return out.str();
}

std::string QuiverReport(const RunConfig& cfg, const Painter& paint, bool& iso) {
  ValidateModulus(cfg.n);
  const TangleWord word = ParseLinkSpec(cfg.link);
  const BigInt delta = Determinant(word);
  const Quiver quiver = BuildFullQuiverBruteforce(word, cfg.n);
  const OrbitDecomposition decomp = DecomposeOrbits(quiver.vertices, cfg.n);
  const QuiverCertificate cert = Certify(quiver, decomp);
  const QuiverCertificate closed = CertifyClosedForm(BuildQuiverClosedForm(delta, cfg.n));
  iso = cert == closed;

  if (cfg.format == "json") {
    nlohmann::json report = QuiverToJson(quiver, decomp, cert);
    report["isomorphic"] = iso;
    return DumpJson(report);
  }
  if (cfg.format == "dot") return QuiverToDot(quiver, decomp, cfg.expand_edges);

  std::ostringstream out;
  out << LinkHeader(word) << "\n";
  out << "determinant " << delta.str() << "\n";
  out << "n " << cfg.n << "\n";
  out << "vertices " << quiver.vertex_count() << "\n";
  out << "total edge multiplicity " << quiver.TotalMultiplicity() << "\n";
  out << "orbits " << cert.orbits.size() << "\n";
  out << "  divisor      size  self-loop  internal\n";
  for (const OrbitSummary& o : cert.orbits) {
    out << "  " << std::setw(7) << o.divisor << "  " << std::setw(8) << o.size << "  "
        << std::setw(9) << o.self_loop << "  " << std::setw(8)
        << (o.internal ? std::to_string(*o.internal) : std::string("-")) << "\n";
  }
  out << "cross multiplicities (from -> to)\n";
  bool any = false;
  for (std::size_t i = 0; i < cert.cross.size(); ++i) {
    for (std::size_t k = 0; k < cert.cross.size(); ++k) {
      if (i == k || cert.cross[i][k] == 0) continue;
      any = true;
      out << "  " << cert.orbits[i].divisor << " -> " << cert.orbits[k].divisor << ": "
          << cert.cross[i][k] << "\n";
    }
  }
  if (!any) out << "  none\n";
  out << "isomorphic to closed form: " << paint.Verdict(iso) << "\n";
  return out.str();
}

std::string VerifyReport(const RunConfig& cfg, const Painter& paint, bool& passed) {
  if (cfg.max_sum < 1) throw ConfigError("--max-sum must be >= 1");
  if (cfg.max_n < 1) throw ConfigError("--max-n must be >= 1");
  const VerificationReport report = RunVerification(cfg.max_sum, cfg.max_n);
  passed = report.all_passed();

  if (cfg.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const VerificationRow& row : report.rows) {
      nlohmann::json checks = nlohmann::json::object();
      for (std::size_t c = 0; c < kCheckCount; ++c) {
        const CheckTally& t = row.tallies[c];
        checks[std::string(CheckName(static_cast<Check>(c)))] = {{"checked", t.checked},
                                                                {"failed", t.failed}};
      }
      rows.push_back({{"n", row.n}, {"words", row.words}, {"checks", checks}});
    }
    return DumpJson({{"max_sum", report.max_sum},
                     {"max_n", report.max_n},
                     {"passed", passed},
                     {"rows", rows},
                     {"failures", report.failures}});
  }

  std::ostringstream out;
  out << "verify: words with entry sum <= " << report.max_sum << ", 1 <= n <= " << report.max_n
      << "\n";
  out << "   n  words";
  for (std::size_t c = 0; c < kCheckCount; ++c) {
    out << "  " << std::setw(11) << CheckName(static_cast<Check>(c));
  }
  out << "\n";
  for (const VerificationRow& row : report.rows) {
    out << std::setw(4) << row.n << "  " << std::setw(5) << row.words;
    for (const CheckTally& t : row.tallies) {
      // Pad on the uncolored text so escape codes do not skew the columns.
      const std::string plain = t.checked == 0 ? "-" : (t.failed == 0 ? "pass" : "FAIL");
      const std::string shown = t.checked == 0 ? "-" : paint.Mark(t.failed == 0);
      out << "  " << std::string(11 - plain.size(), ' ') << shown;
    }
    out << "\n";
  }
  for (const std::string& f : report.failures) out << "failure: " << f << "\n";
  out << "all checks passed: " << paint.Verdict(passed) << "\n";
  return out.str();
}

int WriteOutput(const RunConfig& cfg, const std::string& text, std::ostream& out,
                std::ostream& err) {
  if (cfg.out_path.empty()) {
    out << text;
    out.flush();
    return kOk;
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  file << text;
  if (!file) {
    err << "error: cannot write " << cfg.out_path << "\n";
    return kOutputError;
  }
  return kOk;
}

int LinkErrorExit(const LinkSpecError& e) {
  switch (e.kind()) {
    case LinkSpecError::Kind::kDenominatorTooLarge: return kDenominatorTooLarge;
    case LinkSpecError::Kind::kNotCoprime: return kNotCoprime;
    case LinkSpecError::Kind::kNonPositiveEntry: return kNonPositiveEntry;
    case LinkSpecError::Kind::kSyntax:
    case LinkSpecError::Kind::kEmptyWord:
    case LinkSpecError::Kind::kOutOfRange: return kBadLinkSyntax;
  }
  return kBadLinkSyntax;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Dihedral quandle colorings and coloring quivers of 2-bridge links", "dihquiver"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_link_options = [&](CLI::App* cmd) {
    cmd->add_option("--link", cfg.link, "2-bridge link as N/M or a word such as \"[2 2]\"")
        ->required();
    cmd->add_option("--n", cfg.n, "order of the dihedral quandle")->required();
    cmd->add_option("--out", cfg.out_path, "write the report to PATH instead of stdout");
    cmd->add_option("--workers", cfg.workers, "OpenMP worker threads")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* colorings = app.add_subcommand("colorings", "count and decompose colorings");
  add_link_options(colorings);
  colorings->add_option("--format", cfg.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* quiver = app.add_subcommand("quiver", "build and compare the full coloring quiver");
  add_link_options(quiver);
  quiver->add_option("--format", cfg.format, "table, json or dot")
      ->check(CLI::IsMember({"table", "json", "dot"}));
  quiver->add_flag("--expand-edges", cfg.expand_edges, "emit parallel edges in DOT output");

  CLI::App* export_cmd = app.add_subcommand("export", "quiver as json (default) or dot");
  add_link_options(export_cmd);
  export_cmd->add_option("--format", cfg.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  export_cmd->add_flag("--expand-edges", cfg.expand_edges, "emit parallel edges in DOT output");

  CLI::App* verify = app.add_subcommand("verify", "sweep words and moduli against the closed forms");
  verify->add_option("--max-sum", cfg.max_sum, "largest entry sum of the swept words");
  verify->add_option("--max-n", cfg.max_n, "largest modulus");
  verify->add_option("--format", cfg.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--out", cfg.out_path, "write the report to PATH instead of stdout");
  verify->add_option("--workers", cfg.workers, "OpenMP worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (cfg.format.empty()) cfg.format = export_cmd->parsed() ? "json" : "table";
  const Painter paint(color && cfg.out_path.empty() && cfg.format == "table");

  try {
    kernels::SetWorkerCount(cfg.workers);
    bool ok = true;
    std::string text;
    if (colorings->parsed()) {
      text = ColoringsReport(cfg, paint, ok);
    } else if (quiver->parsed() || export_cmd->parsed()) {
      text = QuiverReport(cfg, paint, ok);
    } else {
      text = VerifyReport(cfg, paint, ok);
    }
    if (const int code = WriteOutput(cfg, text, out, err); code != kOk) return code;
    return ok ? kOk : kVerificationFailed;
  } catch (const LinkSpecError& e) {
    err << "error: " << e.what() << "\n";
    return LinkErrorExit(e);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kTooLarge;
  } catch (const NonUniformMultiplicityError& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace dihquiver::cli
