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

#include "dihquiver/verify.h"

#include <algorithm>
#include <stdexcept>

#include "dihquiver/homset.h"
#include "dihquiver/quiver.h"

namespace dihquiver {
namespace {

constexpr std::size_t kMaxRecordedFailures = 50;

class Recorder {
 public:
  Recorder(VerificationRow& row, std::vector<std::string>& failures)
      : row_(row), failures_(failures) {}

  void Record(Check c, bool ok, const std::string& context) {
    CheckTally& t = row_.tallies[static_cast<std::size_t>(c)];
    ++t.checked;
    if (ok) return;
    ++t.failed;
    if (failures_.size() < kMaxRecordedFailures) {
      failures_.push_back(std::string(CheckName(c)) + ": " + context);
    }
  }

 private:
  VerificationRow& row_;
  std::vector<std::string>& failures_;
};

bool IsPrimePower(const Factorization& f) { return f.size() == 1; }

void VerifyWord(const TangleWord& word, int n, Recorder& rec) {
  const std::string ctx = word.ToString() + " over Z_" + std::to_string(n);
  const DeterminantSequence seq = ComputeDeterminantSequence(word);
  const BigInt& delta = seq.determinant();

  const std::vector<Coloring> homset = EnumerateColoringsBruteforce(word, n);
  rec.Record(Check::kCount, homset.size() == ColoringCountClosedForm(delta, n), ctx);

  std::vector<std::pair<int, int>> expected_seeds;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (ReduceMod(delta * (b - a), n) == 0) expected_seeds.emplace_back(a, b);
    }
  }
  std::vector<std::pair<int, int>> seeds;
  for (const Coloring& c : homset) seeds.emplace_back(c.a, c.b);
  rec.Record(Check::kSeeds, seeds == expected_seeds, ctx);

  bool claim = true;
  for (const Coloring& c : homset) {
    for (std::size_t j = 1; j <= word.length(); ++j) {
      const BigInt& dj = seq.values[j];
      const std::int64_t want = ReduceMod(dj * c.b - (dj - 1) * c.a, n);
      claim = claim && c.strand(static_cast<int>(j), static_cast<int>(word[j - 1]) + 1) == want;
    }
  }
  rec.Record(Check::kClaim, claim, ctx);

  const OrbitDecomposition decomp = DecomposeOrbits(homset, n);
  std::vector<std::uint64_t> got_sizes, want_sizes;
  for (const Orbit& o : decomp.orbits) got_sizes.push_back(o.size());
  for (const auto& [j, size] : OrbitSizesClosedForm(delta, n)) want_sizes.push_back(size);
  std::sort(got_sizes.begin(), got_sizes.end());
  std::sort(want_sizes.begin(), want_sizes.end());
  rec.Record(Check::kOrbits, got_sizes == want_sizes, ctx);

  if (homset.size() > kMaxDenseVertices) return;
  const Quiver quiver = BuildFullQuiverBruteforce(word, n);
  bool edges = true;
  for (const Coloring& from : homset) {
    if (from.a != 0) continue;
    for (const Coloring& to : homset) {
      if (to.a != 0) continue;
      const auto mult = quiver.Multiplicity(quiver.IndexOf(0, from.b), quiver.IndexOf(0, to.b));
      edges = edges && mult == CountEdgesClosedForm(from.b, to.b, n);
    }
  }
  rec.Record(Check::kEdges, edges, ctx);

  bool cert_ok = false;
  std::string cert_ctx = ctx;
  try {
    cert_ok = Certify(quiver, decomp) == CertifyClosedForm(BuildQuiverClosedForm(delta, n));
  } catch (const NonUniformMultiplicityError& e) {
    cert_ctx += " (" + std::string(e.what()) + ")";
  }
  rec.Record(Check::kCertificate, cert_ok, cert_ctx);
}

}  // namespace

std::string_view CheckName(Check check) {
  switch (check) {
    case Check::kCount: return "count";
    case Check::kSeeds: return "seeds";
    case Check::kClaim: return "claim";
    case Check::kOrbits: return "orbits";
    case Check::kEdges: return "edges";
    case Check::kCertificate: return "certificate";
    case Check::kPrimePower: return "prime-power";
    case Check::kAffine: return "affine";
  }
  return "?";
}

bool VerificationReport::all_passed() const {
  for (const VerificationRow& row : rows) {
    for (const CheckTally& t : row.tallies) {
      if (t.failed != 0) return false;
    }
  }
  return true;
}

VerificationReport RunVerification(int max_sum, int max_n) {
  if (max_sum < 1) throw std::invalid_argument("--max-sum must be >= 1");
  if (max_n < 1) throw std::invalid_argument("--max-n must be >= 1");
  VerificationReport report;
  report.max_sum = max_sum;
  report.max_n = max_n;
  const std::vector<TangleWord> words = EnumerateWords(max_sum);

  for (int n = 1; n <= max_n; ++n) {
    VerificationRow row;
    row.n = n;
    row.words = words.size();
    Recorder rec(row, report.failures);
    for (const TangleWord& word : words) VerifyWord(word, n, rec);

    const Factorization f = Factorize(n);
    if (IsPrimePower(f)) {
      // Determinants of the swept words, plus every exponent pattern up to n.
      for (int det = 1; det <= std::max(n, max_sum); ++det) {
        const QuiverCertificate iterated =
            CertifyBlocks(BuildPrimePowerQuiver(det, f.factors[0].prime, f.factors[0].exponent));
        const QuiverCertificate grid = CertifyClosedForm(BuildQuiverClosedForm(det, n));
        rec.Record(Check::kPrimePower, iterated == grid,
                   "determinant " + std::to_string(det) + " over Z_" + std::to_string(n));
      }
    }
    if (n <= kMaxExhaustiveOrder) {
      rec.Record(Check::kAffine, VerifyAffineCompleteness(DihedralQuandle(n)),
                 "Z_" + std::to_string(n));
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace dihquiver
