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

#include "dihquiver/tangle.h"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace dihquiver {
namespace {

using Kind = LinkSpecError::Kind;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Signed decimal integer; the whole token must be consumed.
BigInt ParseInteger(std::string_view token, std::string_view context) {
  token = Trim(token);
  std::string_view digits = token;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw LinkSpecError(Kind::kSyntax, "invalid integer '" + std::string(token) +
                                           "' in " + std::string(context));
  }
  BigInt value{std::string(digits)};
  return token.front() == '-' ? BigInt(-value) : value;
}

std::int64_t ToEntry(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw LinkSpecError(Kind::kOutOfRange,
                        "word entry " + value.str() + " is out of range");
  }
  return value.convert_to<std::int64_t>();
}

TangleWord ParseWord(std::string_view text) {
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<std::int64_t> entries;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      entries.push_back(ToEntry(ParseInteger(token, text)));
      token.clear();
    }
  };
  for (char c : body) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return TangleWord(std::move(entries));
}

}  // namespace

TangleWord::TangleWord(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw LinkSpecError(Kind::kEmptyWord, "tangle word must have at least one entry");
  }
  const bool any_negative = std::any_of(entries_.begin(), entries_.end(),
                                        [](std::int64_t p) { return p < 0; });
  const bool any_zero = std::any_of(entries_.begin(), entries_.end(),
                                    [](std::int64_t p) { return p == 0; });
  if (any_zero) {
    throw LinkSpecError(Kind::kNonPositiveEntry,
                        "tangle word entries must be positive, got " + ToString());
  }
  if (any_negative) {
    throw LinkSpecError(
        Kind::kNonPositiveEntry,
        "tangle word entries must be positive, got " + ToString() +
            "; the mirror image has the same colorings and quiver, so negate "
            "all entries");
  }
}

std::int64_t TangleWord::EntrySum() const {
  std::int64_t sum = 0;
  for (std::int64_t p : entries_) sum += p;
  return sum;
}

std::string TangleWord::ToString() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out << ' ';
    out << entries_[i];
  }
  out << ']';
  return out.str();
}

Fraction::Fraction(BigInt numerator, BigInt denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (numerator_ <= 0 || denominator_ <= 0) {
    throw LinkSpecError(Kind::kNonPositiveEntry,
                        "fraction " + ToString() + " must have positive parts");
  }
  if (denominator_ > numerator_) {
    throw LinkSpecError(Kind::kDenominatorTooLarge,
                        "fraction " + ToString() +
                            " has denominator larger than numerator (need M <= N)");
  }
  if (boost::multiprecision::gcd(numerator_, denominator_) != 1) {
    throw LinkSpecError(Kind::kNotCoprime,
                        "fraction " + ToString() + " is not in lowest terms");
  }
}

std::string Fraction::ToString() const {
  return numerator_.str() + "/" + denominator_.str();
}

std::size_t StrandPresentation::generator_count() const {
  std::size_t count = 0;
  for (int c : strand_counts) count += static_cast<std::size_t>(c);
  return count;
}

std::vector<Generator> StrandPresentation::generators() const {
  std::vector<Generator> result;
  result.reserve(generator_count());
  for (std::size_t j = 0; j < strand_counts.size(); ++j) {
    for (int i = 1; i <= strand_counts[j]; ++i) {
      result.push_back({static_cast<int>(j) + 1, i});
    }
  }
  return result;
}

std::size_t StrandPresentation::FlatIndex(Generator g) const {
  if (g.tangle < 1 || g.tangle > static_cast<int>(strand_counts.size()) ||
      g.strand < 1 || g.strand > strand_counts[g.tangle - 1]) {
    throw std::out_of_range("generator x_{" + std::to_string(g.tangle) + "," +
                            std::to_string(g.strand) + "} does not exist");
  }
  std::size_t offset = 0;
  for (int j = 1; j < g.tangle; ++j) offset += strand_counts[j - 1];
  return offset + static_cast<std::size_t>(g.strand - 1);
}

DeterminantSequence ComputeDeterminantSequence(const TangleWord& word) {
  DeterminantSequence seq;
  seq.values.reserve(word.length() + 1);
  seq.values.emplace_back(1);
  seq.values.emplace_back(word[0]);
  for (std::size_t j = 1; j < word.length(); ++j) {
    const std::size_t last = seq.values.size() - 1;
    seq.values.push_back(BigInt(word[j]) * seq.values[last] + seq.values[last - 1]);
  }
  return seq;
}

BigInt Determinant(const TangleWord& word) {
  return ComputeDeterminantSequence(word).determinant();
}

Fraction WordToFraction(const TangleWord& word) {
  // Evaluate from the innermost term p_1 outwards: value_j = p_j + 1/value_{j-1}.
  BigInt num = word[0];
  BigInt den = 1;
  for (std::size_t j = 1; j < word.length(); ++j) {
    BigInt next_num = BigInt(word[j]) * num + den;
    den = num;
    num = std::move(next_num);
  }
  return Fraction(std::move(num), std::move(den));
}

TangleWord FractionToWord(const Fraction& fraction) {
  std::vector<std::int64_t> quotients;
  BigInt num = fraction.numerator();
  BigInt den = fraction.denominator();
  while (den != 0) {
    quotients.push_back(ToEntry(num / den));
    BigInt rem = num % den;
    num = std::move(den);
    den = std::move(rem);
  }
  std::reverse(quotients.begin(), quotients.end());
  return TangleWord(std::move(quotients));
}

StrandPresentation BuildStrandPresentation(const TangleWord& word) {
  const int n_tangles = static_cast<int>(word.length());
  // Strand indices are ints; words this long are far outside anything the
  // brute-force kernels could enumerate anyway.
  if (word.EntrySum() > std::numeric_limits<int>::max() / 4) {
    throw std::length_error("tangle word " + word.ToString() +
                            " is too long to materialize");
  }
  auto p = [&](int j) { return static_cast<int>(word[j - 1]); };

  StrandPresentation pres;
  for (int j = 1; j <= n_tangles; ++j) pres.strand_counts.push_back(p(j) + 2);

  for (int j = 1; j <= n_tangles; ++j) {
    for (int i = 3; i <= p(j) + 2; ++i) {
      pres.twists.push_back({{j, i}, {j, i - 2}, {j, i - 1}});
    }
  }

  if (n_tangles >= 2) {
    pres.gluings.push_back({{2, 1}, {1, 2}});
    pres.gluings.push_back({{2, 2}, {1, p(1) + 2}});
  }
  for (int j = 3; j <= n_tangles; ++j) {
    pres.gluings.push_back({{j, 1}, {j - 2, p(j - 2) + 1}});
    pres.gluings.push_back({{j, 2}, {j - 1, p(j - 1) + 2}});
  }

  const int last = n_tangles;
  pres.closures.push_back({{last, p(last) + 1}, {1, 1}});
  if (n_tangles >= 2) {
    pres.closures.push_back({{last, p(last) + 2}, {last - 1, p(last - 1) + 1}});
  } else {
    pres.closures.push_back({{1, p(1) + 2}, {1, 2}});
  }
  return pres;
}

std::vector<TangleWord> EnumerateWords(int max_sum) {
  std::vector<TangleWord> words;
  std::vector<std::int64_t> prefix;
  // Compositions of `remaining`, appended to prefix.
  auto extend = [&](auto&& self, std::int64_t remaining) -> void {
    if (remaining == 0) {
      words.emplace_back(prefix);
      return;
    }
    for (std::int64_t p = 1; p <= remaining; ++p) {
      prefix.push_back(p);
      self(self, remaining - p);
      prefix.pop_back();
    }
  };
  for (int s = 1; s <= max_sum; ++s) extend(extend, s);
  return words;
}

TangleWord ParseLinkSpec(std::string_view text) {
  const std::string_view spec = Trim(text);
  if (spec.empty()) {
    throw LinkSpecError(Kind::kSyntax, "empty link specification");
  }
  if (spec.front() == '[') {
    if (spec.back() != ']') {
      throw LinkSpecError(Kind::kSyntax,
                          "unterminated word '" + std::string(spec) + "'");
    }
    return ParseWord(spec);
  }
  const std::size_t slash = spec.find('/');
  if (slash == std::string_view::npos) {
    throw LinkSpecError(Kind::kSyntax,
                        "link '" + std::string(spec) +
                            "' is neither a word like [2 2] nor a fraction like 5/2");
  }
  BigInt num = ParseInteger(spec.substr(0, slash), spec);
  BigInt den = ParseInteger(spec.substr(slash + 1), spec);
  return FractionToWord(Fraction(std::move(num), std::move(den)));
}

}  // namespace dihquiver
