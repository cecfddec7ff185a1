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

#ifndef DIHQUIVER_TANGLE_H_
#define DIHQUIVER_TANGLE_H_

// 2-bridge links given as rational-tangle words [p1 ... pN] or as fractions
// N/M, and the strand/relation presentation of their fundamental quandle.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dihquiver/arith.h"

namespace dihquiver {

// Raised for malformed link input. The kind lets front ends map each failure
// to its own exit status.
class LinkSpecError : public std::invalid_argument {
 public:
  enum class Kind {
    kSyntax,             // not a word or a fraction
    kEmptyWord,
    kNonPositiveEntry,   // zero or negative word entry
    kDenominatorTooLarge,  // M > N
    kNotCoprime,
    kOutOfRange,         // value does not fit the word entry type
  };

  LinkSpecError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A rational tangle word with all entries strictly positive.
class TangleWord {
 public:
  // Throws LinkSpecError for an empty word or a non-positive entry.
  explicit TangleWord(std::vector<std::int64_t> entries);

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t EntrySum() const;

  // "[p1 p2 ... pN]"
  std::string ToString() const;

  friend bool operator==(const TangleWord&, const TangleWord&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const TangleWord& w) {
  return os << w.ToString();
}

// N/M with gcd(N, M) = 1 and 0 < M <= N.
class Fraction {
 public:
  // Throws LinkSpecError on M > N, gcd != 1 or non-positive parts.
  Fraction(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const { return numerator_; }
  const BigInt& denominator() const { return denominator_; }
  std::string ToString() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  BigInt numerator_;
  BigInt denominator_;
};

// Delta_0 .. Delta_N; values.back() is the link determinant.
struct DeterminantSequence {
  std::vector<BigInt> values;

  const BigInt& determinant() const { return values.back(); }
};

// Generator x_{tangle, strand}, both 1-based.
struct Generator {
  int tangle = 0;
  int strand = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

// result = left |> right. Dihedral targets are involutory, so the sign of
// the crossing is dropped.
struct TwistRelation {
  Generator result;
  Generator left;
  Generator right;
};

struct EqualityRelation {
  Generator lhs;
  Generator rhs;
};

struct StrandPresentation {
  // p_j + 2 for every tangle j.
  std::vector<int> strand_counts;
  std::vector<TwistRelation> twists;
  std::vector<EqualityRelation> gluings;
  std::vector<EqualityRelation> closures;

  std::size_t generator_count() const;
  std::vector<Generator> generators() const;
  // Position of g in generators(), tangle-major.
  std::size_t FlatIndex(Generator g) const;
  std::size_t relation_count() const {
    return twists.size() + gluings.size() + closures.size();
  }
};

// Continued fraction p_N + 1/(... + 1/(p_2 + 1/p_1)) in lowest terms.
Fraction WordToFraction(const TangleWord& word);

// Euclidean expansion N/M = a_1 + 1/(a_2 + ...), emitted as [a_k ... a_1].
TangleWord FractionToWord(const Fraction& fraction);

DeterminantSequence ComputeDeterminantSequence(const TangleWord& word);
BigInt Determinant(const TangleWord& word);

// Twist, gluing and closure relations of the tangle-closure diagram. For
// N = 1 the second closure relation refers to a virtual x_{0, p_0 + 1}, which
// is identified with x_{1,2}.
StrandPresentation BuildStrandPresentation(const TangleWord& word);

// Every word whose entries sum to at most max_sum, i.e. all compositions of
// 1..max_sum, ordered by sum and then lexicographically.
std::vector<TangleWord> EnumerateWords(int max_sum);

// Parses "[2 2]", "[2,2]" or "5/2". Throws LinkSpecError.
TangleWord ParseLinkSpec(std::string_view text);

}  // namespace dihquiver

#endif  // DIHQUIVER_TANGLE_H_
