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

#ifndef DIHQUIVER_ARITH_H_
#define DIHQUIVER_ARITH_H_

// Integer and modular arithmetic shared by every other module.
//
// Residues are plain machine integers, always kept reduced to {0, ..., n-1}.
// Link determinants can grow without bound (they are continuants of the
// tangle word), so they are carried as arbitrary-precision BigInt values and
// only ever enter modular code through ReduceMod().

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dihquiver {

using BigInt = boost::multiprecision::cpp_int;

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical prime factorization: primes strictly increasing, exponents >= 1.
// The factorization of 1 is empty.
struct Factorization {
  std::vector<PrimePower> factors;

  std::int64_t Value() const;
  std::size_t size() const { return factors.size(); }
  bool empty() const { return factors.empty(); }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Per-prime exponent vector, aligned with the factors of some Factorization.
using MultiIndex = std::vector<int>;

// gcd(0, n) = n, so the trivial colorings (b - a = 0) get label n.
std::int64_t Gcd(std::int64_t a, std::int64_t b);

// Largest k with p^k | m. Throws std::domain_error for m == 0.
int PAdicValuation(std::int64_t p, std::int64_t m);
int PAdicValuation(std::int64_t p, const BigInt& m);

// Trial division. Throws std::domain_error for n < 1.
Factorization Factorize(std::int64_t n);

std::int64_t EulerTotient(std::int64_t n);

// x mod n in {0, ..., n-1}, for any sign of x.
std::int64_t ReduceMod(std::int64_t x, std::int64_t n);
std::int64_t ReduceMod(const BigInt& x, std::int64_t n);

// Inverse of a unit modulo n. Throws std::domain_error if gcd(a, n) != 1.
std::int64_t ModInverse(std::int64_t a, std::int64_t n);

// All x in {0, ..., n-1} with a*x = b (mod n), ascending. There are
// gcd(a, n) of them when gcd(a, n) | b and none otherwise.
std::vector<std::int64_t> SolveLinearCongruence(std::int64_t a,
                                                std::int64_t b,
                                                std::int64_t n);

std::int64_t IntPow(std::int64_t base, int exponent);

// prod_i p_i^{j_i}.
std::int64_t DivisorOf(const Factorization& factorization,
                       const MultiIndex& index);

// Inverse of DivisorOf for a divisor d of the factored integer.
MultiIndex MultiIndexOf(const Factorization& factorization, std::int64_t d);

// Componentwise j <= k.
bool Precedes(const MultiIndex& j, const MultiIndex& k);

}  // namespace dihquiver

#endif  // DIHQUIVER_ARITH_H_
