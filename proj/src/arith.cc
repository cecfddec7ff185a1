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

#include "dihquiver/arith.h"

#include <numeric>
#include <stdexcept>
#include <string>

namespace dihquiver {

std::int64_t Factorization::Value() const {
  std::int64_t value = 1;
  for (const PrimePower& pp : factors) value *= IntPow(pp.prime, pp.exponent);
  return value;
}

std::int64_t Gcd(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::domain_error("Gcd: negative argument");
  return std::gcd(a, b);
}

int PAdicValuation(std::int64_t p, std::int64_t m) {
  if (p < 2) throw std::domain_error("PAdicValuation: p must be prime");
  if (m == 0) throw std::domain_error("PAdicValuation: valuation of 0 is infinite");
  if (m < 0) m = -m;
  int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

int PAdicValuation(std::int64_t p, const BigInt& m) {
  if (p < 2) throw std::domain_error("PAdicValuation: p must be prime");
  if (m == 0) throw std::domain_error("PAdicValuation: valuation of 0 is infinite");
  BigInt rest = m < 0 ? BigInt(-m) : m;
  int k = 0;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  return k;
}

Factorization Factorize(std::int64_t n) {
  if (n < 1) throw std::domain_error("Factorize: n must be positive, got " + std::to_string(n));
  Factorization result;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }
  if (n > 1) result.factors.push_back({n, 1});
  return result;
}

std::int64_t EulerTotient(std::int64_t n) {
  std::int64_t phi = 1;
  for (const PrimePower& pp : Factorize(n).factors) {
    phi *= IntPow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
  }
  return phi;
}

std::int64_t ReduceMod(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::int64_t ReduceMod(const BigInt& x, std::int64_t n) {
  BigInt r = x % n;
  if (r < 0) r += n;
  return r.convert_to<std::int64_t>();
}

std::int64_t ModInverse(std::int64_t a, std::int64_t n) {
  a = ReduceMod(a, n);
  if (n == 1) return 0;
  // Extended Euclid on (a, n).
  std::int64_t r0 = n, r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) {
    throw std::domain_error("ModInverse: " + std::to_string(a) +
                            " is not a unit mod " + std::to_string(n));
  }
  return ReduceMod(t0, n);
}

std::vector<std::int64_t> SolveLinearCongruence(std::int64_t a,
                                                std::int64_t b,
                                                std::int64_t n) {
  a = ReduceMod(a, n);
  b = ReduceMod(b, n);
  const std::int64_t g = Gcd(a, n);
  if (b % g != 0) return {};
  const std::int64_t step = n / g;
  const std::int64_t x0 =
      step == 1 ? 0 : ReduceMod(ModInverse(a / g, step) * (b / g), step);
  std::vector<std::int64_t> solutions;
  solutions.reserve(g);
  for (std::int64_t k = 0; k < g; ++k) solutions.push_back(x0 + k * step);
  return solutions;
}

std::int64_t IntPow(std::int64_t base, int exponent) {
  std::int64_t result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::int64_t DivisorOf(const Factorization& factorization,
                       const MultiIndex& index) {
  if (index.size() != factorization.size()) {
    throw std::invalid_argument("DivisorOf: multi-index length mismatch");
  }
  std::int64_t d = 1;
  for (std::size_t i = 0; i < index.size(); ++i) {
    d *= IntPow(factorization.factors[i].prime, index[i]);
  }
  return d;
}

MultiIndex MultiIndexOf(const Factorization& factorization, std::int64_t d) {
  if (d < 1 || factorization.Value() % d != 0) {
    throw std::invalid_argument("MultiIndexOf: " + std::to_string(d) +
                                " does not divide " +
                                std::to_string(factorization.Value()));
  }
  MultiIndex index;
  index.reserve(factorization.size());
  for (const PrimePower& pp : factorization.factors) {
    index.push_back(PAdicValuation(pp.prime, d));
  }
  return index;
}

bool Precedes(const MultiIndex& j, const MultiIndex& k) {
  if (j.size() != k.size()) return false;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i] > k[i]) return false;
  }
  return true;
}

}  // namespace dihquiver
