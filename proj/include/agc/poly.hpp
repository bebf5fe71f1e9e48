// Copyright 2026 The agcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AGC_POLY_HPP
#define AGC_POLY_HPP

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "agc/gf.hpp"

namespace agc {

/// Univariate polynomial over GF(q), ascending coefficients, no trailing zeros.
class Polynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Polynomial(const GaloisField& f) : field_(&f) {}
  Polynomial(const GaloisField& f, std::vector<Gf> ascending);

  static Polynomial constant(const Gf& c);
  static Polynomial x(const GaloisField& f);
  /// x - a
  static Polynomial linear(const Gf& a);
  static Polynomial monomial(const Gf& c, unsigned degree);

  const GaloisField& field() const { return *field_; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  const std::vector<Gf>& coefficients() const { return coeffs_; }
  Gf coefficient(int i) const;
  Gf leading() const;
  Polynomial monic() const;

  Gf operator()(const Gf& x) const;
  Polynomial derivative() const;
  Polynomial pow(unsigned e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Gf& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  /// Degree first, then coefficient codes from the top; a total order for map keys.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  std::string to_string(char var = 'x') const;

 private:
  void normalize();

  const GaloisField* field_;
  std::vector<Gf> coeffs_;
};

/// (quotient, remainder); throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Trial division: no roots and no monic divisor of degree 2..deg/2.
bool is_irreducible(const Polynomial& f);
/// Rabin's test: x^{q^d} = x mod f and gcd(x^{q^{d/r}} - x, f) = 1 for primes r | d.
bool rabin_irreducible(const Polynomial& f);
/// Roots in GF(q) by exhaustive evaluation, ascending code order.
std::vector<Gf> roots_in_fq(const Polynomial& f);

struct Factor {
  Polynomial factor;  // monic irreducible
  int multiplicity;
};

/// Complete factorization of a nonzero polynomial into monic irreducibles,
/// sorted by (degree, coefficients). Square-free decomposition followed by
/// Berlekamp splitting; deterministic.
std::vector<Factor> factor(const Polynomial& f);

/// Monic polynomials of degree d, in code order of (a_{d-1}, ..., a_0).
std::vector<Polynomial> monic_polynomials(const GaloisField& f, unsigned d);

}  // namespace agc

#endif  // AGC_POLY_HPP
