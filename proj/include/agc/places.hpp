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

// Places and divisors of F_q(x), and Riemann-Roch spaces L(G).
//
// Text forms: a rational place is `a=<elem>` or `inf`; a place of degree >= 2
// is `poly:c0,c1,...,1` (ascending coefficients of its monic irreducible).
// Divisors are sums of `<int>*<place>` separated by ` + `.

#ifndef AGC_PLACES_HPP
#define AGC_PLACES_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "agc/rational.hpp"

namespace agc {

class Place {
 public:
  static Place rational(const ProjPoint& t) { return Place(t); }
  static Place infinity() { return Place(ProjPoint::infinity()); }
  /// Place of a monic-normalized irreducible; degree-1 input yields the
  /// rational place at its root.
  static Place irreducible(const Polynomial& f);

  bool is_rational() const { return std::holds_alternative<ProjPoint>(v_); }
  bool is_infinity() const { return is_rational() && point().is_infinity(); }
  /// Throws std::logic_error on a place of degree >= 2.
  const ProjPoint& point() const;
  /// Throws std::logic_error on a rational place.
  const Polynomial& polynomial() const;
  int degree() const;
  /// Monic irreducible vanishing at a finite place (x - a for rational ones).
  Polynomial local_polynomial(const GaloisField& f) const;

  friend bool operator==(const Place& a, const Place& b);
  friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
  /// Rational places first (projective_line order), then by polynomial.
  friend bool operator<(const Place& a, const Place& b);

 private:
  explicit Place(ProjPoint t) : v_(std::move(t)) {}
  explicit Place(Polynomial f) : v_(std::move(f)) {}
  std::variant<ProjPoint, Polynomial> v_;
};

std::string to_string(const Place& p);
Place parse_place(const GaloisField& f, std::string_view text);

class Divisor {
 public:
  Divisor() = default;

  /// Adds c·P; zero coefficients are dropped.
  Divisor& add(const Place& p, int c);
  int coefficient(const Place& p) const;
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  std::vector<Place> support() const;
  const std::map<Place, int>& terms() const { return terms_; }

  friend Divisor operator+(Divisor a, const Divisor& b);
  friend Divisor operator-(Divisor a, const Divisor& b);
  friend Divisor operator*(int c, Divisor a);
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

 private:
  std::map<Place, int> terms_;
};

inline Divisor divisor(const Place& p, int c = 1) { return Divisor().add(p, c); }
std::string to_string(const Divisor& g);
Divisor parse_divisor(const GaloisField& f, std::string_view text);

/// Raised when a function is evaluated at one of its poles.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Image of a place under the automorphism of A: P_t goes to P_{A^{-1} t};
/// a place of degree >= 2 given by q(x) goes to the place of the numerator of q(A·x).
Place place_image(const MobiusMap& m, const Place& p);
Divisor divisor_image(const MobiusMap& m, const Divisor& g);

/// z(P) at a rational place; throws PoleError at a pole.
Gf evaluate_at_place(const RationalFunction& z, const Place& p);
/// z(t) on P^1 with poles sent to infinity.
ProjPoint evaluate_projective(const RationalFunction& z, const ProjPoint& t);
/// v_P(z); throws std::domain_error for z = 0.
int valuation(const RationalFunction& z, const Place& p);
/// Principal divisor (z); throws std::domain_error for z = 0.
Divisor principal_divisor(const RationalFunction& z);
/// z = 0 or (z) + G >= 0.
bool in_riemann_roch_space(const RationalFunction& z, const Divisor& g);

/// Basis of L(G): with N = prod q_P^{G(P)} over finite places with G(P) > 0 and
/// H = prod q_P^{-G(P)} over G(P) < 0, the functions H x^t / N for
/// t = 0..deg G. Empty when deg G < 0.
std::vector<RationalFunction> rr_basis(const GaloisField& f, const Divisor& g);
/// (1, 1/(x - beta), ..., 1/(x - beta)^r), a basis of L(r P_beta) for finite beta.
std::vector<RationalFunction> rr_basis_pole_powers(const Gf& beta, int r);

}  // namespace agc

#endif  // AGC_PLACES_HPP
