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

#ifndef AGC_RATIONAL_HPP
#define AGC_RATIONAL_HPP

#include <string>

#include "agc/pgl2.hpp"
#include "agc/poly.hpp"

namespace agc {

/// Element of F_q(x) in lowest terms with a monic denominator, so equality
/// is componentwise.
class RationalFunction {
 public:
  explicit RationalFunction(const GaloisField& f);  // zero
  explicit RationalFunction(Polynomial numerator);
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction constant(const Gf& c) { return RationalFunction(Polynomial::constant(c)); }
  static RationalFunction x(const GaloisField& f) { return RationalFunction(Polynomial::x(f)); }

  const GaloisField& field() const { return num_.field(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// max(deg num, deg den); 0 for constants (including zero).
  int degree() const;

  RationalFunction pow(int e) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// sigma(f) for the automorphism sigma(x) = (ax + b)/(cx + d) of A: substitutes
/// x -> A·x and reduces.
RationalFunction mobius_substitute(const RationalFunction& f, const MobiusMap& m);

}  // namespace agc

#endif  // AGC_RATIONAL_HPP
