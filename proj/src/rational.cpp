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

#include "agc/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace agc {

namespace {

// sum_i p_i (ax + b)^i (cx + d)^{e - i}, i.e. p(A·x) (cx + d)^e.
Polynomial homogeneous_substitute(const Polynomial& p, const MobiusMap& m, int e) {
  const GaloisField& f = p.field();
  const Polynomial top(f, {m.b(), m.a()});
  const Polynomial bottom(f, {m.d(), m.c()});
  Polynomial acc(f);
  for (int i = 0; i <= p.degree(); ++i) {
    const Gf ci = p.coefficient(i);
    if (ci.is_zero()) continue;
    acc += ci * (top.pow(static_cast<unsigned>(i)) * bottom.pow(static_cast<unsigned>(e - i)));
  }
  return acc;
}

}  // namespace

RationalFunction::RationalFunction(const GaloisField& f)
    : num_(f), den_(Polynomial::constant(f.one())) {}

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(num_.field().one())) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (&num_.field() != &den_.field()) throw FieldError("rational function over mixed fields");
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.field().one());
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const Gf lead = den_.leading().inverse();
  num_ = lead * num_;
  den_ = lead * den_;
}

int RationalFunction::degree() const {
  if (num_.is_zero()) return 0;
  return std::max(num_.degree(), den_.degree());
}

RationalFunction RationalFunction::pow(int e) const {
  if (e >= 0) return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  if (is_zero()) throw std::domain_error("negative power of zero");
  return RationalFunction(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const Polynomial& p) {
    std::string s = p.to_string();
    return p.coefficients().size() > 1 && s.find(' ') != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(num_) + " / " + wrap(den_);
}

RationalFunction mobius_substitute(const RationalFunction& f, const MobiusMap& m) {
  if (&f.field() != &m.field()) throw FieldError("substitution over mixed fields");
  const int e = std::max(f.numerator().degree(), f.denominator().degree());
  if (e <= 0) return f;
  return RationalFunction(homogeneous_substitute(f.numerator(), m, e),
                          homogeneous_substitute(f.denominator(), m, e));
}

}  // namespace agc
