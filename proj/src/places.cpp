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

#include "agc/places.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace agc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int multiplicity(Polynomial f, const Polynomial& pi) {
  int m = 0;
  while (!f.is_zero()) {
    auto [quo, rem] = divmod(f, pi);
    if (!rem.is_zero()) break;
    f = std::move(quo);
    ++m;
  }
  return m;
}

}  // namespace

Place Place::irreducible(const Polynomial& f) {
  if (f.degree() < 1) throw std::invalid_argument("place polynomial must have positive degree");
  const Polynomial g = f.monic();
  if (g.degree() == 1) return Place(ProjPoint(-g.coefficient(0)));
  if (!rabin_irreducible(g)) throw std::invalid_argument("place polynomial " + g.to_string() + " is reducible");
  return Place(g);
}

const ProjPoint& Place::point() const {
  if (!is_rational()) throw std::logic_error("place of degree >= 2 has no point");
  return std::get<ProjPoint>(v_);
}

const Polynomial& Place::polynomial() const {
  if (is_rational()) throw std::logic_error("rational place has no defining polynomial of degree >= 2");
  return std::get<Polynomial>(v_);
}

int Place::degree() const { return is_rational() ? 1 : polynomial().degree(); }

Polynomial Place::local_polynomial(const GaloisField& f) const {
  if (!is_rational()) return polynomial();
  if (point().is_infinity()) throw std::logic_error("the infinite place has no local polynomial");
  return Polynomial::linear(point().value().in(f));
}

bool operator==(const Place& a, const Place& b) { return a.v_ == b.v_; }

bool operator<(const Place& a, const Place& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational();
  if (a.is_rational()) return a.point() < b.point();
  return a.polynomial() < b.polynomial();
}

std::string to_string(const Place& p) {
  if (p.is_infinity()) return "inf";
  if (p.is_rational()) return "a=" + to_string(p.point());
  const GaloisField& f = p.polynomial().field();
  std::string out = "poly:";
  bool first = true;
  for (const Gf& c : p.polynomial().coefficients()) {
    if (!first) out += ',';
    out += f.format(c);
    first = false;
  }
  return out;
}

Place parse_place(const GaloisField& f, std::string_view text) {
  std::string_view s = trim(text);
  if (s == "inf") return Place::infinity();
  if (s.substr(0, 2) == "a=") return Place::rational(parse_point(f, s.substr(2)));
  if (s.substr(0, 5) == "poly:") {
    std::vector<Gf> coeffs;
    std::string_view rest = s.substr(5);
    while (true) {
      const std::size_t comma = rest.find(',');
      coeffs.push_back(f.parse(trim(rest.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return Place::irreducible(Polynomial(f, std::move(coeffs)));
  }
  throw std::invalid_argument("cannot parse place '" + std::string(s) + "' (expected a=<elem>, inf or poly:...)");
}

Divisor& Divisor::add(const Place& p, int c) {
  const int v = (terms_[p] += c);
  if (v == 0) terms_.erase(p);
  return *this;
}

int Divisor::coefficient(const Place& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

int Divisor::degree() const {
  int d = 0;
  for (const auto& [p, c] : terms_) d += c * p.degree();
  return d;
}

std::vector<Place> Divisor::support() const {
  std::vector<Place> out;
  for (const auto& [p, c] : terms_) out.push_back(p);
  return out;
}

Divisor operator+(Divisor a, const Divisor& b) {
  for (const auto& [p, c] : b.terms_) a.add(p, c);
  return a;
}

Divisor operator-(Divisor a, const Divisor& b) {
  for (const auto& [p, c] : b.terms_) a.add(p, -c);
  return a;
}

Divisor operator*(int c, Divisor a) {
  if (c == 0) return Divisor();
  for (auto& [p, v] : a.terms_) v *= c;
  return a;
}

std::string to_string(const Divisor& g) {
  if (g.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : g.terms()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*" + to_string(p);
  }
  return out;
}

Divisor parse_divisor(const GaloisField& f, std::string_view text) {
  Divisor g;
  std::string_view rest = trim(text);
  if (rest == "0" || rest.empty()) return g;
  // Terms are separated by a '+' with whitespace on both sides; element
  // syntax never contains one.
  while (!rest.empty()) {
    std::size_t cut = std::string_view::npos;
    for (std::size_t i = 1; i + 1 < rest.size(); ++i) {
      if (rest[i] == '+' && std::isspace(static_cast<unsigned char>(rest[i - 1])) &&
          std::isspace(static_cast<unsigned char>(rest[i + 1]))) {
        cut = i;
        break;
      }
    }
    const std::string_view term = trim(rest.substr(0, cut));
    rest = cut == std::string_view::npos ? std::string_view() : trim(rest.substr(cut + 1));
    int c = 1;
    std::string_view place = term;
    if (const std::size_t star = term.find('*'); star != std::string_view::npos) {
      const std::string coeff(trim(term.substr(0, star)));
      std::size_t used = 0;
      try {
        c = std::stoi(coeff, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != coeff.size()) throw std::invalid_argument("bad divisor coefficient '" + coeff + "'");
      place = term.substr(star + 1);
    }
    g.add(parse_place(f, place), c);
  }
  return g;
}

Place place_image(const MobiusMap& m, const Place& p) {
  if (p.is_rational()) return Place::rational(m.apply_inverse(p.point()));
  const RationalFunction image = mobius_substitute(RationalFunction(p.polynomial()), m);
  return Place::irreducible(image.numerator());
}

Divisor divisor_image(const MobiusMap& m, const Divisor& g) {
  Divisor out;
  for (const auto& [p, c] : g.terms()) out.add(place_image(m, p), c);
  return out;
}

Gf evaluate_at_place(const RationalFunction& z, const Place& p) {
  if (!p.is_rational()) throw std::invalid_argument("evaluation needs a rational place");
  const GaloisField& f = z.field();
  if (p.is_infinity()) {
    const int dn = z.numerator().degree(), dd = z.denominator().degree();
    if (z.is_zero() || dn < dd) return f.zero();
    if (dn > dd) throw PoleError("function has a pole at infinity");
    return z.numerator().leading() / z.denominator().leading();
  }
  const Gf t = p.point().value().in(f);
  const Gf den = z.denominator()(t);
  if (den.is_zero()) throw PoleError("function has a pole at " + to_string(p));
  return z.numerator()(t) / den;
}

ProjPoint evaluate_projective(const RationalFunction& z, const ProjPoint& t) {
  try {
    return ProjPoint(evaluate_at_place(z, Place::rational(t)));
  } catch (const PoleError&) {
    return ProjPoint::infinity();
  }
}

int valuation(const RationalFunction& z, const Place& p) {
  if (z.is_zero()) throw std::domain_error("valuation of zero");
  if (p.is_infinity()) return z.denominator().degree() - z.numerator().degree();
  const Polynomial pi = p.local_polynomial(z.field());
  return multiplicity(z.numerator(), pi) - multiplicity(z.denominator(), pi);
}

Divisor principal_divisor(const RationalFunction& z) {
  if (z.is_zero()) throw std::domain_error("principal divisor of zero");
  Divisor out;
  for (const Factor& fa : factor(z.numerator())) out.add(Place::irreducible(fa.factor), fa.multiplicity);
  for (const Factor& fa : factor(z.denominator())) out.add(Place::irreducible(fa.factor), -fa.multiplicity);
  out.add(Place::infinity(), z.denominator().degree() - z.numerator().degree());
  return out;
}

bool in_riemann_roch_space(const RationalFunction& z, const Divisor& g) {
  if (z.is_zero()) return true;
  const Divisor d = principal_divisor(z) + g;
  return std::all_of(d.terms().begin(), d.terms().end(), [](const auto& t) { return t.second >= 0; });
}

std::vector<RationalFunction> rr_basis(const GaloisField& f, const Divisor& g) {
  const int deg = g.degree();
  if (deg < 0) return {};
  Polynomial num = Polynomial::constant(f.one());
  Polynomial den = Polynomial::constant(f.one());
  for (const auto& [p, c] : g.terms()) {
    if (p.is_infinity()) continue;
    const Polynomial pi = p.local_polynomial(f);
    if (c > 0) den *= pi.pow(static_cast<unsigned>(c));
    if (c < 0) num *= pi.pow(static_cast<unsigned>(-c));
  }
  std::vector<RationalFunction> out;
  out.reserve(static_cast<std::size_t>(deg) + 1);
  for (int t = 0; t <= deg; ++t) {
    out.emplace_back(num * Polynomial::monomial(f.one(), static_cast<unsigned>(t)), den);
  }
  return out;
}

std::vector<RationalFunction> rr_basis_pole_powers(const Gf& beta, int r) {
  if (!beta.bound()) throw FieldError("beta must be a bound field element");
  if (r < 0) return {};
  const GaloisField& f = *beta.field();
  const RationalFunction base(Polynomial::constant(f.one()), Polynomial::linear(beta));
  std::vector<RationalFunction> out{RationalFunction::constant(f.one())};
  for (int i = 1; i <= r; ++i) out.push_back(out.back() * base);
  return out;
}

}  // namespace agc
