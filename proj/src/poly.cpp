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

#include "agc/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "agc/linalg.hpp"

namespace agc {

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (&a.field() != &b.field()) throw FieldError("polynomials over different fields");
}

// f^(1/p) for f whose exponents are all multiples of p.
Polynomial pth_root(const Polynomial& f) {
  const GaloisField& F = f.field();
  const unsigned p = F.characteristic();
  // Inverse Frobenius on GF(p^m) is a -> a^{p^{m-1}}.
  long long e = 1;
  for (unsigned i = 1; i < F.degree(); ++i) e *= p;
  std::vector<Gf> out;
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); i += p) out.push_back(c[i].pow(e));
  return Polynomial(F, std::move(out));
}

void squarefree_parts(const Polynomial& f, int scale, std::vector<std::pair<Polynomial, int>>& out) {
  if (f.degree() <= 0) return;
  const Polynomial d = f.derivative();
  if (d.is_zero()) {
    squarefree_parts(pth_root(f), scale * static_cast<int>(f.field().characteristic()), out);
    return;
  }
  Polynomial c = gcd(f, d);
  Polynomial w = f / c;
  int i = 1;
  while (!w.is_one()) {
    const Polynomial y = gcd(w, c);
    const Polynomial part = w / y;
    if (part.degree() > 0) out.emplace_back(part.monic(), i * scale);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    squarefree_parts(pth_root(c), scale * static_cast<int>(f.field().characteristic()), out);
  }
}

Polynomial powmod(Polynomial base, unsigned long long e, const Polynomial& mod) {
  Polynomial r = Polynomial::constant(mod.field().one());
  base = base % mod;
  while (e > 0) {
    if (e & 1) r = (r * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return r;
}

// Berlekamp splitting of a monic square-free polynomial.
std::vector<Polynomial> berlekamp(const Polynomial& g) {
  const GaloisField& F = g.field();
  const int d = g.degree();
  if (d <= 1) return {g};

  // Row i: coefficients of x^{iq} - x^i mod g.
  const Polynomial xq = powmod(Polynomial::x(F), F.size(), g);
  GfMatrix B(d, d);
  Polynomial power = Polynomial::constant(F.one());
  for (int i = 0; i < d; ++i) {
    Polynomial row = power - Polynomial::monomial(F.one(), static_cast<unsigned>(i));
    for (int j = 0; j < d; ++j) B(i, j) = row.coefficient(j);
    power = (power * xq) % g;
  }
  // h with h^q = h mod g are the left kernel vectors of B.
  const GfMatrix basis = kernel(GfMatrix(B.transpose()));
  const auto count = static_cast<std::size_t>(basis.rows());
  if (count == 1) return {g};

  std::vector<Polynomial> factors{g};
  const auto elements = F.elements();
  for (Eigen::Index v = 0; v < basis.rows() && factors.size() < count; ++v) {
    std::vector<Gf> hc;
    for (int j = 0; j < d; ++j) hc.push_back(basis(v, j).in(F));
    const Polynomial h(F, hc);
    if (h.degree() <= 0) continue;
    std::vector<Polynomial> next;
    for (const Polynomial& u : factors) {
      Polynomial rest = u;
      for (const Gf& c : elements) {
        if (rest.degree() <= 1) break;
        const Polynomial part = gcd(rest, h - Polynomial::constant(c));
        if (part.degree() <= 0) continue;
        if (part.degree() == rest.degree()) break;
        next.push_back(part);
        rest = (rest / part).monic();
      }
      if (rest.degree() > 0) next.push_back(rest);
    }
    factors = std::move(next);
  }
  return factors;
}

}  // namespace

Polynomial::Polynomial(const GaloisField& f, std::vector<Gf> ascending) : field_(&f), coeffs_(std::move(ascending)) {
  for (Gf& c : coeffs_) c = c.in(f);
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Gf& c) {
  if (!c.bound()) throw FieldError("polynomial constant must be bound to a field");
  return Polynomial(*c.field(), {c});
}

Polynomial Polynomial::x(const GaloisField& f) { return Polynomial(f, {f.zero(), f.one()}); }

Polynomial Polynomial::linear(const Gf& a) {
  if (!a.bound()) throw FieldError("polynomial root must be bound to a field");
  return Polynomial(*a.field(), {-a, a.field()->one()});
}

Polynomial Polynomial::monomial(const Gf& c, unsigned degree) {
  if (!c.bound()) throw FieldError("polynomial coefficient must be bound to a field");
  std::vector<Gf> v(degree + 1, c.field()->zero());
  v[degree] = c;
  return Polynomial(*c.field(), std::move(v));
}

Gf Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_->zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

Gf Polynomial::leading() const { return coeffs_.empty() ? field_->zero() : coeffs_.back(); }

Polynomial Polynomial::monic() const {
  if (coeffs_.empty()) return *this;
  const Gf inv = coeffs_.back().inverse();
  Polynomial out = *this;
  for (Gf& c : out.coeffs_) c *= inv;
  return out;
}

Gf Polynomial::operator()(const Gf& x) const {
  const Gf v = x.in(*field_);
  Gf acc = field_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Gf> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(field_->integer(static_cast<long long>(i)) * coeffs_[i]);
  }
  return Polynomial(*field_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(field_->one());
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_field(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_->zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_field(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_->zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (Gf& c : out.coeffs_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  std::vector<Gf> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field().zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(a.field(), std::move(out));
}

Polynomial operator*(const Gf& c, const Polynomial& a) {
  Polynomial out = a;
  const Gf s = c.in(a.field());
  for (Gf& x : out.coeffs_) x *= s;
  out.normalize();
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    const auto ca = a.coeffs_[i].code(), cb = b.coeffs_[i].code();
    if (ca != cb) return ca < cb;
  }
  return false;
}

std::string Polynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Gf& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = field_->format(c);
    const bool compound = cs.find('+') != std::string::npos;
    if (i == 0) {
      out += cs;
      continue;
    }
    if (!c.is_one()) out += compound ? "(" + cs + ")" : cs;
    out += var;
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const GaloisField& F = a.field();
  if (a.degree() < b.degree()) return {Polynomial(F), a};
  std::vector<Gf> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Gf> quot(rem.size() - db, F.zero());
  const Gf lead_inv = bc.back().inverse();
  for (std::size_t i = rem.size(); i-- > db;) {
    const Gf c = rem[i] * lead_inv;
    if (c.is_zero()) continue;
    const std::size_t shift = i - db;
    quot[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= c * bc[j];
  }
  return {Polynomial(F, std::move(quot)), Polynomial(F, std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<Gf> roots_in_fq(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::vector<Gf> out;
  for (const Gf& a : f.field().elements()) {
    if (f(a).is_zero()) out.push_back(a);
  }
  return out;
}

std::vector<Polynomial> monic_polynomials(const GaloisField& f, unsigned d) {
  std::size_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= f.size();
  std::vector<Polynomial> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<Gf> c(d + 1, f.zero());
    std::size_t v = t;
    for (unsigned i = 0; i < d; ++i) {
      c[i] = f.element(static_cast<std::uint32_t>(v % f.size()));
      v /= f.size();
    }
    c[d] = f.one();
    out.emplace_back(f, std::move(c));
  }
  return out;
}

bool is_irreducible(const Polynomial& f) {
  const int deg = f.degree();
  if (deg < 1) return false;
  if (deg == 1) return true;
  if (!roots_in_fq(f).empty()) return false;
  const GaloisField& F = f.field();
  for (int d = 2; d <= deg / 2; ++d) {
    std::size_t count = 1;
    for (int i = 0; i < d; ++i) count *= F.size();
    std::vector<Gf> c(static_cast<std::size_t>(d) + 1, F.zero());
    c[static_cast<std::size_t>(d)] = F.one();
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t v = t;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = F.element(static_cast<std::uint32_t>(v % F.size()));
        v /= F.size();
      }
      if ((f % Polynomial(F, c)).is_zero()) return false;
    }
  }
  return true;
}

namespace {

Polynomial powmod(Polynomial base, std::uint64_t e, const Polynomial& mod) {
  Polynomial r = Polynomial::constant(mod.field().one());
  base = base % mod;
  while (e > 0) {
    if (e & 1) r = (r * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool rabin_irreducible(const Polynomial& f) {
  const int deg = f.degree();
  if (deg < 1) return false;
  if (deg == 1) return true;
  const Polynomial g = f.monic();
  const Polynomial x = Polynomial::x(f.field());
  const std::uint64_t q = f.field().size();
  // frob[i] = x^{q^i} mod g
  std::vector<Polynomial> frob{x % g};
  for (int i = 1; i <= deg; ++i) frob.push_back(powmod(frob.back(), q, g));
  if (frob[static_cast<std::size_t>(deg)] != x % g) return false;
  for (int r = 2; r <= deg; ++r) {
    if (deg % r != 0 || !is_prime(static_cast<unsigned>(r))) continue;
    if (gcd(frob[static_cast<std::size_t>(deg / r)] - x, g).degree() > 0) return false;
  }
  return true;
}

std::vector<Factor> factor(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("factorization of the zero polynomial");
  std::vector<std::pair<Polynomial, int>> parts;
  squarefree_parts(f.monic(), 1, parts);
  std::vector<Factor> out;
  for (const auto& [part, mult] : parts) {
    for (Polynomial& g : berlekamp(part)) out.push_back({g.monic(), mult});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.factor < b.factor; });
  // Merge equal factors that arrived through different square-free layers.
  std::vector<Factor> merged;
  for (Factor& fa : out) {
    if (!merged.empty() && merged.back().factor == fa.factor) {
      merged.back().multiplicity += fa.multiplicity;
    } else {
      merged.push_back(std::move(fa));
    }
  }
  return merged;
}

}  // namespace agc
