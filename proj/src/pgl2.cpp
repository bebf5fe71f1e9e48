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

#include "agc/pgl2.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace agc {

ProjPoint::ProjPoint(const Gf& value) : value_(value) {
  if (!value.bound()) throw FieldError("projective point needs a bound element");
}

const Gf& ProjPoint::value() const {
  if (!value_) throw std::logic_error("point at infinity has no finite value");
  return *value_;
}

bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.value_ == b.value_; }

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_finite() && b.is_infinity();
  return a.value_->code() < b.value_->code();
}

std::vector<ProjPoint> projective_line(const GaloisField& f) {
  std::vector<ProjPoint> out;
  for (const Gf& a : f.elements()) out.emplace_back(a);
  out.push_back(ProjPoint::infinity());
  return out;
}

std::string to_string(const ProjPoint& t) {
  if (t.is_infinity()) return "inf";
  return t.value().field()->format(t.value());
}

ProjPoint parse_point(const GaloisField& f, std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s == "inf" || s == "oo" || s == "infinity") return ProjPoint::infinity();
  return ProjPoint(f.parse(s));
}

ProjPoint reciprocal(const ProjPoint& t, const GaloisField& f) {
  if (t.is_infinity()) return ProjPoint(f.zero());
  if (t.value().is_zero()) return ProjPoint::infinity();
  return ProjPoint(t.value().inverse());
}

MobiusMap::MobiusMap(const Gf& a, const Gf& b, const Gf& c, const Gf& d) {
  field_ = a.bound() ? a.field() : b.bound() ? b.field() : c.bound() ? c.field() : d.field();
  if (field_ == nullptr) throw FieldError("matrix entries must be bound to a field");
  a_ = a.in(*field_);
  b_ = b.in(*field_);
  c_ = c.in(*field_);
  d_ = d.in(*field_);
  if ((a_ * d_ - b_ * c_).is_zero()) throw std::invalid_argument("singular matrix is not in PGL2");
  for (const Gf* e : {&a_, &b_, &c_, &d_}) {
    if (!e->is_zero()) {
      const Gf s = e->inverse();
      a_ *= s;
      b_ *= s;
      c_ *= s;
      d_ *= s;
      break;
    }
  }
}

MobiusMap MobiusMap::identity(const GaloisField& f) { return MobiusMap(f.one(), f.zero(), f.zero(), f.one()); }

bool MobiusMap::is_identity() const { return b_.is_zero() && c_.is_zero() && a_ == d_; }

MobiusMap MobiusMap::inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

MobiusMap MobiusMap::pow(long long e) const {
  MobiusMap base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  MobiusMap r = identity(*field_);
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

ProjPoint MobiusMap::apply(const ProjPoint& t) const {
  if (t.is_infinity()) {
    if (c_.is_zero()) return ProjPoint::infinity();
    return ProjPoint(a_ / c_);
  }
  const Gf x = t.value();
  const Gf den = c_ * x + d_;
  if (den.is_zero()) return ProjPoint::infinity();
  return ProjPoint((a_ * x + b_) / den);
}

ProjPoint MobiusMap::apply_inverse(const ProjPoint& t) const {
  if (t.is_infinity()) {
    if (c_.is_zero()) return ProjPoint::infinity();
    return ProjPoint(-d_ / c_);
  }
  const Gf alpha = t.value();
  if (a_ == c_ * alpha) return ProjPoint::infinity();
  return ProjPoint((d_ * alpha - b_) / (a_ - c_ * alpha));
}

MobiusMap operator*(const MobiusMap& x, const MobiusMap& y) {
  return MobiusMap(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                   x.c_ * y.b_ + x.d_ * y.d_);
}

bool operator==(const MobiusMap& x, const MobiusMap& y) {
  return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

bool operator<(const MobiusMap& x, const MobiusMap& y) {
  return std::make_tuple(x.a_.code(), x.b_.code(), x.c_.code(), x.d_.code()) <
         std::make_tuple(y.a_.code(), y.b_.code(), y.c_.code(), y.d_.code());
}

MobiusMap parse_matrix(const GaloisField& f, std::string_view text) {
  std::vector<Gf> entries;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == ';') {
      entries.push_back(f.parse(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  entries.push_back(f.parse(cur));
  if (entries.size() != 4) throw std::invalid_argument("matrix must have the form a,b;c,d");
  return MobiusMap(entries[0], entries[1], entries[2], entries[3]);
}

std::string to_string(const MobiusMap& m) {
  const GaloisField& f = m.field();
  return f.format(m.a()) + "," + f.format(m.b()) + ";" + f.format(m.c()) + "," + f.format(m.d());
}

ProjPoint mobius_apply_inverse(const MobiusMap& m, const ProjPoint& t) { return m.apply_inverse(t); }

unsigned pgl2_order(const MobiusMap& m) {
  unsigned t = 1;
  for (MobiusMap p = m; !p.is_identity(); p = p * m) ++t;
  return t;
}

unsigned order_triangular(const MobiusMap& m) {
  if (!m.is_upper_triangular()) throw std::invalid_argument("matrix is not of the form (1 -b; 0 a)");
  if (m.is_identity()) throw std::invalid_argument("identity has no triangular order formula");
  const Gf a = m.d();
  if (a.is_one()) return m.field().characteristic();
  return element_order(a);
}

bool is_fixed(const MobiusMap& m, const ProjPoint& t) { return m.apply_inverse(t) == t; }

std::vector<ProjPoint> fixed_points(const MobiusMap& m) {
  std::vector<ProjPoint> out;
  for (const ProjPoint& t : projective_line(m.field())) {
    if (is_fixed(m, t)) out.push_back(t);
  }
  return out;
}

std::vector<ProjPoint> orbit(const MobiusMap& m, const ProjPoint& alpha) {
  if (m.is_identity()) throw std::invalid_argument("identity has only trivial orbits");
  if (is_fixed(m, alpha)) throw std::invalid_argument("orbit seed " + to_string(alpha) + " is a fixed point");
  std::vector<ProjPoint> out{alpha};
  for (ProjPoint cur = m.apply_inverse(alpha); cur != alpha; cur = m.apply_inverse(cur)) out.push_back(cur);
  return out;
}

unsigned isotropy_order(const MobiusMap& m, const ProjPoint& alpha) {
  const unsigned order = pgl2_order(m);
  if (m.is_identity() || is_fixed(m, alpha)) return order;
  return order / static_cast<unsigned>(orbit(m, alpha).size());
}

Gf orbit_difference(const MobiusMap& m, const Gf& alpha, unsigned i, unsigned j) {
  if (!m.is_upper_triangular()) throw std::invalid_argument("matrix is not of the form (1 -b; 0 a)");
  const std::size_t n = orbit(m, ProjPoint(alpha)).size();
  if (i < 1 || i >= j || j > n) throw std::out_of_range("orbit indices must satisfy 1 <= i < j <= n");
  const GaloisField& f = m.field();
  const Gf a = m.d();
  const Gf b = -m.b();
  Gf sum = f.zero();
  Gf power = f.one();
  for (unsigned k = 0; k < j - i; ++k) {
    sum += power;
    power *= a;
  }
  return (b + (a - f.one()) * alpha.in(f)) * a.pow(static_cast<long long>(i) - 1) * sum;
}

std::vector<MobiusMap> pgl2_elements(const GaloisField& f) {
  std::vector<MobiusMap> out;
  const auto els = f.elements();
  for (const Gf& b : els) {
    for (const Gf& c : els) {
      for (const Gf& d : els) {
        if (!(d - b * c).is_zero()) out.emplace_back(f.one(), b, c, d);
      }
    }
  }
  for (const Gf& c : els) {
    if (c.is_zero()) continue;
    for (const Gf& d : els) out.emplace_back(f.zero(), f.one(), c, d);
  }
  return out;
}

}  // namespace agc
