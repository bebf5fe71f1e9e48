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

#include "agc/gf.hpp"

#include <ostream>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <utility>

namespace agc {

namespace {

// Polynomials over GF(p) as ascending coefficient vectors. Only used while a
// field is being set up, before any tables exist.
using PrimePoly = std::vector<unsigned>;

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g.
PrimePoly prime_rem(PrimePoly f, const PrimePoly& g, unsigned p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const unsigned lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - (lead * g[i]) % p) % p;
    }
    trim(f);
  }
  return f;
}

bool prime_irreducible(const PrimePoly& f, unsigned p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return m == 1;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    PrimePoly g(d + 1, 0);
    g[d] = 1;
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t v = t;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(v % p);
        v /= p;
      }
      if (prime_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<unsigned> prime_factors(std::uint32_t n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::pair<unsigned, std::vector<unsigned>>, std::unique_ptr<GaloisField>>& registry() {
  static std::map<std::pair<unsigned, std::vector<unsigned>>, std::unique_ptr<GaloisField>> r;
  return r;
}

const GaloisField* common_field(const Gf& a, const Gf& b) {
  if (a.bound() && b.bound() && a.field() != b.field()) {
    throw FieldError("arithmetic between elements of different fields");
  }
  return a.bound() ? a.field() : b.field();
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Gf

Gf::Gf(const GaloisField* field, std::uint32_t code) : field_(field), code_(code) {
  if (field_ != nullptr && code_ >= field_->size()) {
    throw FieldError("element code out of range");
  }
}

std::uint32_t Gf::code() const {
  if (bound()) return code_;
  if (constant_ == 0 || constant_ == 1) return static_cast<std::uint32_t>(constant_);
  throw FieldError("unbound constant has no code");
}

bool Gf::is_zero() const { return bound() ? code_ == 0 : constant_ == 0; }
bool Gf::is_one() const { return bound() ? code_ == 1 : constant_ == 1; }

Gf Gf::in(const GaloisField& field) const {
  if (bound()) {
    if (field_ != &field) throw FieldError("element belongs to a different field");
    return *this;
  }
  return field.integer(constant_);
}

Gf Gf::inverse() const {
  if (!bound()) {
    if (constant_ == 1 || constant_ == -1) return *this;
    throw FieldError("cannot invert an unbound constant");
  }
  if (code_ == 0) throw std::domain_error("inverse of zero");
  return Gf(field_, field_->inv(code_));
}

Gf Gf::pow(long long e) const {
  if (!bound()) {
    if (constant_ == 0 && e > 0) return Gf(0);
    if (constant_ == 1 || e == 0) return Gf(1);
    throw FieldError("cannot raise an unbound constant");
  }
  return Gf(field_, field_->pow(code_, e));
}

Gf Gf::add_slow(const Gf& a, const Gf& b) {
  const GaloisField* f = common_field(a, b);
  if (f == nullptr) return Gf(a.constant_ + b.constant_);
  return Gf(f, f->add(a.in(*f).code_, b.in(*f).code_));
}

Gf Gf::sub_slow(const Gf& a, const Gf& b) {
  const GaloisField* f = common_field(a, b);
  if (f == nullptr) return Gf(a.constant_ - b.constant_);
  return Gf(f, f->sub(a.in(*f).code_, b.in(*f).code_));
}

Gf Gf::mul_slow(const Gf& a, const Gf& b) {
  const GaloisField* f = common_field(a, b);
  if (f == nullptr) return Gf(a.constant_ * b.constant_);
  return Gf(f, f->mul(a.in(*f).code_, b.in(*f).code_));
}

Gf operator/(const Gf& a, const Gf& b) {
  const GaloisField* f = common_field(a, b);
  if (f == nullptr) return a * b.inverse();
  const std::uint32_t d = b.in(*f).code_;
  if (d == 0) throw std::domain_error("division by zero");
  return Gf(f, f->mul(a.in(*f).code_, f->inv(d)));
}

Gf operator-(const Gf& a) {
  if (!a.bound()) return Gf(-a.constant_);
  return Gf(a.field_, a.field_->neg(a.code_));
}

bool Gf::equal_slow(const Gf& a, const Gf& b) {
  if (a.bound() && b.bound()) return a.field_ == b.field_ && a.code_ == b.code_;
  if (a.bound()) return a.code_ == b.in(*a.field_).code_;
  if (b.bound()) return b.code_ == a.in(*b.field_).code_;
  return a.constant_ == b.constant_;
}

// ---------------------------------------------------------------------------
// GaloisField

const GaloisField& GaloisField::get(unsigned p, unsigned m,
                                    std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw FieldError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxSize) throw FieldError("field size exceeds 2^16");
  }

  PrimePoly mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != m + 1 || mod.back() != 1) {
      throw FieldError("modulus must be monic of degree " + std::to_string(m));
    }
    for (unsigned c : mod) {
      if (c >= p) throw FieldError("modulus coefficient out of range");
    }
    if (!prime_irreducible(mod, p)) throw FieldError("modulus is reducible");
  } else {
    // The code order of the low coefficients is exactly the lexicographic
    // order on (a_{m-1}, ..., a_0).
    mod.assign(m + 1, 0);
    mod[m] = 1;
    bool found = false;
    for (std::uint64_t t = 0; t < q && !found; ++t) {
      std::uint64_t v = t;
      for (unsigned i = 0; i < m; ++i) {
        mod[i] = static_cast<unsigned>(v % p);
        v /= p;
      }
      found = prime_irreducible(mod, p);
    }
    if (!found) throw FieldError("no irreducible polynomial found");
  }

  std::lock_guard<std::mutex> lock(registry_mutex());
  auto key = std::make_pair(p, mod);
  auto it = registry().find(key);
  if (it == registry().end()) {
    std::unique_ptr<GaloisField> f(new GaloisField(p, m, mod));
    it = registry().emplace(std::move(key), std::move(f)).first;
  }
  return *it->second;
}

GaloisField::GaloisField(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < m_; ++i) q_ *= p_;

  auto digits = [&](std::uint32_t code) {
    PrimePoly d(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
      d[i] = code % p_;
      code /= p_;
    }
    return d;
  };
  auto pack = [&](const PrimePoly& d) {
    std::uint32_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * p_ + d[i];
    return code;
  };
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    const PrimePoly da = digits(a), db = digits(b);
    PrimePoly prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    PrimePoly r = prime_rem(prod, modulus_, p_);
    r.resize(m_, 0);
    return pack(r);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  auto digit_add = [&](std::uint32_t a, std::uint32_t b) {
    PrimePoly da = digits(a);
    const PrimePoly db = digits(b);
    for (unsigned i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
    return pack(da);
  };

  const std::uint32_t order = q_ - 1;
  const auto ell = prime_factors(order);
  primitive_ = 1;
  for (std::uint32_t c = 1; c < q_; ++c) {
    const bool primitive = std::all_of(ell.begin(), ell.end(), [&](unsigned l) {
      return slow_pow(c, order / l) != 1;
    });
    if (primitive) {
      primitive_ = c;
      break;
    }
  }

  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  log_.assign(q_, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = cur;
    exp_[i + order] = cur;
    log_[cur] = i;
    cur = slow_mul(cur, primitive_);
  }

  zech_.assign(order, -1);
  for (std::uint32_t d = 0; d < order; ++d) {
    const std::uint32_t s = digit_add(1, exp_[d]);
    zech_[d] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
  }

  if (q_ <= kAddTableLimit) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_table_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(digit_add(a, b));
      }
    }
  }

  // The class of x: code p when m >= 2; the root of x + a_0 when m == 1.
  b_ = m_ >= 2 ? Gf(this, p_) : Gf(this, (p_ - modulus_[0]) % p_);
}

Gf GaloisField::element(std::uint32_t code) const { return Gf(this, code); }

Gf GaloisField::from_coefficients(std::span<const unsigned> ascending) const {
  Gf acc = zero();
  Gf power = one();
  for (unsigned c : ascending) {
    acc += integer(c) * power;
    power *= b_;
  }
  return acc;
}

std::vector<unsigned> GaloisField::coefficients(const Gf& a) const {
  std::uint32_t code = a.in(*this).code();
  std::vector<unsigned> out(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = code % p_;
    code /= p_;
  }
  return out;
}

Gf GaloisField::integer(long long k) const {
  long long r = k % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Gf(this, static_cast<std::uint32_t>(r));
}

std::vector<Gf> GaloisField::elements() const {
  std::vector<Gf> out;
  out.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out.emplace_back(this, c);
  return out;
}

std::uint32_t GaloisField::zech_add(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t order = q_ - 1;
  const std::uint32_t la = log_[a];
  const std::uint32_t d = (log_[b] + order - la) % order;
  const std::int64_t z = zech_[d];
  if (z < 0) return 0;
  return exp_[la + static_cast<std::uint32_t>(z)];
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

std::uint32_t GaloisField::pow(std::uint32_t a, long long e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw std::domain_error("negative power of zero");
  }
  const long long order = q_ - 1;
  long long t = (static_cast<long long>(log_[a]) * (e % order)) % order;
  if (t < 0) t += order;
  return exp_[static_cast<std::size_t>(t)];
}

std::ostream& operator<<(std::ostream& os, const Gf& a) {
  if (a.field_ == nullptr) return os << a.constant_;
  return os << a.field_->format(a);
}

std::string GaloisField::format(const Gf& a) const {
  const Gf x = a.in(*this);
  if (m_ == 1) return std::to_string(x.code());
  if (x.is_zero()) return "0";
  const auto c = coefficients(x);
  std::string out;
  for (unsigned i = m_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += 'b';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

Gf GaloisField::parse(std::string_view text) const {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw FieldError("empty element string");

  auto read_int = [&](std::size_t& pos, long long& out) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    const auto res = std::from_chars(s.data() + start, s.data() + pos, out);
    if (res.ec != std::errc()) throw FieldError("bad integer in element '" + s + "'");
    return true;
  };

  Gf acc = zero();
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw FieldError("expected '+' or '-' in element '" + s + "'");
    }
    first = false;

    long long coeff = 1;
    const bool has_coeff = read_int(pos, coeff);
    if (has_coeff && pos < s.size() && s[pos] == '*') ++pos;
    long long power = 0;
    if (pos < s.size() && s[pos] == 'b') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (!read_int(pos, power)) throw FieldError("missing exponent in element '" + s + "'");
      }
    } else if (!has_coeff) {
      throw FieldError("cannot parse element '" + s + "'");
    }
    Gf term = integer(coeff) * b_.pow(power);
    acc = negative ? acc - term : acc + term;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Free functions

const GaloisField& field_construct(unsigned p, unsigned m,
                                   std::optional<std::vector<unsigned>> modulus) {
  return GaloisField::get(p, m, std::move(modulus));
}

const GaloisField& field_from_spec(std::string_view spec,
                                   std::optional<std::vector<unsigned>> modulus) {
  auto parse_uint = [&](std::string_view v) {
    unsigned out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
      throw FieldError("bad field spec '" + std::string(spec) + "'");
    }
    return out;
  };
  const auto caret = spec.find('^');
  if (caret != std::string_view::npos) {
    return GaloisField::get(parse_uint(spec.substr(0, caret)), parse_uint(spec.substr(caret + 1)),
                            std::move(modulus));
  }
  const unsigned q = parse_uint(spec);
  if (q < 2) throw FieldError("field size must be a prime power");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned m = 0;
  unsigned v = q;
  while (v % p == 0) {
    v /= p;
    ++m;
  }
  if (v != 1) throw FieldError(std::to_string(q) + " is not a prime power");
  return GaloisField::get(p, m, std::move(modulus));
}

unsigned element_order(const Gf& a) {
  if (!a.bound() || a.is_zero()) throw std::domain_error("order of zero");
  const GaloisField& f = *a.field();
  const unsigned order = f.size() - 1;
  return order / std::gcd(order, f.log(a.code()));
}

Gf primitive_element(const GaloisField& f) { return f.primitive(); }

std::vector<Gf> frobenius_orbit(const Gf& a) {
  if (!a.bound()) throw FieldError("frobenius orbit needs a bound element");
  const unsigned p = a.field()->characteristic();
  std::vector<Gf> out{a};
  for (Gf cur = a.pow(p); cur != a; cur = cur.pow(p)) out.push_back(cur);
  return out;
}

Gf find_element_of_order(const GaloisField& f, unsigned n) {
  if (n == 0 || (f.size() - 1) % n != 0) {
    throw std::domain_error("no element of order " + std::to_string(n) + " in GF(" +
                            std::to_string(f.size()) + ")");
  }
  for (std::uint32_t c = 1; c < f.size(); ++c) {
    const Gf a = f.element(c);
    if (element_order(a) == n) return a;
  }
  throw std::logic_error("element of order n missing despite n | q-1");
}

}  // namespace agc
