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

#ifndef AGC_GF_HPP
#define AGC_GF_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace agc {

class GaloisField;

/// Element of GF(p^m).
///
/// A bound element stores its field and the packed coefficient vector
/// (a_{m-1}, ..., a_0) read as a base-p integer, so the integer order of
/// codes is the canonical element order. An unbound element is a small
/// integer constant (what Eigen produces for `Scalar(0)` / `Scalar(1)`);
/// it binds to the prime subfield of whatever field it meets first.
class Gf {
 public:
  constexpr Gf() = default;
  explicit constexpr Gf(int constant) : constant_(constant) {}
  Gf(const GaloisField* field, std::uint32_t code);

  const GaloisField* field() const { return field_; }
  bool bound() const { return field_ != nullptr; }

  /// Packed coefficient code; requires a bound element.
  std::uint32_t code() const;

  bool is_zero() const;
  bool is_one() const;

  Gf inverse() const;
  Gf pow(long long e) const;

  /// Binds an unbound constant into `field`; bound elements must already
  /// belong to it.
  Gf in(const GaloisField& field) const;

  Gf& operator+=(const Gf& o) { return *this = *this + o; }
  Gf& operator-=(const Gf& o) { return *this = *this - o; }
  Gf& operator*=(const Gf& o) { return *this = *this * o; }
  Gf& operator/=(const Gf& o) { return *this = *this / o; }

  friend inline Gf operator+(const Gf& a, const Gf& b);
  friend inline Gf operator-(const Gf& a, const Gf& b);
  friend inline Gf operator*(const Gf& a, const Gf& b);
  friend Gf operator/(const Gf& a, const Gf& b);
  friend Gf operator-(const Gf& a);
  friend inline bool operator==(const Gf& a, const Gf& b);
  friend bool operator!=(const Gf& a, const Gf& b) { return !(a == b); }
  /// Field notation for bound elements, the integer for unbound ones.
  friend std::ostream& operator<<(std::ostream& os, const Gf& a);

 private:
  struct Raw {};
  Gf(Raw, const GaloisField* field, std::uint32_t code) : field_(field), code_(code) {}
  // Mixed bound/unbound operands.
  static Gf add_slow(const Gf& a, const Gf& b);
  static Gf sub_slow(const Gf& a, const Gf& b);
  static Gf mul_slow(const Gf& a, const Gf& b);
  static bool equal_slow(const Gf& a, const Gf& b);

  const GaloisField* field_ = nullptr;
  std::uint32_t code_ = 0;
  int constant_ = 0;
};

/// Immutable description of GF(p^m) together with its arithmetic tables.
///
/// Instances are interned: `GaloisField::get` returns a reference that stays
/// valid for the lifetime of the process, which is what lets `Gf` hold a
/// plain pointer.
class GaloisField {
 public:
  static constexpr std::uint32_t kMaxSize = 1u << 16;

  /// Returns the field GF(p^m). Without a modulus, the canonical one is the
  /// monic irreducible with lexicographically smallest (a_{m-1}, ..., a_0).
  /// `modulus` is given in ascending order and must be monic of degree m.
  static const GaloisField& get(unsigned p, unsigned m,
                                std::optional<std::vector<unsigned>> modulus = std::nullopt);

  GaloisField(const GaloisField&) = delete;
  GaloisField& operator=(const GaloisField&) = delete;

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint32_t size() const { return q_; }
  /// Ascending coefficients, length m + 1, last entry 1.
  std::span<const unsigned> modulus() const { return modulus_; }

  Gf zero() const { return Gf(this, 0); }
  Gf one() const { return Gf(this, 1); }
  Gf element(std::uint32_t code) const;
  /// Element from an ascending coefficient vector over GF(p), length <= m.
  Gf from_coefficients(std::span<const unsigned> ascending) const;
  /// Ascending coefficient vector of length m.
  std::vector<unsigned> coefficients(const Gf& a) const;
  /// Class of x modulo the modulus (printed as `b`).
  Gf generator() const { return b_; }
  /// Integer k reduced into the prime subfield.
  Gf integer(long long k) const;
  /// All q elements in canonical order.
  std::vector<Gf> elements() const;

  /// Parses `0`, `1`, `b`, `2b^2+b+1`, ... (also `-` separated terms).
  Gf parse(std::string_view text) const;
  std::string format(const Gf& a) const;

  // Raw table arithmetic on codes; used by the hot loops in lincode.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    return zech_add(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (a == 0 || p_ == 2) return a;
    return exp_[log_[a] + (q_ - 1) / 2];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, long long e) const;
  /// Discrete log with respect to `primitive()`; a must be nonzero.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }
  /// Primitive element used for the log tables (canonically smallest).
  Gf primitive() const { return Gf(this, primitive_); }

  /// Dense addition table for q <= kAddTableLimit, otherwise empty.
  static constexpr std::uint32_t kAddTableLimit = 1024;
  std::span<const std::uint16_t> add_table() const { return add_table_; }

 private:
  GaloisField(unsigned p, unsigned m, std::vector<unsigned> modulus);
  std::uint32_t zech_add(std::uint32_t a, std::uint32_t b) const;

  unsigned p_;
  unsigned m_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  std::uint32_t primitive_ = 1;
  std::vector<std::uint32_t> exp_;   // length 2(q-1)
  std::vector<std::uint32_t> log_;   // length q
  std::vector<std::int64_t> zech_;   // log(1 + g^d), -1 when 1 + g^d = 0
  std::vector<std::uint16_t> add_table_;
  Gf b_;
};

/// Thrown for malformed field parameters or element strings.
inline Gf operator+(const Gf& a, const Gf& b) {
  if (a.field_ != nullptr && a.field_ == b.field_) return Gf(Gf::Raw{}, a.field_, a.field_->add(a.code_, b.code_));
  return Gf::add_slow(a, b);
}

inline Gf operator-(const Gf& a, const Gf& b) {
  if (a.field_ != nullptr && a.field_ == b.field_) return Gf(Gf::Raw{}, a.field_, a.field_->sub(a.code_, b.code_));
  return Gf::sub_slow(a, b);
}

inline Gf operator*(const Gf& a, const Gf& b) {
  if (a.field_ != nullptr && a.field_ == b.field_) return Gf(Gf::Raw{}, a.field_, a.field_->mul(a.code_, b.code_));
  return Gf::mul_slow(a, b);
}

inline bool operator==(const Gf& a, const Gf& b) {
  if (a.field_ != nullptr && a.field_ == b.field_) return a.code_ == b.code_;
  return Gf::equal_slow(a, b);
}

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const GaloisField& field_construct(unsigned p, unsigned m,
                                   std::optional<std::vector<unsigned>> modulus = std::nullopt);

/// Parses `p^m`, `p`, or a prime power such as `9`.
const GaloisField& field_from_spec(std::string_view spec,
                                   std::optional<std::vector<unsigned>> modulus = std::nullopt);

/// Multiplicative order of a nonzero element.
unsigned element_order(const Gf& a);
Gf primitive_element(const GaloisField& f);
/// (a, a^p, a^{p^2}, ...) up to the first repetition.
std::vector<Gf> frobenius_orbit(const Gf& a);
/// Canonically smallest element of multiplicative order exactly n.
Gf find_element_of_order(const GaloisField& f, unsigned n);

bool is_prime(unsigned n);

}  // namespace agc

namespace Eigen {

template <>
struct NumTraits<agc::Gf> : GenericNumTraits<agc::Gf> {
  using Real = agc::Gf;
  using NonInteger = agc::Gf;
  using Literal = agc::Gf;
  using Nested = agc::Gf;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 2
  };
  static inline Real epsilon() { return agc::Gf(0); }
  static inline Real dummy_precision() { return agc::Gf(0); }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

}  // namespace Eigen

#endif  // AGC_GF_HPP
