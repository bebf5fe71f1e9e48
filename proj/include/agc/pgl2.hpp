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

// PGL2(F_q) acting on the projective line.
//
// Direction convention used throughout the library: the automorphism sigma
// attached to A = (a b; c d) maps x to (ax + b)/(cx + d), and sigma moves the
// rational place P_t to P_{A^{-1} t}. Orbits are therefore generated by A^{-1}.

#ifndef AGC_PGL2_HPP
#define AGC_PGL2_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agc/gf.hpp"

namespace agc {

/// Point of P^1(F_q): a field element or infinity.
class ProjPoint {
 public:
  static ProjPoint infinity() { return ProjPoint(); }
  explicit ProjPoint(const Gf& value);

  bool is_infinity() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Throws std::logic_error at infinity.
  const Gf& value() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b);
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  /// Finite points by code, infinity last.
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

 private:
  ProjPoint() = default;
  std::optional<Gf> value_;
};

/// All q + 1 points, finite ones in code order, then infinity.
std::vector<ProjPoint> projective_line(const GaloisField& f);
std::string to_string(const ProjPoint& t);
ProjPoint parse_point(const GaloisField& f, std::string_view text);
/// 1/t with 1/0 = inf and 1/inf = 0.
ProjPoint reciprocal(const ProjPoint& t, const GaloisField& f);

/// Element of PGL2(F_q), stored with its first nonzero entry (row-major) equal to 1.
class MobiusMap {
 public:
  MobiusMap(const Gf& a, const Gf& b, const Gf& c, const Gf& d);
  static MobiusMap identity(const GaloisField& f);

  const GaloisField& field() const { return *field_; }
  const Gf& a() const { return a_; }
  const Gf& b() const { return b_; }
  const Gf& c() const { return c_; }
  const Gf& d() const { return d_; }

  bool is_identity() const;
  bool is_upper_triangular() const { return c_.is_zero(); }

  MobiusMap inverse() const;
  MobiusMap pow(long long e) const;
  /// A · t = (at + b)/(ct + d).
  ProjPoint apply(const ProjPoint& t) const;
  /// A^{-1} · t, by the explicit case table (inf when a = c t, -d/c at inf).
  ProjPoint apply_inverse(const ProjPoint& t) const;

  friend MobiusMap operator*(const MobiusMap& x, const MobiusMap& y);
  friend bool operator==(const MobiusMap& x, const MobiusMap& y);
  friend bool operator!=(const MobiusMap& x, const MobiusMap& y) { return !(x == y); }
  friend bool operator<(const MobiusMap& x, const MobiusMap& y);

 private:
  const GaloisField* field_;
  Gf a_, b_, c_, d_;
};

/// `a,b;c,d` with gf element syntax.
MobiusMap parse_matrix(const GaloisField& f, std::string_view text);
std::string to_string(const MobiusMap& m);

ProjPoint mobius_apply_inverse(const MobiusMap& m, const ProjPoint& t);
/// Smallest t >= 1 with A^t scalar, by iterated multiplication.
unsigned pgl2_order(const MobiusMap& m);
/// Closed form for (1 -b; 0 a) != I: p when a = 1, the multiplicative order of a otherwise.
unsigned order_triangular(const MobiusMap& m);
/// Points with A^{-1} t = t, in projective_line order.
std::vector<ProjPoint> fixed_points(const MobiusMap& m);
bool is_fixed(const MobiusMap& m, const ProjPoint& t);
/// (alpha_1, ..., alpha_n) with alpha_{i+1} = A^{-1} alpha_i; alpha must move.
std::vector<ProjPoint> orbit(const MobiusMap& m, const ProjPoint& alpha);
/// Order of the stabilizer of alpha in <A>.
unsigned isotropy_order(const MobiusMap& m, const ProjPoint& alpha);
/// Closed form for alpha_j - alpha_i along the orbit of a triangular
/// (1 -b; 0 a): (b + (a-1) alpha) a^{i-1} sum_{k<j-i} a^k, 1-based i < j.
Gf orbit_difference(const MobiusMap& m, const Gf& alpha, unsigned i, unsigned j);

/// Every element of PGL2(F_q), q^3 - q of them, in normalized-entry order.
std::vector<MobiusMap> pgl2_elements(const GaloisField& f);

}  // namespace agc

#endif  // AGC_PGL2_HPP
