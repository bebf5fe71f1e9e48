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

// Sigma-cyclic rational AG codes.
//
// C(A, alpha, beta, r) evaluates L(r P_beta) on the orbit of P_alpha under the
// automorphism of A, where beta is a fixed point of A. The reductions at the
// bottom of this header bring any such code to one representative per (n, r).

#ifndef AGC_SIGMA_HPP
#define AGC_SIGMA_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "agc/lincode.hpp"
#include "agc/places.hpp"

namespace agc {

struct SigmaCodeSpec {
  MobiusMap a;
  ProjPoint alpha;
  ProjPoint beta;
  int r;
};

class SpecError : public std::invalid_argument {
 public:
  enum class Kind { kFixedSeed, kMovingBeta, kOverlap, kRangeR, kShape };
  SpecError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Throws SpecError naming the first violated condition.
void validate(const SigmaCodeSpec& spec);
/// Orbit of alpha (validated spec).
std::vector<ProjPoint> spec_orbit(const SigmaCodeSpec& spec);
std::vector<Place> orbit_places(const std::vector<ProjPoint>& orbit);
std::string to_string(const SigmaCodeSpec& spec);

/// Generator rows are the rr_basis(G) functions evaluated along D.
LinearCode construct_ag_code(const GaloisField& f, const std::vector<Place>& d, const Divisor& g);

enum class BasisChoice { kDefault, kPolePowers };
/// kPolePowers uses (1, 1/(x - beta), ...) and needs a finite beta.
LinearCode construct_sigma_code(const SigmaCodeSpec& spec, BasisChoice basis = BasisChoice::kDefault);

struct VerificationReport {
  bool places_distinct = false;
  bool supports_disjoint = false;
  // Unset when there is no automorphism to test (the Frobenius example).
  std::optional<bool> shift_condition;
  std::optional<bool> d_invariant;
  std::optional<bool> g_invariant;
  std::optional<bool> order_divisibility;
  bool code_cyclic = false;
  bool induced_permutation = false;

  int n = 0;                 // |D|
  std::optional<int> m;      // order of A
  std::optional<int> k_iso;  // isotropy order of P_1
  int dimension = 0;
  std::optional<int> distance;  // when enumeration fits the budget

  /// Every flag that was evaluated holds.
  bool all() const;
  /// The hypotheses that force cyclicity all hold.
  bool hypotheses() const;
};

VerificationReport verify_sigma_cyclic(const MobiusMap& a, const std::vector<Place>& d, const Divisor& g,
                                       const Budgets& budgets = {});

struct ExampleResult {
  LinearCode code;
  VerificationReport report;
  std::vector<Place> d;
  Divisor g;
  std::string note;
};

/// D = Frobenius conjugates of the primitive element of GF(p^m),
/// G = r P_0 + s P_inf; requires m >= 2 and 0 <= r + s < m.
ExampleResult example_frobenius(unsigned p, unsigned m, int r, int s, const Budgets& budgets = {});
/// sigma(x) = omega^{-1} x with omega of order n, D = orbit of P_1,
/// G = r P_0 + s P_inf; requires n | q - 1 and 0 <= r + s <= n - 2.
ExampleResult example_roots_of_unity(const GaloisField& f, unsigned n, int r, int s, const Budgets& budgets = {});
/// sigma(x) = x - 1, alpha the smallest element outside the prime field,
/// G = s P_inf; length p.
ExampleResult example_artin_schreier(const GaloisField& f, int s, const Budgets& budgets = {});

/// Moves a finite nonzero beta to 0 by x -> x + beta; the code is unchanged.
SigmaCodeSpec transport_beta_to_zero(const SigmaCodeSpec& spec);
/// (1 0; c d), alpha, 0, r  ->  (d c; 0 1), 1/alpha, inf, r; the code is unchanged
/// and the orbit is inverted pointwise.
SigmaCodeSpec transport_zero_to_infinity(const SigmaCodeSpec& spec);

/// W of (I_k | W) for the generator (alpha_i^e), e < k = r + 1, along the orbit
/// of A = (1 -b; 0 a), from the closed product formula.
GfMatrix standard_form_closed(const MobiusMap& a, const Gf& alpha, int r);

enum class Relation { kEqual, kEquivalent };
std::string to_string(Relation r);

struct CanonicalResult {
  SigmaCodeSpec canonical;
  Relation relation;
  /// canonical code = input code · witness.
  MonomialMap witness;
  std::vector<std::string> steps;
};

/// Canonical representatives: (T, 1, inf, r) for n = p and (D_c, 1, inf, r)
/// with c the smallest element of order n otherwise.
CanonicalResult canonicalize(const SigmaCodeSpec& spec);
SigmaCodeSpec canonical_spec(const GaloisField& f, unsigned n, int r);

}  // namespace agc

#endif  // AGC_SIGMA_HPP
