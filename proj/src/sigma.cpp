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

#include "agc/sigma.hpp"

#include <algorithm>
#include <set>

namespace agc {

namespace {

GfMatrix evaluation_matrix(const GaloisField& f, const std::vector<RationalFunction>& basis,
                           const std::vector<Place>& d) {
  GfMatrix m(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = evaluate_at_place(basis[i], d[j]).in(f);
    }
  }
  return m;
}

bool distinct(const std::vector<Place>& d) {
  const std::set<Place> s(d.begin(), d.end());
  return s.size() == d.size();
}

bool disjoint(const std::vector<Place>& d, const Divisor& g) {
  return std::none_of(d.begin(), d.end(), [&](const Place& p) { return g.coefficient(p) != 0; });
}

MonomialMap identity_map(const GaloisField& f, std::size_t n) {
  MonomialMap m;
  for (std::size_t i = 0; i < n; ++i) m.target.push_back(static_cast<Eigen::Index>(i));
  m.scale.assign(n, f.one());
  return m;
}

Gf geometric_sum(const Gf& a, long long t) {
  const GaloisField& f = *a.field();
  Gf sum = f.zero();
  Gf power = f.one();
  for (long long u = 0; u < t; ++u) {
    sum += power;
    power *= a;
  }
  return sum;
}

}  // namespace

void validate(const SigmaCodeSpec& spec) {
  using K = SpecError::Kind;
  if (spec.a.is_identity() || is_fixed(spec.a, spec.alpha)) {
    throw SpecError(K::kFixedSeed, "orbit seed " + to_string(spec.alpha) + " is fixed by A");
  }
  if (!is_fixed(spec.a, spec.beta)) {
    throw SpecError(K::kMovingBeta, "beta = " + to_string(spec.beta) + " is not a fixed point of A");
  }
  const auto orb = orbit(spec.a, spec.alpha);
  if (std::find(orb.begin(), orb.end(), spec.beta) != orb.end()) {
    throw SpecError(K::kOverlap, "beta lies on the orbit of alpha");
  }
  const int n = static_cast<int>(orb.size());
  if (spec.r < 1 || spec.r > n - 2) {
    throw SpecError(K::kRangeR, "r = " + std::to_string(spec.r) + " outside 1.." + std::to_string(n - 2) +
                                    " for orbit length " + std::to_string(n));
  }
}

std::vector<ProjPoint> spec_orbit(const SigmaCodeSpec& spec) { return orbit(spec.a, spec.alpha); }

std::vector<Place> orbit_places(const std::vector<ProjPoint>& orb) {
  std::vector<Place> out;
  out.reserve(orb.size());
  for (const ProjPoint& t : orb) out.push_back(Place::rational(t));
  return out;
}

std::string to_string(const SigmaCodeSpec& spec) {
  return "C(" + to_string(spec.a) + ", " + to_string(spec.alpha) + ", " + to_string(spec.beta) + ", " +
         std::to_string(spec.r) + ")";
}

LinearCode construct_ag_code(const GaloisField& f, const std::vector<Place>& d, const Divisor& g) {
  if (d.empty()) throw std::invalid_argument("D must contain at least one place");
  for (const Place& p : d) {
    if (!p.is_rational()) throw std::invalid_argument("D contains the non-rational place " + to_string(p));
  }
  if (!distinct(d)) throw std::invalid_argument("D contains a repeated place");
  if (!disjoint(d, g)) throw std::invalid_argument("supports of D and G intersect");
  if (g.degree() < 0) throw std::invalid_argument("deg G must be non-negative");
  return LinearCode(f, evaluation_matrix(f, rr_basis(f, g), d));
}

LinearCode construct_sigma_code(const SigmaCodeSpec& spec, BasisChoice basis) {
  validate(spec);
  const GaloisField& f = spec.a.field();
  const std::vector<Place> d = orbit_places(spec_orbit(spec));
  if (basis == BasisChoice::kDefault) return construct_ag_code(f, d, divisor(Place::rational(spec.beta), spec.r));
  if (spec.beta.is_infinity()) throw std::invalid_argument("the 1/(x - beta) basis needs a finite beta");
  return LinearCode(f, evaluation_matrix(f, rr_basis_pole_powers(spec.beta.value(), spec.r), d));
}

bool VerificationReport::all() const {
  for (const auto& flag : {shift_condition, d_invariant, g_invariant, order_divisibility}) {
    if (flag && !*flag) return false;
  }
  return places_distinct && supports_disjoint && code_cyclic && induced_permutation;
}

bool VerificationReport::hypotheses() const {
  for (const auto& flag : {shift_condition, d_invariant, g_invariant}) {
    if (flag && !*flag) return false;
  }
  return places_distinct && supports_disjoint;
}

namespace {

// Flags that only need D and G.
void fill_code_flags(VerificationReport& rep, const GaloisField& f, const std::vector<Place>& d, const Divisor& g,
                     const Budgets& budgets) {
  rep.n = static_cast<int>(d.size());
  rep.places_distinct = distinct(d);
  rep.supports_disjoint = disjoint(d, g);
  const bool rational = std::all_of(d.begin(), d.end(), [](const Place& p) { return p.is_rational(); });
  if (!rep.places_distinct || !rep.supports_disjoint || !rational || d.empty() || g.degree() < 0) return;

  const GfMatrix m = evaluation_matrix(f, rr_basis(f, g), d);
  const LinearCode code(f, m);
  rep.dimension = static_cast<int>(code.dimension());
  rep.code_cyclic = is_cyclic(code);
  // v(P_i) = u(P_{i+1}) solved for v in L(G), one basis function u at a time.
  const GfMatrix shifted = cyclic_shift(m);
  rep.induced_permutation = true;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (!solve_left(m, shifted.row(i))) {
      rep.induced_permutation = false;
      break;
    }
  }
  if (code.dimension() > 0) {
    try {
      rep.distance = min_distance(code, budgets);
    } catch (const BudgetExceeded&) {
    }
  }
}

}  // namespace

VerificationReport verify_sigma_cyclic(const MobiusMap& a, const std::vector<Place>& d, const Divisor& g,
                                       const Budgets& budgets) {
  const GaloisField& f = a.field();
  VerificationReport rep;
  fill_code_flags(rep, f, d, g, budgets);

  const std::size_t n = d.size();
  bool shift = n > 0;
  std::set<Place> images;
  for (std::size_t i = 0; i < n; ++i) {
    const Place img = place_image(a, d[i]);
    images.insert(img);
    if (img != d[(i + 1) % n]) shift = false;
  }
  rep.shift_condition = shift;
  rep.d_invariant = images == std::set<Place>(d.begin(), d.end());
  rep.g_invariant = divisor_image(a, g) == g;

  const unsigned m = pgl2_order(a);
  rep.m = static_cast<int>(m);
  if (n > 0 && d[0].is_rational()) {
    const ProjPoint p1 = d[0].point();
    unsigned orbit_len = 1;
    for (ProjPoint t = a.apply_inverse(p1); t != p1; t = a.apply_inverse(t)) ++orbit_len;
    unsigned stabilizer = 0;
    MobiusMap power = MobiusMap::identity(f);
    for (unsigned j = 0; j < m; ++j, power = power * a) {
      if (power.apply_inverse(p1) == p1) ++stabilizer;
    }
    rep.k_iso = static_cast<int>(stabilizer);
    rep.order_divisibility = m == orbit_len * stabilizer && orbit_len == n;
  } else {
    rep.order_divisibility = false;
  }
  return rep;
}

ExampleResult example_frobenius(unsigned p, unsigned m, int r, int s, const Budgets& budgets) {
  if (m < 2) throw std::invalid_argument("the Frobenius example needs m >= 2");
  if (r + s < 0) throw std::invalid_argument("r + s must be non-negative");
  const GaloisField& f = field_construct(p, m);
  const std::vector<Gf> conj = frobenius_orbit(primitive_element(f));
  const int n = static_cast<int>(conj.size());
  if (r + s >= n) {
    throw std::invalid_argument("r + s = " + std::to_string(r + s) + " must be below n = " + std::to_string(n));
  }
  std::vector<Place> d;
  for (const Gf& c : conj) d.push_back(Place::rational(ProjPoint(c)));
  const Divisor g = divisor(Place::rational(ProjPoint(f.zero())), r) + divisor(Place::infinity(), s);
  VerificationReport rep;
  fill_code_flags(rep, f, d, g, budgets);
  std::string note = "sigma is the semilinear Frobenius map; cyclicity comes from the shift test alone";
  if (r + s + 1 == n) note += "; k = n, the code is the full space";
  return {construct_ag_code(f, d, g), rep, d, g, note};
}

ExampleResult example_roots_of_unity(const GaloisField& f, unsigned n, int r, int s, const Budgets& budgets) {
  if (n < 2 || (f.size() - 1) % n != 0) {
    throw std::invalid_argument("n = " + std::to_string(n) + " must divide q - 1 = " + std::to_string(f.size() - 1));
  }
  if (r + s < 0 || r + s > static_cast<int>(n) - 2) {
    throw std::invalid_argument("need 0 <= r + s <= n - 2");
  }
  const Gf omega = find_element_of_order(f, n);
  const MobiusMap a(omega.inverse(), f.zero(), f.zero(), f.one());
  const std::vector<Place> d = orbit_places(orbit(a, ProjPoint(f.one())));
  const Divisor g = divisor(Place::rational(ProjPoint(f.zero())), r) + divisor(Place::infinity(), s);
  VerificationReport rep = verify_sigma_cyclic(a, d, g, budgets);
  return {construct_ag_code(f, d, g), rep, d, g, "sigma(x) = " + f.format(omega.inverse()) + " x"};
}

ExampleResult example_artin_schreier(const GaloisField& f, int s, const Budgets& budgets) {
  if (f.degree() < 2) throw std::invalid_argument("the Artin-Schreier example needs q = p^m with m >= 2");
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  const Gf alpha = f.element(f.characteristic());  // smallest code outside GF(p)
  const MobiusMap a(f.one(), -f.one(), f.zero(), f.one());
  const std::vector<Place> d = orbit_places(orbit(a, ProjPoint(alpha)));
  const Divisor g = divisor(Place::infinity(), s);
  VerificationReport rep = verify_sigma_cyclic(a, d, g, budgets);
  return {construct_ag_code(f, d, g), rep, d, g, "sigma(x) = x - 1, alpha = " + f.format(alpha)};
}

SigmaCodeSpec transport_beta_to_zero(const SigmaCodeSpec& spec) {
  if (spec.beta.is_infinity() || spec.beta.value().is_zero()) {
    throw SpecError(SpecError::Kind::kShape, "beta must be finite and nonzero");
  }
  validate(spec);
  const GaloisField& f = spec.a.field();
  const Gf beta = spec.beta.value();
  const MobiusMap shift(f.one(), -beta, f.zero(), f.one());  // t -> t - beta
  return {shift * spec.a * shift.inverse(), shift.apply(spec.alpha), ProjPoint(f.zero()), spec.r};
}

SigmaCodeSpec transport_zero_to_infinity(const SigmaCodeSpec& spec) {
  if (spec.beta != ProjPoint(spec.a.field().zero())) throw SpecError(SpecError::Kind::kShape, "beta must be 0");
  if (!spec.a.a().is_one() || !spec.a.b().is_zero()) {
    throw SpecError(SpecError::Kind::kShape, "A must have the form (1 0; c d)");
  }
  if (spec.alpha.is_finite() && spec.alpha.value().is_zero()) {
    throw SpecError(SpecError::Kind::kFixedSeed, "alpha = 0 has no inverse");
  }
  validate(spec);
  const GaloisField& f = spec.a.field();
  return {MobiusMap(spec.a.d(), spec.a.c(), f.zero(), f.one()), reciprocal(spec.alpha, f), ProjPoint::infinity(),
          spec.r};
}

GfMatrix standard_form_closed(const MobiusMap& m, const Gf& alpha, int r) {
  if (!m.is_upper_triangular() || m.is_identity()) {
    throw std::invalid_argument("A must be triangular (1 -b; 0 a) and not the identity");
  }
  const GaloisField& f = m.field();
  const ProjPoint seed(alpha.in(f));
  if (is_fixed(m, seed)) throw std::invalid_argument("alpha is fixed by A");
  const int n = static_cast<int>(pgl2_order(m));
  if (n < 3) throw std::invalid_argument("A must have order at least 3");
  if (r < 0 || r > n - 2) throw std::invalid_argument("need 0 <= r <= n - 2");
  const Gf a = m.d();
  const int k = r + 1;
  std::vector<Gf> sums(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) sums[static_cast<std::size_t>(t)] = geometric_sum(a, t);
  auto S = [&](int t) { return sums[static_cast<std::size_t>(t)]; };

  GfMatrix w(k, n - k);
  for (int i = 1; i <= k; ++i) {
    for (int j = k + 1; j <= n; ++j) {
      Gf v = a.pow(static_cast<long long>((k - i) * (k - i + 1) / 2));
      if ((k - i) % 2 == 1) v = -v;
      for (int s = 1; s < i; ++s) v *= S(j - s) / S(i - s);
      for (int s = i + 1; s <= k; ++s) v *= S(j - s) / S(s - i);
      w(i - 1, j - k - 1) = v;
    }
  }
  return w;
}

std::string to_string(Relation r) { return r == Relation::kEqual ? "EQUAL" : "EQUIVALENT"; }

SigmaCodeSpec canonical_spec(const GaloisField& f, unsigned n, int r) {
  const ProjPoint one(f.one());
  if (n == f.characteristic()) return {MobiusMap(f.one(), f.one(), f.zero(), f.one()), one, ProjPoint::infinity(), r};
  const Gf c = find_element_of_order(f, n);
  return {MobiusMap(f.one(), f.zero(), f.zero(), c), one, ProjPoint::infinity(), r};
}

CanonicalResult canonicalize(const SigmaCodeSpec& spec) {
  validate(spec);
  const GaloisField& f = spec.a.field();
  const auto n = static_cast<unsigned>(spec_orbit(spec).size());
  CanonicalResult out{spec, Relation::kEqual, identity_map(f, n), {}};
  SigmaCodeSpec& cur = out.canonical;

  if (cur.beta.is_finite() && !cur.beta.value().is_zero()) {
    cur = transport_beta_to_zero(cur);
    out.steps.push_back("translate beta to 0: " + to_string(cur) + " [EQUAL]");
  }
  if (cur.beta.is_finite()) {
    cur = transport_zero_to_infinity(cur);
    out.steps.push_back("invert x: " + to_string(cur) + " [EQUAL]");
  }
  // beta = inf, so A = (1 -b; 0 a) acts on the orbit affinely.
  const Gf a = cur.a.d();
  if (a.is_one()) {
    cur = canonical_spec(f, n, cur.r);
    out.steps.push_back("affine relabel: " + to_string(cur) + " [EQUAL]");
    return out;
  }
  cur = {MobiusMap(f.one(), f.zero(), f.zero(), a), ProjPoint(f.one()), ProjPoint::infinity(), cur.r};
  out.steps.push_back("affine relabel: " + to_string(cur) + " [EQUAL]");
  const SigmaCodeSpec target = canonical_spec(f, n, cur.r);
  const Gf c = target.a.d();
  if (c != a) {
    // a = c^e; the point a^i sits at position e·i mod n of the orbit of c.
    unsigned e = 1;
    for (Gf pw = c; pw != a; pw *= c) ++e;
    for (unsigned i = 0; i < n; ++i) out.witness.target[i] = static_cast<Eigen::Index>((e * i) % n);
    out.relation = Relation::kEquivalent;
    cur = target;
    out.steps.push_back("reorder orbit of " + f.format(a) + " as powers of " + f.format(c) + ": " + to_string(cur) +
                        " [EQUIVALENT]");
  }
  return out;
}

}  // namespace agc
