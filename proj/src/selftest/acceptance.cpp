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

#include "agc/selftest.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "agc/fixedfield.hpp"
#include "agc/sigma.hpp"
#include "oracles.hpp"

namespace agc::selftest {

namespace {

// Tallies checks and keeps the first failure message.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checked_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    if (!ok) ++failed_;
  }
  bool pass() const { return failed_ == 0 && checked_ > 0; }
  std::string detail(const std::string& unit) const {
    std::ostringstream os;
    os << checked_ << " " << unit << ", " << failed_ << " failed";
    if (!first_failure_.empty()) os << "; first: " << first_failure_;
    return os.str();
  }

 private:
  long checked_ = 0;
  long failed_ = 0;
  std::string first_failure_;
};

const std::vector<unsigned> kFieldsUpTo9 = {2, 3, 4, 5, 7, 8, 9};
const std::vector<unsigned> kFieldsUpTo16 = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

const GaloisField& field_of(unsigned q) { return field_from_spec(std::to_string(q)); }

std::uint64_t power(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Every valid (A, alpha, beta, r) over f with orbit length n in [3, max_n].
std::vector<SigmaCodeSpec> sigma_specs(const GaloisField& f, unsigned max_n) {
  std::vector<SigmaCodeSpec> out;
  const auto line = projective_line(f);
  for (const MobiusMap& a : pgl2_elements(f)) {
    if (a.is_identity()) continue;
    const auto fixed = fixed_points(a);
    if (fixed.empty()) continue;
    for (const ProjPoint& alpha : line) {
      if (is_fixed(a, alpha)) continue;
      const auto n = static_cast<unsigned>(orbit(a, alpha).size());
      if (n < 3 || n > max_n) continue;
      for (const ProjPoint& beta : fixed) {
        for (int r = 1; r <= static_cast<int>(n) - 2; ++r) out.push_back({a, alpha, beta, r});
      }
    }
  }
  return out;
}

std::string where(const GaloisField& f, const std::string& what) {
  return "q=" + std::to_string(f.size()) + " " + what;
}

// Triangular (1 -b; 0 a) acts on finite points by t -> a t + b.
std::vector<Gf> affine_orbit(const Gf& a, const Gf& b, const Gf& alpha) {
  std::vector<Gf> out{alpha};
  for (Gf t = a * alpha + b; t != alpha; t = a * t + b) out.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------

CriterionResult example_4_2() {
  Tally t;
  const GaloisField& f = field_construct(2, 2, std::vector<unsigned>{1, 1, 1});
  const Gf beta = f.generator();
  const MobiusMap a(f.one(), f.one(), beta, f.zero());
  t.check(pgl2_order(a) == 5, "order of A is not 5");

  const std::vector<ProjPoint> expected = {ProjPoint(f.one()), ProjPoint(beta), ProjPoint(beta + f.one()),
                                           ProjPoint::infinity(), ProjPoint(f.zero())};
  const auto orb = orbit(a, ProjPoint(f.one()));
  t.check(orb == expected, "orbit of 1 differs from (1, b, b+1, inf, 0)");

  const Polynomial qpoly(f, {beta * beta, beta * beta, f.one()});
  t.check(is_irreducible(qpoly), "x^2 + b^2 x + b^2 is reducible");
  const Place q = Place::irreducible(qpoly);
  t.check(place_image(a, q) == q, "Q is not fixed");

  const std::vector<Place> d = orbit_places(orb);
  const Divisor g = divisor(q, 1);
  const LinearCode code = construct_ag_code(f, d, g);
  t.check(code.dimension() == 3, "dimension is not deg G + 1 = 3");
  t.check(is_cyclic(code), "code is not cyclic");
  t.check(oracle::cyclic(oracle::to_rows(code.generator())), "oracle: code is not cyclic");
  const VerificationReport rep = verify_sigma_cyclic(a, d, g);
  t.check(rep.all(), "verification report has a false flag");
  t.check(rep.n == 5 && rep.m == 5 && rep.k_iso == 1, "n, m, k differ from 5, 5, 1");
  return {1, "Order-5 map over GF(4) and its cyclic [5,3] code", t.pass(), t.detail("facts"), 0};
}

CriterionResult mds_parameters() {
  Tally t;
  for (unsigned q : {5u, 7u, 8u, 9u}) {
    const GaloisField& f = field_of(q);
    for (unsigned n = 3; n <= q - 1; ++n) {
      if ((q - 1) % n != 0) continue;
      const Gf omega = find_element_of_order(f, n);
      std::vector<Place> d;
      Gf x = f.one();
      for (unsigned i = 0; i < n; ++i, x *= omega) d.push_back(Place::rational(ProjPoint(x)));
      for (int total = 1; total <= static_cast<int>(n) - 2; ++total) {
        // r + s = total with r over a window that includes negative coefficients.
        for (int r = -2; r <= total + 2; ++r) {
          const int s = total - r;
          const Divisor g = divisor(Place::rational(ProjPoint(f.zero())), r) + divisor(Place::infinity(), s);
          const LinearCode code = construct_ag_code(f, d, g);
          const std::string tag = where(f, "n=" + std::to_string(n) + " r=" + std::to_string(r) + " s=" +
                                               std::to_string(s));
          t.check(code.dimension() == total + 1, tag + ": k != r+s+1");
          const int dist = min_distance(code);
          t.check(dist == static_cast<int>(n) - total, tag + ": d = " + std::to_string(dist));
          if (power(q, total + 1) <= 20000) {
            t.check(oracle::min_distance(f, oracle::to_rows(code.generator())) == dist, tag + ": oracle d differs");
          }
        }
      }
    }
  }
  return {2, "MDS parameters k = r+s+1, d = n-(r+s)", t.pass(), t.detail("checks"), 0};
}

CriterionResult triangular_order() {
  Tally t;
  for (unsigned q : kFieldsUpTo16) {
    const GaloisField& f = field_of(q);
    for (const Gf& a : f.elements()) {
      if (a.is_zero()) continue;
      for (const Gf& b : f.elements()) {
        const MobiusMap m(f.one(), -b, f.zero(), a);
        if (m.is_identity()) continue;
        // Oracle: the k-th power is t -> a^k t + b (1 + a + ... + a^{k-1}).
        unsigned k = 1;
        Gf ak = a, sum = f.one();
        while (!(ak.is_one() && (b * sum).is_zero())) {
          sum += ak;
          ak *= a;
          ++k;
        }
        const unsigned closed = order_triangular(m);
        t.check(closed == pgl2_order(m) && closed == k, where(f, "A=" + to_string(m)));
      }
    }
  }
  return {3, "Triangular order formula", t.pass(), t.detail("matrices"), 0};
}

CriterionResult orbit_differences() {
  Tally t;
  for (unsigned q : kFieldsUpTo9) {
    const GaloisField& f = field_of(q);
    for (const Gf& a : f.elements()) {
      if (a.is_zero()) continue;
      for (const Gf& b : f.elements()) {
        const MobiusMap m(f.one(), -b, f.zero(), a);
        if (m.is_identity()) continue;
        for (const Gf& alpha : f.elements()) {
          if (a * alpha + b == alpha) continue;
          const auto orb = affine_orbit(a, b, alpha);
          for (unsigned j = 2; j <= orb.size(); ++j) {
            for (unsigned i = 1; i < j; ++i) {
              t.check(orbit_difference(m, alpha, i, j) == orb[j - 1] - orb[i - 1],
                      where(f, "A=" + to_string(m) + " alpha=" + f.format(alpha)));
            }
          }
        }
      }
    }
  }
  return {4, "Orbit difference formula", t.pass(), t.detail("pairs"), 0};
}

CriterionResult closed_standard_form() {
  Tally t;
  for (unsigned q : {5u, 7u, 8u, 9u}) {
    const GaloisField& f = field_of(q);
    std::map<std::pair<std::uint32_t, int>, GfMatrix> by_a;  // (a, r) -> W
    for (const Gf& a : f.elements()) {
      if (a.is_zero()) continue;
      for (const Gf& b : f.elements()) {
        const MobiusMap m(f.one(), -b, f.zero(), a);
        if (m.is_identity()) continue;
        const int n = static_cast<int>(pgl2_order(m));
        if (n < 3) continue;
        Gf alpha = f.one();
        if (a * alpha + b == alpha) {
          for (const Gf& c : f.elements()) {
            if (a * c + b != c) {
              alpha = c;
              break;
            }
          }
        }
        const auto orb = affine_orbit(a, b, alpha);
        for (int r = 1; r <= n - 2; ++r) {
          const std::string tag = where(f, "A=" + to_string(m) + " r=" + std::to_string(r));
          GfMatrix vandermonde(r + 1, n);
          for (int e = 0; e <= r; ++e) {
            for (int j = 0; j < n; ++j) vandermonde(e, j) = orb[static_cast<std::size_t>(j)].pow(e);
          }
          const StandardForm sf = standard_form(LinearCode(f, vandermonde));
          const GfMatrix w = standard_form_closed(m, alpha, r);
          t.check(sf.identity_permutation() && sf.w == w, tag + ": closed form differs from elimination");
          const auto key = std::make_pair(a.code(), r);
          const auto it = by_a.find(key);
          if (it == by_a.end()) {
            by_a.emplace(key, w);
          } else {
            t.check(it->second == w, tag + ": W depends on b");
          }
        }
      }
    }
  }
  return {5, "Closed standard form (I | W)", t.pass(), t.detail("checks"), 0};
}

CriterionResult transports() {
  Tally t;
  for (unsigned q : kFieldsUpTo9) {
    const GaloisField& f = field_of(q);
    for (const SigmaCodeSpec& spec : sigma_specs(f, 8)) {
      if (spec.beta.is_infinity()) continue;
      const std::string tag = where(f, to_string(spec));
      const LinearCode before = construct_sigma_code(spec);
      if (!spec.beta.value().is_zero()) {
        const SigmaCodeSpec moved = transport_beta_to_zero(spec);
        const LinearCode after = construct_sigma_code(moved);
        t.check(codes_equal(before, after), tag + ": beta -> 0 changed the code");
        t.check(oracle::same_row_space(oracle::to_rows(before.generator()), oracle::to_rows(after.generator())),
                tag + ": oracle disagrees on beta -> 0");
      } else {
        const SigmaCodeSpec moved = transport_zero_to_infinity(spec);
        const LinearCode after = construct_sigma_code(moved);
        t.check(codes_equal(before, after), tag + ": 0 -> inf changed the code");
        t.check(oracle::same_row_space(oracle::to_rows(before.generator()), oracle::to_rows(after.generator())),
                tag + ": oracle disagrees on 0 -> inf");
        const auto old_orbit = spec_orbit(spec);
        const auto new_orbit = spec_orbit(moved);
        bool inverted = old_orbit.size() == new_orbit.size();
        for (std::size_t i = 0; inverted && i < old_orbit.size(); ++i) {
          inverted = new_orbit[i] == reciprocal(old_orbit[i], f);
        }
        t.check(inverted, tag + ": new orbit is not the pointwise inverse");
      }
    }
  }
  return {6, "Transports beta -> 0 -> inf keep the code", t.pass(), t.detail("transports"), 0};
}

CriterionResult canonical_forms() {
  Tally t;
  long oracle_checked = 0;
  for (unsigned q : {5u, 7u}) {
    const GaloisField& f = field_of(q);
    std::map<std::pair<int, int>, LinearCode> reference;  // (n, r) -> canonical code
    for (const SigmaCodeSpec& spec : sigma_specs(f, q + 1)) {
      const std::string tag = where(f, to_string(spec));
      const CanonicalResult res = canonicalize(spec);
      const LinearCode input = construct_sigma_code(spec);
      const LinearCode canon = construct_sigma_code(res.canonical);
      const auto n = static_cast<int>(input.length());
      t.check(codes_equal(LinearCode(f, res.witness.apply(input.generator())), canon), tag + ": witness fails");
      if (res.relation == Relation::kEqual) t.check(codes_equal(input, canon), tag + ": EQUAL but codes differ");
      const auto key = std::make_pair(n, spec.r);
      const auto it = reference.find(key);
      if (it == reference.end()) {
        reference.emplace(key, canon);
      } else {
        t.check(codes_equal(it->second, canon), tag + ": canonical code differs within (n, r)");
      }
      if (q == 5 && n == 4) {
        ++oracle_checked;
        t.check(oracle::monomially_equivalent(f, oracle::to_rows(input.generator()), oracle::to_rows(canon.generator())),
                tag + ": exhaustive monomial search finds no map");
      }
    }
  }
  return {7, "Canonical forms and monomial witnesses", t.pass(),
          t.detail("checks") + ", " + std::to_string(oracle_checked) + " exhaustive monomial searches", 0};
}

CriterionResult cyclicity() {
  Tally t, frob;
  auto both = [](Tally& tally, const LinearCode& c, const std::string& tag) {
    tally.check(is_cyclic(c), tag + ": not cyclic");
    tally.check(oracle::cyclic(oracle::to_rows(c.generator())), tag + ": oracle says not cyclic");
  };
  for (unsigned q : {4u, 5u, 7u, 8u, 9u}) {
    const GaloisField& f = field_of(q);
    for (const SigmaCodeSpec& spec : sigma_specs(f, 8)) {
      both(t, construct_sigma_code(spec), where(f, to_string(spec)));
      if (spec.beta.is_finite()) both(t, construct_sigma_code(spec, BasisChoice::kPolePowers), where(f, to_string(spec)));
    }
  }
  for (auto [p, m] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}}) {
    for (int total = 0; total < static_cast<int>(m); ++total) {
      for (int r = -1; r <= total + 1; ++r) {
        const int s = total - r;
        const ExampleResult ex = example_frobenius(p, m, r, s);
        const std::string tag = "frobenius (p, m, r, s) = (" + std::to_string(p) + ", " + std::to_string(m) + ", " +
                                std::to_string(r) + ", " + std::to_string(s) + ")";
        both(frob, ex.code, tag);
        frob.check(ex.report.all(), tag + ": report flag false");
      }
    }
  }
  for (unsigned q : kFieldsUpTo9) {
    const GaloisField& f = field_of(q);
    for (unsigned n = 2; n <= q - 1; ++n) {
      if ((q - 1) % n != 0) continue;
      for (int total = 0; total <= static_cast<int>(n) - 2; ++total) {
        for (int r = -1; r <= total + 1; ++r) {
          const ExampleResult ex = example_roots_of_unity(f, n, r, total - r);
          both(t, ex.code, where(f, "roots of unity n=" + std::to_string(n)));
          t.check(ex.report.all(), where(f, "roots of unity report flag false"));
        }
      }
    }
    if (f.degree() >= 2) {
      for (int s = 1; s <= static_cast<int>(f.characteristic()); ++s) {
        const ExampleResult ex = example_artin_schreier(f, s);
        both(t, ex.code, where(f, "artin-schreier s=" + std::to_string(s)));
        t.check(ex.report.all(), where(f, "artin-schreier report flag false"));
      }
    }
  }
  return {8, "Cyclicity of every constructed code", t.pass() && frob.pass(),
          "sigma/roots-of-unity/artin-schreier: " + t.detail("checks") + "; frobenius: " + frob.detail("checks"), 0};
}

CriterionResult fixed_fields() {
  Tally t;
  long generators = 0;
  for (unsigned q : kFieldsUpTo9) {
    const GaloisField& f = field_of(q);
    const auto line = projective_line(f);
    for (const MobiusMap& a : pgl2_elements(f)) {
      if (a.is_identity()) continue;
      ++generators;
      const std::string tag = where(f, "A=" + to_string(a));
      InvariantGenerator z{RationalFunction(f), 0, InvariantMethod::kTrace};
      try {
        z = invariant_generator(a);
      } catch (const DegenerateGenerator&) {
        t.check(false, tag + ": no invariant of degree m");
        continue;
      }
      t.check(z.z.degree() == static_cast<int>(pgl2_order(a)), tag + ": deg z != m");
      t.check(mobius_substitute(z.z, a) == z.z, tag + ": z is not invariant");
      for (const ProjPoint& pt : line) {
        const auto fiber = fiber_decomposition(z, pt);
        t.check(fiber_degree(fiber) == static_cast<int>(z.m), tag + ": fiber degree != m");
        // The factors must multiply back to the fiber polynomial.
        const Polynomial target = pt.is_infinity() ? z.z.denominator() : z.z.numerator() - pt.value() * z.z.denominator();
        Polynomial product = Polynomial::constant(target.leading());
        for (const FiberEntry& e : fiber) {
          if (e.place.is_infinity()) continue;
          product *= e.place.local_polynomial(f).pow(static_cast<unsigned>(e.e));
        }
        t.check(product == target, tag + ": fiber factors do not multiply back");
      }
      for (const ProjPoint& alpha : line) {
        if (is_fixed(a, alpha)) continue;
        t.check(splitting_report(a, alpha).ok(), tag + " alpha=" + to_string(alpha) + ": splitting fails");
      }
    }
  }
  return {9, "Fixed field generators and fibers", t.pass(),
          t.detail("checks") + " over " + std::to_string(generators) + " group elements", 0};
}

CriterionResult designed_distance() {
  Tally t;
  long codes = 0;
  auto check = [&](const LinearCode& c, int deg_g, const std::string& tag) {
    if (deg_g >= c.length() || c.dimension() == 0) return;
    ++codes;
    const auto& f = c.field();
    const int d = power(f.size(), static_cast<int>(c.dimension())) <= 5000
                      ? oracle::min_distance(f, oracle::to_rows(c.generator()))
                      : min_distance(c);
    t.check(d >= c.length() - deg_g, tag + ": d = " + std::to_string(d) + " < n - deg G");
  };
  // Roots-of-unity codes with mixed-sign coefficients.
  for (unsigned q : {5u, 7u, 8u, 9u}) {
    const GaloisField& f = field_of(q);
    for (unsigned n = 3; n <= q - 1; ++n) {
      if ((q - 1) % n != 0) continue;
      const Gf omega = find_element_of_order(f, n);
      std::vector<Place> d;
      Gf x = f.one();
      for (unsigned i = 0; i < n; ++i, x *= omega) d.push_back(Place::rational(ProjPoint(x)));
      for (int total = 0; total <= static_cast<int>(n) - 2; ++total) {
        for (int r = -2; r <= total + 2; ++r) {
          const Divisor g = divisor(Place::rational(ProjPoint(f.zero())), r) + divisor(Place::infinity(), total - r);
          check(construct_ag_code(f, d, g), total, where(f, "D roots of unity G=" + to_string(g)));
        }
      }
    }
  }
  // The order-5 map over GF(4) with G = r Q.
  {
    const GaloisField& f = field_construct(2, 2, std::vector<unsigned>{1, 1, 1});
    const Gf beta = f.generator();
    const MobiusMap a(f.one(), f.one(), beta, f.zero());
    const Place q = Place::irreducible(Polynomial(f, {beta * beta, beta * beta, f.one()}));
    for (int r = 0; 2 * r < 5; ++r) {
      check(construct_ag_code(f, orbit_places(orbit(a, ProjPoint(f.one()))), divisor(q, r)), 2 * r,
            "example 4.2 r=" + std::to_string(r));
    }
  }
  // Named examples.
  for (auto [p, m] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}}) {
    for (int r = 0; r < static_cast<int>(m); ++r) {
      for (int s = 0; r + s < static_cast<int>(m); ++s) {
        const ExampleResult ex = example_frobenius(p, m, r, s);
        check(ex.code, ex.g.degree(), "frobenius");
      }
    }
  }
  for (unsigned q : kFieldsUpTo9) {
    const GaloisField& f = field_of(q);
    if (f.degree() < 2) continue;
    for (int s = 1; s < static_cast<int>(f.characteristic()); ++s) {
      const ExampleResult ex = example_artin_schreier(f, s);
      check(ex.code, ex.g.degree(), where(f, "artin-schreier"));
    }
  }
  // Sigma codes; q = 8, 9 only where q^k stays small.
  for (unsigned q : {4u, 5u, 7u, 8u, 9u}) {
    const GaloisField& f = field_of(q);
    for (const SigmaCodeSpec& spec : sigma_specs(f, q + 1)) {
      if (q >= 8 && power(q, spec.r + 1) > 100000) continue;
      check(construct_sigma_code(spec), spec.r, where(f, to_string(spec)));
    }
  }
  return {10, "Designed distance d >= n - deg G", t.pass(),
          t.detail("checks") + " over " + std::to_string(codes) + " codes", 0};
}

using Runner = CriterionResult (*)();
const std::vector<Runner> kRunners = {example_4_2,    mds_parameters,  triangular_order, orbit_differences,
                                      closed_standard_form, transports, canonical_forms, cyclicity,
                                      fixed_fields,   designed_distance};

}  // namespace

int criterion_count() { return static_cast<int>(kRunners.size()); }

CriterionResult run_criterion(int id) {
  if (id < 1 || id > criterion_count()) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = kRunners[static_cast<std::size_t>(id - 1)]();
  } catch (const std::exception& e) {
    r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count(); ++id) {
    out.push_back(run_criterion(id));
    if (progress) progress(out.back());
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " (" << r.detail << ", ";
  os.precision(2);
  os << std::fixed << r.seconds << " s)";
  return os.str();
}

}  // namespace agc::selftest
