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
#include "doctest.h"

using namespace agc;

namespace {

GfMatrix powers_generator(const std::vector<ProjPoint>& orb, int k) {
  GfMatrix m(k, static_cast<Eigen::Index>(orb.size()));
  for (int e = 0; e < k; ++e) {
    for (std::size_t j = 0; j < orb.size(); ++j) m(e, static_cast<Eigen::Index>(j)) = orb[j].value().pow(e);
  }
  return m;
}

// Every (A, alpha, beta, r) over f with a moving alpha, a fixed beta and 1 <= r <= n - 2.
std::vector<SigmaCodeSpec> all_specs(const GaloisField& f, int r_max) {
  std::vector<SigmaCodeSpec> out;
  for (const MobiusMap& a : pgl2_elements(f)) {
    const auto fixed = fixed_points(a);
    if (fixed.empty()) continue;
    for (const ProjPoint& alpha : projective_line(f)) {
      if (is_fixed(a, alpha)) continue;
      const int n = static_cast<int>(orbit(a, alpha).size());
      for (const ProjPoint& beta : fixed) {
        for (int r = 1; r <= std::min(n - 2, r_max); ++r) out.push_back({a, alpha, beta, r});
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("sigma") {
  TEST_CASE("spec validation names the violated condition") {
    const GaloisField& f = field_construct(5, 1);
    const MobiusMap a(f.one(), f.zero(), f.zero(), f.integer(2));
    const ProjPoint inf = ProjPoint::infinity();
    auto kind_of = [](const SigmaCodeSpec& s) {
      try {
        validate(s);
      } catch (const SpecError& e) {
        return static_cast<int>(e.kind());
      }
      return -1;
    };
    CHECK(kind_of({a, ProjPoint(f.one()), inf, 1}) == -1);
    CHECK(kind_of({a, ProjPoint(f.zero()), inf, 1}) == static_cast<int>(SpecError::Kind::kFixedSeed));
    CHECK(kind_of({MobiusMap::identity(f), ProjPoint(f.one()), inf, 1}) ==
          static_cast<int>(SpecError::Kind::kFixedSeed));
    CHECK(kind_of({a, ProjPoint(f.one()), ProjPoint(f.one()), 1}) == static_cast<int>(SpecError::Kind::kMovingBeta));
    CHECK(kind_of({a, ProjPoint(f.one()), inf, 0}) == static_cast<int>(SpecError::Kind::kRangeR));
    CHECK(kind_of({a, ProjPoint(f.one()), inf, 3}) == static_cast<int>(SpecError::Kind::kRangeR));
    CHECK(to_string(SigmaCodeSpec{a, ProjPoint(f.one()), inf, 2}) == "C(1,0;0,2, 1, inf, 2)");
  }

  TEST_CASE("construct_ag_code rejects bad divisors") {
    const GaloisField& f = field_construct(5, 1);
    const Place p1 = Place::rational(ProjPoint(f.one()));
    const Place p2 = Place::rational(ProjPoint(f.integer(2)));
    const Place inf = Place::infinity();
    const Place quad = Place::irreducible(Polynomial(f, {f.integer(2), f.zero(), f.one()}));
    CHECK_THROWS_AS(construct_ag_code(f, {p1, quad}, divisor(inf, 1)), std::invalid_argument);
    CHECK_THROWS_AS(construct_ag_code(f, {p1, p1}, divisor(inf, 1)), std::invalid_argument);
    CHECK_THROWS_AS(construct_ag_code(f, {p1, p2}, divisor(p2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(construct_ag_code(f, {p1, p2}, divisor(inf, -1)), std::invalid_argument);
    CHECK_THROWS_AS(construct_ag_code(f, {}, divisor(inf, 1)), std::invalid_argument);
    const LinearCode c = construct_ag_code(f, {p1, p2}, divisor(quad, 1));
    CHECK(c.length() == 2);
    CHECK(c.dimension() == 2);
  }

  TEST_CASE("a primitive scaling gives a cyclic MDS code of length q - 1") {
    const GaloisField& f = field_construct(7, 1);
    const SigmaCodeSpec spec{MobiusMap(f.one(), f.zero(), f.zero(), f.integer(3)), ProjPoint(f.one()),
                             ProjPoint::infinity(), 2};
    const LinearCode c = construct_sigma_code(spec);
    CHECK(c.length() == 6);
    CHECK(c.dimension() == 3);
    CHECK(min_distance(c) == 4);
    CHECK(is_cyclic(c));
    CHECK(codes_equal(c, LinearCode(f, powers_generator(spec_orbit(spec), 3))));
    CHECK_THROWS_AS(construct_sigma_code(spec, BasisChoice::kPolePowers), std::invalid_argument);
  }

  TEST_CASE("both bases give the same code") {
    const GaloisField& f = field_construct(5, 1);
    for (const SigmaCodeSpec& s : all_specs(f, 3)) {
      if (s.beta.is_infinity()) continue;
      CHECK(codes_equal(construct_sigma_code(s), construct_sigma_code(s, BasisChoice::kPolePowers)));
    }
  }

  TEST_CASE("verification of an invariant configuration") {
    const GaloisField& f = field_construct(7, 1);
    const MobiusMap a(f.one(), f.zero(), f.zero(), f.integer(2));  // order 3
    const auto d = orbit_places(orbit(a, ProjPoint(f.one())));
    const VerificationReport ok = verify_sigma_cyclic(a, d, divisor(Place::infinity(), 1));
    CHECK(ok.all());
    CHECK(ok.hypotheses());
    CHECK(ok.n == 3);
    CHECK(ok.m == 3);
    CHECK(ok.k_iso == 1);
    CHECK(ok.dimension == 2);
    CHECK(ok.distance == 2);

    const VerificationReport moved = verify_sigma_cyclic(a, d, divisor(Place::rational(ProjPoint(f.integer(3))), 1));
    CHECK(moved.g_invariant == false);
    CHECK_FALSE(moved.hypotheses());
    CHECK_FALSE(moved.all());
  }

  TEST_CASE("named families") {
    const ExampleResult r7 = example_roots_of_unity(field_construct(7, 1), 6, 1, 1);
    CHECK(r7.code.length() == 6);
    CHECK(r7.code.dimension() == 3);
    CHECK(r7.report.distance == 4);
    CHECK(r7.report.all());

    const ExampleResult r4 = example_roots_of_unity(field_construct(2, 2), 3, 1, 0);
    CHECK(r4.code.length() == 3);
    CHECK(r4.code.dimension() == 2);
    CHECK(r4.report.distance == 2);
    CHECK(r4.report.all());
    CHECK_THROWS_AS(example_roots_of_unity(field_construct(7, 1), 4, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(example_roots_of_unity(field_construct(7, 1), 6, 3, 2), std::invalid_argument);

    const ExampleResult as = example_artin_schreier(field_construct(3, 2), 2);
    CHECK(as.code.length() == 3);
    CHECK(as.code.dimension() == 3);
    CHECK(as.report.all());
    CHECK(example_artin_schreier(field_construct(3, 2), 1).code.dimension() == 2);
    CHECK_THROWS_AS(example_artin_schreier(field_construct(5, 1), 1), std::invalid_argument);
  }

  TEST_CASE("Frobenius conjugates do not give a cyclic code in general") {
    // Over GF(8), G = P_0: the code spanned by (1,1,1) and the inverses of the
    // conjugates is mapped to its Frobenius twist by the shift, not to itself.
    const ExampleResult e = example_frobenius(2, 3, 1, 0);
    CHECK(e.code.length() == 3);
    CHECK(e.code.dimension() == 2);
    CHECK_FALSE(e.report.shift_condition.has_value());
    CHECK_FALSE(e.report.code_cyclic);

    const ExampleResult full = example_frobenius(2, 3, 1, 1);
    CHECK(full.code.dimension() == 3);
    CHECK(full.report.code_cyclic);
    CHECK(example_frobenius(2, 3, 0, 0).report.code_cyclic);
    CHECK_THROWS_AS(example_frobenius(2, 3, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(example_frobenius(5, 1, 0, 0), std::invalid_argument);
  }

  TEST_CASE("transports keep the code") {
    const GaloisField& f = field_construct(5, 1);
    for (const SigmaCodeSpec& s : all_specs(f, 2)) {
      if (s.beta.is_infinity()) continue;
      const LinearCode c = construct_sigma_code(s);
      SigmaCodeSpec t = s;
      if (!s.beta.value().is_zero()) {
        t = transport_beta_to_zero(s);
        CHECK(t.beta == ProjPoint(f.zero()));
        CHECK(codes_equal(c, construct_sigma_code(t)));
      }
      if (!t.a.a().is_one() || !t.a.b().is_zero() || t.alpha == ProjPoint(f.zero())) continue;
      const SigmaCodeSpec u = transport_zero_to_infinity(t);
      CHECK(u.beta.is_infinity());
      CHECK(codes_equal(c, construct_sigma_code(u)));
    }
    const SigmaCodeSpec bad{MobiusMap(f.one(), f.zero(), f.zero(), f.integer(2)), ProjPoint(f.one()),
                            ProjPoint::infinity(), 1};
    CHECK_THROWS_AS(transport_beta_to_zero(bad), SpecError);
    CHECK_THROWS_AS(transport_zero_to_infinity(bad), SpecError);
  }

  TEST_CASE("closed standard form matches elimination") {
    for (unsigned q : {5u, 7u, 8u, 9u}) {
      const GaloisField& f = field_from_spec(std::to_string(q));
      for (const Gf& a : f.elements()) {
        if (a.is_zero()) continue;
        for (const Gf& b : f.elements()) {
          const MobiusMap m(f.one(), -b, f.zero(), a);
          if (m.is_identity() || pgl2_order(m) < 3) continue;
          for (const Gf& alpha : f.elements()) {
            if (is_fixed(m, ProjPoint(alpha))) continue;
            const auto orb = orbit(m, ProjPoint(alpha));
            const int n = static_cast<int>(orb.size());
            for (int r = 0; r <= n - 2; r += 2) {
              const StandardForm sf = standard_form(LinearCode(f, powers_generator(orb, r + 1)));
              REQUIRE(sf.identity_permutation());
              CHECK(standard_form_closed(m, alpha, r) == sf.w);
            }
          }
        }
      }
    }
  }

  TEST_CASE("canonical representatives") {
    const GaloisField& f = field_construct(5, 1);
    const ProjPoint inf = ProjPoint::infinity();
    const Gf c = find_element_of_order(f, 4);

    const CanonicalResult same = canonicalize({MobiusMap(f.one(), f.zero(), f.zero(), c), ProjPoint(f.integer(3)), inf, 1});
    CHECK(same.relation == Relation::kEqual);
    CHECK(same.canonical.a == canonical_spec(f, 4, 1).a);

    const Gf other = c.pow(3);
    const CanonicalResult eq = canonicalize({MobiusMap(f.one(), f.zero(), f.zero(), other), ProjPoint(f.one()), inf, 2});
    CHECK(eq.relation == Relation::kEquivalent);
    CHECK(to_string(eq.relation) == "EQUIVALENT");
    CHECK_FALSE(eq.steps.empty());

    const CanonicalResult tr = canonicalize({MobiusMap(f.one(), f.integer(3), f.zero(), f.one()), ProjPoint(f.zero()), inf, 1});
    CHECK(tr.relation == Relation::kEqual);
    CHECK(tr.canonical.a == MobiusMap(f.one(), f.one(), f.zero(), f.one()));
  }

  TEST_CASE("canonicalize witnesses hold for every spec over GF(5) and GF(4)") {
    for (const GaloisField* f : {&field_construct(5, 1), &field_construct(2, 2)}) {
      for (const SigmaCodeSpec& s : all_specs(*f, 3)) {
        const CanonicalResult res = canonicalize(s);
        const LinearCode input = construct_sigma_code(s);
        const LinearCode canon = construct_sigma_code(res.canonical);
        CHECK(codes_equal(LinearCode(*f, res.witness.apply(input.generator())), canon));
        if (res.relation == Relation::kEqual) CHECK(codes_equal(input, canon));
        CHECK(res.witness.is_permutation());
      }
    }
  }
}
