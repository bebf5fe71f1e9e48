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

#include "agc/fixedfield.hpp"
#include "doctest.h"

using namespace agc;

TEST_SUITE("fixedfield") {
  TEST_CASE("translation: the trace vanishes, the norm is x^p - x") {
    const GaloisField& f = field_construct(5, 1);
    const InvariantGenerator g = invariant_generator(MobiusMap(f.one(), f.one(), f.zero(), f.one()));
    CHECK(g.m == 5);
    CHECK(g.method == InvariantMethod::kNorm);
    CHECK(g.z == RationalFunction(Polynomial(f, {f.zero(), -f.one(), f.zero(), f.zero(), f.zero(), f.one()})));
    CHECK(to_string(g.method) == "norm");
  }

  TEST_CASE("scaling gives a multiple of x^n") {
    const GaloisField& f = field_construct(7, 1);
    const Gf c = find_element_of_order(f, 6);
    const InvariantGenerator g = invariant_generator(MobiusMap(f.one(), f.zero(), f.zero(), c));
    CHECK(g.m == 6);
    CHECK(g.method == InvariantMethod::kNorm);
    CHECK(g.z.denominator().is_one());
    const Polynomial& num = g.z.numerator();
    CHECK(num == Polynomial::monomial(num.leading(), 6));
  }

  TEST_CASE("inversion uses the trace x + 1/x") {
    const GaloisField& f = field_construct(5, 1);
    const InvariantGenerator g = invariant_generator(MobiusMap(f.zero(), f.one(), f.one(), f.zero()));
    CHECK(g.m == 2);
    CHECK(g.method == InvariantMethod::kTrace);
    const RationalFunction x = RationalFunction::x(f);
    CHECK(g.z == x + x.pow(-1));
  }

  TEST_CASE("the generator is invariant and has degree m") {
    for (unsigned q : {4u, 7u, 9u}) {
      const GaloisField& f = field_from_spec(std::to_string(q));
      for (const MobiusMap& a : pgl2_elements(f)) {
        if (a.is_identity()) continue;
        const InvariantGenerator g = invariant_generator(a);
        CHECK(g.m == pgl2_order(a));
        CHECK(g.z.degree() == static_cast<int>(g.m));
        CHECK(mobius_substitute(g.z, a) == g.z);
      }
    }
  }

  TEST_CASE("fibers of x^6 over GF(7)") {
    const GaloisField& f = field_construct(7, 1);
    const Gf c = find_element_of_order(f, 6);
    const InvariantGenerator g = invariant_generator(MobiusMap(f.one(), f.zero(), f.zero(), c));

    const auto zero = fiber_decomposition(g, ProjPoint(f.zero()));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].place == Place::rational(ProjPoint(f.zero())));
    CHECK(zero[0].e == 6);

    const auto inf = fiber_decomposition(g, ProjPoint::infinity());
    REQUIRE(inf.size() == 1);
    CHECK(inf[0].place.is_infinity());
    CHECK(inf[0].e == 6);

    const ProjPoint t = evaluate_projective(g.z, ProjPoint(f.one()));
    const auto split = fiber_decomposition(g, t);
    CHECK(split.size() == 6);
    for (const auto& e : split) CHECK(e.e == 1);
    CHECK(fiber_degree(split) == 6);
  }

  TEST_CASE("x^3 over GF(4): a split fiber and one with inert places") {
    const GaloisField& f = field_construct(2, 2);
    const MobiusMap a(f.one(), f.zero(), f.zero(), f.generator());
    const InvariantGenerator g = invariant_generator(a);
    CHECK(g.m == 3);
    const auto over_one = fiber_decomposition(g, evaluate_projective(g.z, ProjPoint(f.one())));
    CHECK(over_one.size() == 3);
    // Over a non-cube, x^3 - t has no roots and is irreducible of degree 3.
    for (const Gf& t : f.elements()) {
      if (t.is_zero()) continue;
      const auto fib = fiber_decomposition(g, ProjPoint(t));
      CHECK(fiber_degree(fib) == 3);
    }
  }

  TEST_CASE("orbits are exactly the splitting fibers") {
    for (unsigned q : {5u, 8u}) {
      const GaloisField& f = field_from_spec(std::to_string(q));
      for (const MobiusMap& a : pgl2_elements(f)) {
        if (a.is_identity()) continue;
        for (const ProjPoint& alpha : projective_line(f)) {
          if (is_fixed(a, alpha)) continue;
          const SplittingReport rep = splitting_report(a, alpha);
          CHECK(rep.ok());
          CHECK(rep.orbit == orbit(a, alpha));
        }
      }
    }
  }
}
