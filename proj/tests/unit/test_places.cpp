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

#include "agc/linalg.hpp"
#include "agc/places.hpp"
#include "doctest.h"

using namespace agc;

namespace {

const GaloisField& gf4() { return field_construct(2, 2, std::vector<unsigned>{1, 1, 1}); }

RationalFunction poly(const GaloisField& f, std::vector<Gf> c) { return RationalFunction(Polynomial(f, std::move(c))); }

// Rank of the evaluation matrix of `fs` on all finite points not in `skip`.
Eigen::Index span_rank(const GaloisField& f, const std::vector<RationalFunction>& fs, const Divisor& skip) {
  std::vector<Place> pts;
  for (const Gf& a : f.elements()) {
    const Place p = Place::rational(ProjPoint(a));
    if (skip.coefficient(p) == 0) pts.push_back(p);
  }
  GfMatrix m(static_cast<Eigen::Index>(fs.size()), static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = evaluate_at_place(fs[i], pts[j]);
    }
  }
  return rank(m);
}

}  // namespace

TEST_SUITE("rfield") {
  TEST_CASE("rational functions are kept in lowest terms") {
    const GaloisField& f = field_construct(5, 1);
    const Polynomial x = Polynomial::x(f);
    const Polynomial one = Polynomial::constant(f.one());
    const RationalFunction r((x * x - one) * Polynomial::constant(f.integer(3)), (x - one) * Polynomial::constant(f.integer(2)));
    CHECK(r.denominator().is_one());
    CHECK(r.numerator() == Polynomial::constant(f.integer(4)) * (x + one));
    CHECK(r - r == RationalFunction(f));
    CHECK_THROWS_AS(RationalFunction(x, Polynomial(f)), std::domain_error);
  }

  TEST_CASE("substitution by an order-3 map over GF(4)") {
    const GaloisField& f = gf4();
    const Gf b = f.generator();
    const Gf b2 = b * b;
    const MobiusMap a(f.one(), f.one(), b, f.zero());
    const Polynomial q(f, {b2, b2, f.one()});
    const RationalFunction expected(b2 * q, Polynomial::monomial(f.one(), 2));
    CHECK(mobius_substitute(RationalFunction(q), a) == expected);
    CHECK(mobius_substitute(RationalFunction::x(f), MobiusMap::identity(f)) == RationalFunction::x(f));
    const GaloisField& f5 = field_construct(5, 1);
    const MobiusMap shift(f5.one(), -f5.one(), f5.zero(), f5.one());
    const Gf alpha = f5.integer(2);
    CHECK(mobius_substitute(RationalFunction(Polynomial::linear(alpha)), shift) ==
          RationalFunction(Polynomial::linear(alpha + f5.one())));
  }

  TEST_CASE("substitution respects composition") {
    const GaloisField& f = field_construct(3, 1);
    const auto all = pgl2_elements(f);
    const RationalFunction z = poly(f, {f.one(), f.zero(), f.integer(2)}) / poly(f, {f.integer(2), f.one()});
    for (std::size_t i = 0; i < all.size(); i += 3) {
      for (std::size_t j = 0; j < all.size(); j += 5) {
        // sigma_A(sigma_B(z)) = z(B·(A·x)) = z((B A)·x)
        CHECK(mobius_substitute(mobius_substitute(z, all[j]), all[i]) == mobius_substitute(z, all[j] * all[i]));
      }
    }
  }

  TEST_CASE("place images") {
    const GaloisField& f = gf4();
    const Gf b = f.generator();
    const MobiusMap a(f.one(), f.one(), b, f.zero());
    const Place q = Place::irreducible(Polynomial(f, {b * b, b * b, f.one()}));
    CHECK(place_image(a, q) == q);
    CHECK(place_image(MobiusMap::identity(f), q) == q);
    const GaloisField& f5 = field_construct(5, 1);
    const MobiusMap shift(f5.one(), -f5.one(), f5.zero(), f5.one());
    CHECK(place_image(shift, Place::rational(ProjPoint(f5.zero()))) == Place::rational(ProjPoint(f5.one())));
  }

  TEST_CASE("place images compose in reverse order and keep degrees") {
    const GaloisField& f = field_construct(3, 1);
    const auto all = pgl2_elements(f);
    std::vector<Place> places;
    for (const ProjPoint& t : projective_line(f)) places.push_back(Place::rational(t));
    places.push_back(Place::irreducible(Polynomial(f, {f.one(), f.zero(), f.one()})));
    places.push_back(Place::irreducible(Polynomial(f, {f.one(), f.integer(2), f.zero(), f.one()})));
    for (std::size_t i = 0; i < all.size(); i += 2) {
      for (std::size_t j = 0; j < all.size(); j += 3) {
        for (const Place& p : places) {
          CHECK(place_image(all[i] * all[j], p) == place_image(all[j], place_image(all[i], p)));
          CHECK(place_image(all[i], p).degree() == p.degree());
        }
      }
    }
  }

  TEST_CASE("values are carried along: sigma(f)(sigma(P)) = f(P)") {
    const GaloisField& f = field_construct(5, 1);
    const RationalFunction z = poly(f, {f.integer(3), f.one(), f.one()}) / poly(f, {f.integer(2), f.one()});
    for (const MobiusMap& a : pgl2_elements(f)) {
      const RationalFunction sz = mobius_substitute(z, a);
      for (const ProjPoint& t : projective_line(f)) {
        const Place p = Place::rational(t);
        CHECK(evaluate_projective(sz, place_image(a, p).point()) == evaluate_projective(z, t));
      }
    }
  }

  TEST_CASE("valuations and principal divisors") {
    const GaloisField& f = field_construct(5, 1);
    const Polynomial x = Polynomial::x(f);
    const RationalFunction z(x * x * (x - Polynomial::constant(f.one())), (x + Polynomial::constant(f.one())).pow(4));
    CHECK(valuation(z, Place::rational(ProjPoint(f.zero()))) == 2);
    CHECK(valuation(z, Place::rational(ProjPoint(f.integer(4)))) == -4);
    CHECK(valuation(z, Place::infinity()) == 1);
    CHECK(principal_divisor(z).degree() == 0);
  }

  TEST_CASE("evaluation at places") {
    const GaloisField& f = field_construct(5, 1);
    CHECK(evaluate_at_place(RationalFunction::x(f), Place::rational(ProjPoint(f.integer(3)))) == f.integer(3));
    const RationalFunction inv(Polynomial::constant(f.one()), Polynomial::linear(f.integer(2)).pow(2));
    CHECK(evaluate_at_place(inv, Place::infinity()).is_zero());
    CHECK(evaluate_at_place(poly(f, {f.one(), f.one()}) / poly(f, {f.integer(2), f.one()}), Place::infinity()) == f.one());
    CHECK_THROWS_AS(evaluate_at_place(RationalFunction::x(f), Place::infinity()), PoleError);
    CHECK_THROWS_AS(evaluate_at_place(inv, Place::rational(ProjPoint(f.integer(2)))), PoleError);
    const Place q = Place::irreducible(Polynomial(f, {f.integer(2), f.zero(), f.one()}));
    CHECK_THROWS_AS(evaluate_at_place(RationalFunction::x(f), q), std::invalid_argument);
  }

  TEST_CASE("Riemann-Roch bases") {
    const GaloisField& f = field_construct(7, 1);
    const Place p0 = Place::rational(ProjPoint(f.zero()));
    const Place inf = Place::infinity();

    const auto poly_basis = rr_basis(f, divisor(inf, 3));
    REQUIRE(poly_basis.size() == 4);
    for (unsigned t = 0; t < 4; ++t) CHECK(poly_basis[t] == RationalFunction(Polynomial::monomial(f.one(), t)));

    const Divisor g = divisor(p0, 2) + divisor(inf, 1);
    const auto basis = rr_basis(f, g);
    REQUIRE(basis.size() == 4);
    const RationalFunction x = RationalFunction::x(f);
    CHECK(basis[0] == x.pow(-2));
    CHECK(basis[1] == x.pow(-1));
    CHECK(basis[2] == RationalFunction::constant(f.one()));
    CHECK(basis[3] == x);
    for (const auto& z : basis) CHECK(in_riemann_roch_space(z, g));
    CHECK_FALSE(in_riemann_roch_space(x.pow(2), g));

    CHECK(rr_basis(f, divisor(p0, -1)).empty());
  }

  TEST_CASE("L(Q) for the degree-2 place spans 1/q, x/q, 1") {
    const GaloisField& f = gf4();
    const Gf b2 = f.generator() * f.generator();
    const Polynomial q(f, {b2, b2, f.one()});
    const Divisor g = divisor(Place::irreducible(q), 1);
    const auto basis = rr_basis(f, g);
    REQUIRE(basis.size() == 3);
    const RationalFunction iq(Polynomial::constant(f.one()), q);
    const std::vector<RationalFunction> listed = {iq, RationalFunction::x(f) * iq, RationalFunction::constant(f.one())};
    for (const auto& z : basis) CHECK(in_riemann_roch_space(z, g));
    auto both = basis;
    both.insert(both.end(), listed.begin(), listed.end());
    CHECK(span_rank(f, basis, g) == 3);
    CHECK(span_rank(f, both, g) == 3);
  }

  TEST_CASE("the 1/(x - beta) basis") {
    const GaloisField& f7 = field_construct(7, 1);
    const RationalFunction x = RationalFunction::x(f7);
    const auto b0 = rr_basis_pole_powers(f7.zero(), 2);
    REQUIRE(b0.size() == 3);
    CHECK(b0[0] == RationalFunction::constant(f7.one()));
    CHECK(b0[1] == x.pow(-1));
    CHECK(b0[2] == x.pow(-2));

    const GaloisField& f4 = gf4();
    const Gf beta = f4.generator();
    const auto b1 = rr_basis_pole_powers(beta, 1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[1] == RationalFunction(Polynomial::constant(f4.one()), Polynomial::linear(beta)));

    const Gf three = f7.integer(3);
    const Divisor g = divisor(Place::rational(ProjPoint(three)), 2);
    auto both = rr_basis(f7, g);
    const auto shifted = rr_basis_pole_powers(three, 2);
    both.insert(both.end(), shifted.begin(), shifted.end());
    CHECK(span_rank(f7, shifted, g) == 3);
    CHECK(span_rank(f7, both, g) == 3);
  }

  TEST_CASE("divisor text round trip") {
    const GaloisField& f = gf4();
    const Divisor g = parse_divisor(f, "2*a=0 + 1*inf + -1*a=b+1 + poly:b+1,b+1,1");
    CHECK(g.coefficient(Place::rational(ProjPoint(f.zero()))) == 2);
    CHECK(g.coefficient(Place::infinity()) == 1);
    CHECK(g.coefficient(Place::rational(ProjPoint(f.generator() + f.one()))) == -1);
    CHECK(g.degree() == 4);
    CHECK(parse_divisor(f, to_string(g)) == g);
    CHECK(to_string(Divisor()) == "0");
    CHECK_THROWS(parse_divisor(f, "2*a=0 + x*inf"));
    CHECK_THROWS(parse_place(f, "poly:1,0,1"));  // x^2 + 1 = (x + 1)^2
  }
}
