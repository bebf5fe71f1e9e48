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

#include "agc/poly.hpp"
#include "doctest.h"

using namespace agc;

TEST_SUITE("poly") {
  TEST_CASE("gcd") {
    const GaloisField& f = field_construct(5, 1);
    const Polynomial x = Polynomial::x(f);
    const Polynomial one = Polynomial::constant(f.one());
    CHECK(gcd(x * x - one, x - one) == x - one);
    CHECK(gcd(x * x + one, x).is_one());
    CHECK(gcd(Polynomial(f), Polynomial(f)).is_zero());
  }

  TEST_CASE("division") {
    const GaloisField& f = field_construct(7, 1);
    const Polynomial a(f, {f.integer(3), f.integer(1), f.integer(4), f.integer(2)});
    const Polynomial b(f, {f.integer(1), f.integer(5)});
    const auto [quo, rem] = divmod(a, b);
    CHECK(quo * b + rem == a);
    CHECK(rem.degree() < b.degree());
    CHECK_THROWS_AS(divmod(a, Polynomial(f)), std::domain_error);
  }

  TEST_CASE("the degree-2 place polynomial over GF(4) is irreducible") {
    const GaloisField& f = field_construct(2, 2, std::vector<unsigned>{1, 1, 1});
    const Gf b2 = f.generator() * f.generator();
    CHECK(is_irreducible(Polynomial(f, {b2, b2, f.one()})));
    CHECK(rabin_irreducible(Polynomial(f, {b2, b2, f.one()})));
  }

  TEST_CASE("roots of x^6 - 1 over GF(7)") {
    const GaloisField& f = field_construct(7, 1);
    const Polynomial p = Polynomial::monomial(f.one(), 6) - Polynomial::constant(f.one());
    std::vector<Gf> expected;
    for (int i = 1; i <= 6; ++i) expected.push_back(f.integer(i));
    CHECK(roots_in_fq(p) == expected);
  }

  TEST_CASE("trial division and Rabin agree on every small monic polynomial") {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
      const GaloisField& f = field_from_spec(std::to_string(q));
      for (unsigned d = 1; d <= (q <= 3 ? 5u : 3u); ++d) {
        for (const Polynomial& p : monic_polynomials(f, d)) CHECK(is_irreducible(p) == rabin_irreducible(p));
      }
    }
  }

  TEST_CASE("factorization multiplies back into irreducible factors") {
    for (unsigned q : {2u, 3u, 4u, 9u}) {
      const GaloisField& f = field_from_spec(std::to_string(q));
      for (unsigned d = 1; d <= (q <= 3 ? 6u : 3u); ++d) {
        for (const Polynomial& p : monic_polynomials(f, d)) {
          Polynomial prod = Polynomial::constant(f.one());
          for (const Factor& fa : factor(p)) {
            CHECK(is_irreducible(fa.factor));
            CHECK(fa.factor.leading().is_one());
            prod *= fa.factor.pow(static_cast<unsigned>(fa.multiplicity));
          }
          CHECK(prod == p);
        }
      }
    }
  }

  TEST_CASE("factoring x^q - x gives every linear factor once") {
    const GaloisField& f = field_construct(3, 2);
    const Polynomial p = Polynomial::monomial(f.one(), 9) - Polynomial::x(f);
    const auto fs = factor(p);
    CHECK(fs.size() == 9);
    for (const Factor& fa : fs) {
      CHECK(fa.factor.degree() == 1);
      CHECK(fa.multiplicity == 1);
    }
  }

  TEST_CASE("repeated factors in characteristic p") {
    const GaloisField& f = field_construct(2, 1);
    const Polynomial x1 = Polynomial::linear(f.one());
    const Polynomial q = Polynomial(f, {f.one(), f.one(), f.one()});
    const auto fs = factor(x1.pow(4) * q.pow(2));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == x1);
    CHECK(fs[0].multiplicity == 4);
    CHECK(fs[1].factor == q);
    CHECK(fs[1].multiplicity == 2);
  }
}
