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

#include <set>

#include "agc/pgl2.hpp"
#include "doctest.h"

using namespace agc;

namespace {

const GaloisField& gf4() { return field_construct(2, 2, std::vector<unsigned>{1, 1, 1}); }
MobiusMap example_matrix() { return MobiusMap(gf4().one(), gf4().one(), gf4().generator(), gf4().zero()); }

std::vector<ProjPoint> points(const GaloisField& f, std::initializer_list<int> values) {
  std::vector<ProjPoint> out;
  for (int v : values) out.emplace_back(f.integer(v));
  return out;
}

}  // namespace

TEST_SUITE("pgl2") {
  TEST_CASE("normalization and singular matrices") {
    const GaloisField& f = field_construct(5, 1);
    const MobiusMap a(f.integer(2), f.integer(4), f.integer(0), f.integer(2));
    CHECK(a == MobiusMap(f.one(), f.integer(2), f.zero(), f.one()));
    CHECK_THROWS_AS(MobiusMap(f.one(), f.integer(2), f.integer(2), f.integer(4)), std::invalid_argument);
    CHECK(parse_matrix(f, "2,4;0,2") == a);
  }

  TEST_CASE("inverse action follows the case table") {
    const auto a = example_matrix();
    const Gf b = gf4().generator();
    CHECK(mobius_apply_inverse(a, ProjPoint(gf4().one())) == ProjPoint(b));
    CHECK(a.apply_inverse(ProjPoint(b * b)) == ProjPoint::infinity());
    CHECK(a.apply_inverse(ProjPoint::infinity()) == ProjPoint(gf4().zero()));
    const GaloisField& f5 = field_construct(5, 1);
    CHECK(MobiusMap(f5.one(), f5.zero(), f5.zero(), f5.integer(2)).apply_inverse(ProjPoint(f5.one())) ==
          ProjPoint(f5.integer(2)));
    for (const ProjPoint& t : projective_line(f5)) CHECK(MobiusMap::identity(f5).apply_inverse(t) == t);
  }

  TEST_CASE("apply and apply_inverse are inverse bijections for every element") {
    const GaloisField& f = field_construct(3, 1);
    for (const MobiusMap& m : pgl2_elements(f)) {
      for (const ProjPoint& t : projective_line(f)) {
        CHECK(m.apply(m.apply_inverse(t)) == t);
        CHECK(m.inverse().apply(t) == m.apply_inverse(t));
      }
    }
  }

  TEST_CASE("group orders") {
    CHECK(pgl2_order(example_matrix()) == 5);
    const GaloisField& f5 = field_construct(5, 1);
    CHECK(pgl2_order(MobiusMap::identity(f5)) == 1);
    CHECK(pgl2_order(MobiusMap(f5.one(), f5.zero(), f5.zero(), f5.integer(2))) == 4);
    CHECK(order_triangular(MobiusMap(f5.one(), -f5.one(), f5.zero(), f5.one())) == 5);
    for (int b = 0; b < 5; ++b) {
      CHECK(order_triangular(MobiusMap(f5.one(), -f5.integer(b), f5.zero(), f5.integer(2))) == 4);
    }
    const GaloisField& f4 = gf4();
    CHECK(order_triangular(MobiusMap(f4.one(), f4.one(), f4.zero(), f4.one())) == 2);
    CHECK_THROWS(order_triangular(MobiusMap::identity(f5)));
    CHECK_THROWS(order_triangular(example_matrix()));
  }

  TEST_CASE("PGL2 has q^3 - q distinct elements") {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
      const GaloisField& f = field_from_spec(std::to_string(q));
      const auto all = pgl2_elements(f);
      CHECK(all.size() == q * q * q - q);
      CHECK(std::set<MobiusMap>(all.begin(), all.end()).size() == all.size());
    }
  }

  TEST_CASE("fixed points") {
    const GaloisField& f5 = field_construct(5, 1);
    CHECK(fixed_points(MobiusMap(f5.one(), f5.one(), f5.zero(), f5.one())) ==
          std::vector<ProjPoint>{ProjPoint::infinity()});
    CHECK(fixed_points(MobiusMap::identity(f5)).size() == 6);
    CHECK(fixed_points(MobiusMap(f5.one(), f5.zero(), f5.zero(), f5.integer(2))) ==
          std::vector<ProjPoint>{ProjPoint(f5.zero()), ProjPoint::infinity()});
    for (const MobiusMap& m : pgl2_elements(f5)) {
      if (!m.is_identity()) CHECK(fixed_points(m).size() <= 2);
    }
  }

  TEST_CASE("orbits") {
    const Gf b = gf4().generator();
    CHECK(orbit(example_matrix(), ProjPoint(gf4().one())) ==
          std::vector<ProjPoint>{ProjPoint(gf4().one()), ProjPoint(b), ProjPoint(b + gf4().one()),
                                 ProjPoint::infinity(), ProjPoint(gf4().zero())});
    const GaloisField& f7 = field_construct(7, 1);
    CHECK(orbit(MobiusMap(f7.one(), f7.zero(), f7.zero(), f7.integer(3)), ProjPoint(f7.one())) ==
          points(f7, {1, 3, 2, 6, 4, 5}));
    const GaloisField& f5 = field_construct(5, 1);
    CHECK(orbit(MobiusMap(f5.one(), -f5.one(), f5.zero(), f5.one()), ProjPoint(f5.zero())) ==
          points(f5, {0, 1, 2, 3, 4}));
    CHECK_THROWS_AS(orbit(MobiusMap(f5.one(), f5.one(), f5.zero(), f5.one()), ProjPoint::infinity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(orbit(MobiusMap::identity(f5), ProjPoint(f5.one())), std::invalid_argument);
  }

  TEST_CASE("isotropy orders against enumerated stabilizers") {
    CHECK(isotropy_order(example_matrix(), ProjPoint(gf4().one())) == 1);
    const GaloisField& f9 = field_construct(3, 2);
    for (const MobiusMap& m : pgl2_elements(f9)) {
      const unsigned order = pgl2_order(m);
      for (const ProjPoint& t : projective_line(f9)) {
        unsigned stab = 0;
        MobiusMap p = MobiusMap::identity(f9);
        for (unsigned j = 0; j < order; ++j, p = p * m) stab += p.apply_inverse(t) == t;
        CHECK(isotropy_order(m, t) == stab);
        if (is_fixed(m, t)) CHECK(isotropy_order(m, t) == order);
      }
    }
  }

  TEST_CASE("orbit differences") {
    const GaloisField& f5 = field_construct(5, 1);
    const MobiusMap a(f5.one(), -f5.one(), f5.zero(), f5.integer(2));
    CHECK(orbit(a, ProjPoint(f5.one())) == points(f5, {1, 3, 2, 0}));
    CHECK(orbit_difference(a, f5.one(), 1, 3) == f5.one());
    const GaloisField& f7 = field_construct(7, 1);
    const MobiusMap s(f7.one(), f7.zero(), f7.zero(), f7.integer(3));
    CHECK(orbit_difference(s, f7.one(), 1, 2) == f7.integer(2));
    CHECK_THROWS_AS(orbit_difference(a, f5.one(), 2, 5), std::out_of_range);
    CHECK_THROWS_AS(orbit_difference(a, f5.one(), 2, 2), std::out_of_range);
  }

  TEST_CASE("text forms") {
    const GaloisField& f = gf4();
    CHECK(to_string(ProjPoint::infinity()) == "inf");
    CHECK(parse_point(f, "inf") == ProjPoint::infinity());
    CHECK(parse_point(f, "b+1") == ProjPoint(f.generator() + f.one()));
    CHECK(to_string(example_matrix()) == "1,1;b,0");
    CHECK(reciprocal(ProjPoint(f.zero()), f) == ProjPoint::infinity());
  }
}
