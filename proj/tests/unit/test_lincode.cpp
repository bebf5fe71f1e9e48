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

#include "agc/lincode.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace agc;

namespace {

GfMatrix mat(const GaloisField& f, const std::vector<std::vector<long long>>& rows) {
  GfMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = f.integer(rows[i][j]);
    }
  }
  return m;
}

// Evaluations of 1, x, ..., x^{k-1} at g^0, g^1, ..., g^{q-2}.
GfMatrix reed_solomon(const GaloisField& f, int k) {
  const auto n = static_cast<Eigen::Index>(f.size() - 1);
  const Gf g = primitive_element(f);
  GfMatrix m(k, n);
  for (int i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = g.pow(j * i);
  }
  return m;
}

}  // namespace

TEST_SUITE("lincode") {
  TEST_CASE("dependent rows are absorbed") {
    const GaloisField& f = field_construct(3, 1);
    const LinearCode c(f, mat(f, {{1, 2, 0, 1}, {2, 1, 0, 2}, {0, 1, 1, 0}}));
    CHECK(c.length() == 4);
    CHECK(c.dimension() == 2);
    CHECK(c.basis().rows() == 2);
    CHECK(c.contains(mat(f, {{1, 0, 1, 1}}).row(0)));
    CHECK_FALSE(c.contains(mat(f, {{1, 0, 0, 0}}).row(0)));
  }

  TEST_CASE("Reed-Solomon [6,3,4] over GF(7)") {
    const GaloisField& f = field_construct(7, 1);
    const LinearCode c(f, reed_solomon(f, 3));
    CHECK(c.dimension() == 3);
    const int d = min_distance(c);
    CHECK(d == oracle::min_distance(f, oracle::to_rows(c.generator())));
    CHECK(d == 4);
    CHECK(is_mds(c));
    CHECK(is_cyclic(c));
    const WeightEnumerator w = weight_enumerator(c);
    REQUIRE(w.size() == 7);
    CHECK(w[0] == 1);
    CHECK(w[1] + w[2] + w[3] == 0);
    std::uint64_t total = 0;
    for (auto x : w) total += x;
    CHECK(total == 343);
  }

  TEST_CASE("repetition code and full space") {
    const GaloisField& f = field_construct(5, 1);
    const LinearCode rep(f, mat(f, {{1, 1, 1, 1}}));
    CHECK(min_distance(rep) == 4);
    CHECK(weight_enumerator(rep) == WeightEnumerator{1, 0, 0, 0, 4});
    CHECK(is_mds(rep));
    GfMatrix id = GfMatrix::Identity(3, 3);
    const LinearCode full(f, bind(id, f));
    CHECK(full.dimension() == 3);
    CHECK(min_distance(full) == 1);
    CHECK(weight_enumerator(full) == WeightEnumerator{1, 12, 48, 64});
  }

  TEST_CASE("zero code and budgets") {
    const GaloisField& f = field_construct(2, 1);
    const LinearCode zero(f, mat(f, {{0, 0, 0}}));
    CHECK(zero.dimension() == 0);
    CHECK_THROWS_AS(min_distance(zero), std::domain_error);
    CHECK_THROWS_AS(standard_form(zero), std::domain_error);
    const GaloisField& f7 = field_construct(7, 1);
    CHECK_THROWS_AS(weight_enumerator(LinearCode(f7, reed_solomon(f7, 3)), Budgets{100, 40320}), BudgetExceeded);
  }

  TEST_CASE("binary [4,2,2] is not MDS") {
    const GaloisField& f = field_construct(2, 1);
    const LinearCode c(f, mat(f, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK(min_distance(c) == 2);
    CHECK_FALSE(is_mds(c));
  }

  TEST_CASE("cyclicity") {
    const GaloisField& f = field_construct(2, 1);
    const LinearCode e1(f, mat(f, {{1, 0, 0}}));
    CHECK_FALSE(is_cyclic(e1));
    CHECK(cyclic_shift(mat(f, {{1, 0, 0}})) == mat(f, {{0, 0, 1}}));
    // Hamming [7,4] from g(x) = 1 + x + x^3.
    GfMatrix g = GfMatrix::Constant(4, 7, f.zero());
    for (int i = 0; i < 4; ++i) {
      g(i, i) = f.one();
      g(i, i + 1) = f.one();
      g(i, i + 3) = f.one();
    }
    const LinearCode h(f, g);
    CHECK(is_cyclic(h));
    CHECK(is_cyclic(h) == oracle::cyclic(oracle::to_rows(g)));
    CHECK(min_distance(h) == 3);
    // Row operations do not change the code.
    GfMatrix g2 = g;
    g2.row(0) += g2.row(2);
    g2.row(3) += g2.row(1);
    CHECK(codes_equal(h, LinearCode(f, g2)));
    CHECK_FALSE(codes_equal(h, LinearCode(f, GfMatrix::Constant(1, 7, f.one()))));
  }

  TEST_CASE("codes_equal rejects mismatched shapes") {
    const GaloisField& f2 = field_construct(2, 1);
    const GaloisField& f3 = field_construct(3, 1);
    CHECK_THROWS_AS(codes_equal(LinearCode(f2, mat(f2, {{1, 1}})), LinearCode(f3, mat(f3, {{1, 1}}))),
                    std::invalid_argument);
    CHECK_THROWS_AS(codes_equal(LinearCode(f2, mat(f2, {{1, 1}})), LinearCode(f2, mat(f2, {{1, 1, 1}}))),
                    std::invalid_argument);
  }

  TEST_CASE("standard form") {
    const GaloisField& f = field_construct(5, 1);
    const StandardForm s = standard_form(LinearCode(f, mat(f, {{2, 4, 1, 3}, {1, 2, 1, 1}})));
    CHECK(s.identity_permutation() == false);
    CHECK(s.permutation == std::vector<Eigen::Index>{0, 2, 1, 3});
    CHECK(s.w == mat(f, {{2, 2}, {0, 4}}));

    const StandardForm t = standard_form(LinearCode(f, mat(f, {{1, 1, 1, 1}, {0, 1, 2, 3}})));
    CHECK(t.identity_permutation());
    CHECK(t.w == mat(f, {{4, 3}, {2, 3}}));
  }

  TEST_CASE("monomial maps") {
    const GaloisField& f = field_construct(3, 1);
    const MonomialMap m{{2, 0, 1}, {f.one(), f.integer(2), f.one()}};
    CHECK_FALSE(m.is_permutation());
    const GfMatrix g = mat(f, {{1, 2, 0}});
    CHECK(m.apply(g) == mat(f, {{1, 0, 1}}));
    CHECK(bind(g * m.matrix(f), f) == m.apply(g));
  }

  TEST_CASE("equivalent and inequivalent pairs") {
    const GaloisField& f = field_construct(5, 1);
    // An MDS [4,2] code and a scaled, permuted copy.
    const GfMatrix a = mat(f, {{1, 1, 1, 1}, {1, 3, 4, 2}});
    const MonomialMap hidden{{3, 1, 0, 2}, {f.integer(2), f.one(), f.integer(4), f.integer(3)}};
    const LinearCode ca(f, a);
    const LinearCode cb(f, hidden.apply(a));
    const EquivalenceResult eq = monomial_equivalence(ca, cb);
    REQUIRE(eq.verdict == Verdict::kEquivalent);
    REQUIRE(eq.witness.has_value());
    CHECK(codes_equal(LinearCode(f, eq.witness->apply(a)), cb));
    CHECK(oracle::monomially_equivalent(f, oracle::to_rows(a), oracle::to_rows(hidden.apply(a))));

    const LinearCode other(f, mat(f, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    const EquivalenceResult ne = monomial_equivalence(ca, other);
    CHECK(ne.verdict == Verdict::kInequivalent);
    CHECK_FALSE(ne.witness.has_value());
    CHECK_FALSE(oracle::monomially_equivalent(f, oracle::to_rows(a), oracle::to_rows(other.generator())));

    const EquivalenceResult un = monomial_equivalence(ca, cb, Budgets{10'000'000, 2});
    CHECK(un.verdict == Verdict::kUndecided);
    CHECK(to_string(Verdict::kUndecided) == "UNDECIDED");
  }

  TEST_CASE("equivalence agrees with the exhaustive oracle") {
    const GaloisField& f = field_construct(3, 1);
    const std::vector<GfMatrix> codes = {
        mat(f, {{1, 1, 1}}), mat(f, {{1, 2, 0}}), mat(f, {{1, 0, 0}}), mat(f, {{1, 1, 0}}),
        mat(f, {{1, 0, 1}, {0, 1, 2}}), mat(f, {{1, 0, 0}, {0, 1, 1}}), mat(f, {{1, 0, 0}, {0, 1, 0}}),
    };
    for (const auto& x : codes) {
      for (const auto& y : codes) {
        if (x.rows() != y.rows()) continue;
        const EquivalenceResult r = monomial_equivalence(LinearCode(f, x), LinearCode(f, y));
        const bool expect = oracle::monomially_equivalent(f, oracle::to_rows(x), oracle::to_rows(y));
        CHECK((r.verdict == Verdict::kEquivalent) == expect);
        CHECK(r.verdict != Verdict::kUndecided);
      }
    }
  }
}
