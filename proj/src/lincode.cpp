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

#include <algorithm>
#include <deque>
#include <numeric>

namespace agc {

namespace {

std::uint64_t checked_power(std::uint64_t base, Eigen::Index e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (Eigen::Index i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// Visits the weight of one representative of every nonzero codeword up to
// scalars (first nonzero coefficient equal to 1). `visit` returns false to stop.
template <typename Visit>
void for_each_projective_weight(const LinearCode& c, Visit&& visit) {
  const GaloisField& f = c.field();
  const std::uint32_t q = f.size();
  const auto n = static_cast<std::size_t>(c.length());
  const auto k = static_cast<std::size_t>(c.dimension());
  const auto table = f.add_table();
  auto add = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    return table.empty() ? f.add(a, b) : table[a * q + b];
  };

  std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = c.basis()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).code();
  }
  // step[v] advances a digit from code v to v + 1 (v = q - 1 wraps to 0).
  std::vector<std::uint32_t> step(q);
  for (std::uint32_t v = 0; v < q; ++v) step[v] = f.sub((v + 1) % q, v);
  // diff[i][v] = step[v] · row_i
  std::vector<std::vector<std::vector<std::uint32_t>>> diff(k, std::vector<std::vector<std::uint32_t>>(q));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::uint32_t v = 0; v < q; ++v) {
      diff[i][v].resize(n);
      for (std::size_t j = 0; j < n; ++j) diff[i][v][j] = f.mul(step[v], rows[i][j]);
    }
  }

  std::vector<std::uint32_t> word(n);
  std::vector<std::uint32_t> digit(k);
  for (std::size_t lead = 0; lead < k; ++lead) {
    word = rows[lead];
    std::fill(digit.begin(), digit.end(), 0);
    while (true) {
      int w = 0;
      for (std::size_t j = 0; j < n; ++j) w += word[j] != 0;
      if (!visit(w)) return;
      std::size_t i = lead + 1;
      for (; i < k; ++i) {
        const std::uint32_t v = digit[i];
        const auto& d = diff[i][v];
        for (std::size_t j = 0; j < n; ++j) word[j] = add(word[j], d[j]);
        digit[i] = (v + 1) % q;
        if (digit[i] != 0) break;
      }
      if (i >= k) break;
    }
  }
}

void require_budget(const LinearCode& c, const Budgets& budgets) {
  const std::uint64_t count = checked_power(c.field().size(), c.dimension(), budgets.codewords);
  if (count > budgets.codewords) {
    throw BudgetExceeded("enumerating q^k = " + std::to_string(c.field().size()) + "^" +
                         std::to_string(c.dimension()) + " codewords exceeds the budget of " +
                         std::to_string(budgets.codewords));
  }
}

}  // namespace

LinearCode::LinearCode(const GaloisField& f, const GfMatrix& generator)
    : field_(&f), generator_(bind(generator, f)), echelon_(rref(generator_)) {
  if (generator_.cols() < 1) throw std::invalid_argument("code length must be at least 1");
}

bool LinearCode::contains(const GfRow& v) const {
  if (v.cols() != length()) return false;
  return in_row_space(echelon_, bind(v, *field_));
}

bool codes_equal(const LinearCode& a, const LinearCode& b) {
  if (&a.field() != &b.field()) throw std::invalid_argument("codes over different fields");
  if (a.length() != b.length()) throw std::invalid_argument("codes of different lengths");
  return a.echelon().pivots == b.echelon().pivots && a.basis() == b.basis();
}

WeightEnumerator weight_enumerator(const LinearCode& c, const Budgets& budgets) {
  require_budget(c, budgets);
  WeightEnumerator w(static_cast<std::size_t>(c.length()) + 1, 0);
  w[0] = 1;
  const std::uint64_t units = c.field().size() - 1;
  for_each_projective_weight(c, [&](int weight) {
    w[static_cast<std::size_t>(weight)] += units;
    return true;
  });
  return w;
}

int min_distance(const LinearCode& c, const Budgets& budgets) {
  if (c.dimension() == 0) throw std::domain_error("the zero code has no minimum distance");
  require_budget(c, budgets);
  int best = static_cast<int>(c.length());
  for_each_projective_weight(c, [&](int weight) {
    best = std::min(best, weight);
    return best > 1;
  });
  return best;
}

bool is_mds(const LinearCode& c, const Budgets& budgets) {
  return min_distance(c, budgets) == c.length() - c.dimension() + 1;
}

GfMatrix cyclic_shift(const GfMatrix& m) {
  GfMatrix out(m.rows(), m.cols());
  const Eigen::Index n = m.cols();
  for (Eigen::Index j = 0; j < n; ++j) out.col(j) = m.col((j + 1) % n);
  return out;
}

bool is_cyclic(const LinearCode& c) {
  const GfMatrix shifted = cyclic_shift(c.basis());
  for (Eigen::Index i = 0; i < shifted.rows(); ++i) {
    if (!in_row_space(c.echelon(), shifted.row(i))) return false;
  }
  return true;
}

bool StandardForm::identity_permutation() const {
  for (std::size_t j = 0; j < permutation.size(); ++j) {
    if (permutation[j] != static_cast<Eigen::Index>(j)) return false;
  }
  return true;
}

StandardForm standard_form(const LinearCode& c) {
  const Eigen::Index k = c.dimension(), n = c.length();
  if (k == 0) throw std::domain_error("the zero code has no standard form");
  const auto& piv = c.echelon().pivots;
  StandardForm out;
  out.permutation.assign(piv.begin(), piv.end());
  for (Eigen::Index j = 0; j < n; ++j) {
    if (std::find(piv.begin(), piv.end(), j) == piv.end()) out.permutation.push_back(j);
  }
  out.w.resize(k, n - k);
  for (Eigen::Index j = 0; j < n - k; ++j) {
    out.w.col(j) = c.basis().col(out.permutation[static_cast<std::size_t>(k + j)]);
  }
  return out;
}

GfMatrix MonomialMap::apply(const GfMatrix& m) const {
  GfMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < target.size(); ++i) {
    const auto src = static_cast<Eigen::Index>(i);
    for (Eigen::Index r = 0; r < m.rows(); ++r) out(r, target[i]) = scale[i] * m(r, src);
  }
  return out;
}

bool MonomialMap::is_permutation() const {
  return std::all_of(scale.begin(), scale.end(), [](const Gf& s) { return s.is_one(); });
}

GfMatrix MonomialMap::matrix(const GaloisField& f) const {
  const auto n = static_cast<Eigen::Index>(target.size());
  GfMatrix m = GfMatrix::Constant(n, n, f.zero());
  for (std::size_t i = 0; i < target.size(); ++i) m(static_cast<Eigen::Index>(i), target[i]) = scale[i];
  return m;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kEquivalent:
      return "EQUIVALENT";
    case Verdict::kInequivalent:
      return "INEQUIVALENT";
    case Verdict::kUndecided:
      return "UNDECIDED";
  }
  return "?";
}

namespace {

// Diagonal lambda with rref(r1 · diag(lambda)) = r2, given equal pivot sets:
// r1[i][t] lambda_t = r2[i][t] lambda_{p_i}.
std::optional<std::vector<Gf>> solve_scaling(const GaloisField& f, const Echelon<Gf>& r1, const Echelon<Gf>& r2) {
  const Eigen::Index k = r1.rank(), n = r1.rows.cols();
  struct Edge {
    Eigen::Index to;
    Gf ratio;  // lambda_to = ratio · lambda_from
  };
  std::vector<std::vector<Edge>> adj(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < k; ++i) {
    const Eigen::Index p = r1.pivots[static_cast<std::size_t>(i)];
    for (Eigen::Index t = 0; t < n; ++t) {
      const Gf a = r1.rows(i, t), b = r2.rows(i, t);
      if (a.is_zero() != b.is_zero()) return std::nullopt;
      if (a.is_zero() || t == p) continue;
      const Gf ratio = b / a;
      adj[static_cast<std::size_t>(p)].push_back({t, ratio});
      adj[static_cast<std::size_t>(t)].push_back({p, ratio.inverse()});
    }
  }
  std::vector<std::optional<Gf>> lambda(static_cast<std::size_t>(n));
  for (Eigen::Index s = 0; s < n; ++s) {
    if (lambda[static_cast<std::size_t>(s)]) continue;
    lambda[static_cast<std::size_t>(s)] = f.one();
    std::deque<Eigen::Index> queue{s};
    while (!queue.empty()) {
      const Eigen::Index u = queue.front();
      queue.pop_front();
      const Gf lu = *lambda[static_cast<std::size_t>(u)];
      for (const Edge& e : adj[static_cast<std::size_t>(u)]) {
        const Gf want = e.ratio * lu;
        auto& slot = lambda[static_cast<std::size_t>(e.to)];
        if (!slot) {
          slot = want;
          queue.push_back(e.to);
        } else if (*slot != want) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Gf> out;
  out.reserve(lambda.size());
  for (const auto& l : lambda) out.push_back(*l);
  return out;
}

}  // namespace

EquivalenceResult monomial_equivalence(const LinearCode& a, const LinearCode& b, const Budgets& budgets) {
  if (&a.field() != &b.field()) return {Verdict::kInequivalent, std::nullopt, "codes over different fields"};
  if (a.length() != b.length()) return {Verdict::kInequivalent, std::nullopt, "lengths differ"};
  if (a.dimension() != b.dimension()) return {Verdict::kInequivalent, std::nullopt, "dimensions differ"};
  const GaloisField& f = a.field();
  const Eigen::Index n = a.length();

  try {
    if (weight_enumerator(a, budgets) != weight_enumerator(b, budgets)) {
      return {Verdict::kInequivalent, std::nullopt, "weight enumerators differ"};
    }
  } catch (const BudgetExceeded& e) {
    return {Verdict::kUndecided, std::nullopt, e.what()};
  }

  const std::uint64_t perms = [&] {
    std::uint64_t r = 1;
    for (Eigen::Index i = 2; i <= n && r <= budgets.permutations; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
  }();
  if (perms > budgets.permutations) {
    return {Verdict::kUndecided, std::nullopt,
            "n! exceeds the permutation budget of " + std::to_string(budgets.permutations)};
  }

  const Echelon<Gf>& target_rref = b.echelon();
  MonomialMap map;
  map.target.resize(static_cast<std::size_t>(n));
  std::iota(map.target.begin(), map.target.end(), 0);
  map.scale.assign(static_cast<std::size_t>(n), f.one());
  const GfMatrix& source = a.basis();
  GfMatrix permuted(source.rows(), n);
  do {
    for (Eigen::Index i = 0; i < n; ++i) permuted.col(map.target[static_cast<std::size_t>(i)]) = source.col(i);
    const Echelon<Gf> r1 = rref(permuted);
    if (r1.pivots != target_rref.pivots) continue;
    const auto lambda = solve_scaling(f, r1, target_rref);
    if (!lambda) continue;
    MonomialMap witness = map;
    for (std::size_t i = 0; i < witness.target.size(); ++i) {
      witness.scale[i] = (*lambda)[static_cast<std::size_t>(witness.target[i])];
    }
    if (!codes_equal(LinearCode(f, witness.apply(a.generator())), b)) {
      throw std::logic_error("monomial witness failed verification");
    }
    return {Verdict::kEquivalent, witness, witness.is_permutation() ? "column permutation" : "monomial map"};
  } while (std::next_permutation(map.target.begin(), map.target.end()));
  return {Verdict::kInequivalent, std::nullopt, "no column permutation admits a diagonal rescaling"};
}

std::string format_matrix(const GaloisField& f, const GfMatrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += f.format(m(i, j).in(f));
    }
    out += '\n';
  }
  return out;
}

}  // namespace agc
