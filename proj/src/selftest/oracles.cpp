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

#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace agc::oracle {

Rows to_rows(const GfMatrix& m) {
  Rows out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j));
  }
  return out;
}

int rank(Rows rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Gf inv = rows[r][col].inverse();
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const Gf factor = rows[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) rows[i][j] = rows[i][j] - factor * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

bool same_row_space(const Rows& a, const Rows& b) {
  Rows both = a;
  both.insert(both.end(), b.begin(), b.end());
  const int ra = rank(a);
  return ra == rank(b) && ra == rank(both);
}

bool cyclic(const Rows& g) {
  Rows both = g;
  for (const Row& row : g) {
    Row s(row.begin() + 1, row.end());
    s.push_back(row.front());
    both.push_back(std::move(s));
  }
  return rank(g) == rank(both);
}

std::set<std::vector<std::uint32_t>> codewords(const GaloisField& f, const Rows& g) {
  std::set<std::vector<std::uint32_t>> out;
  const std::size_t k = g.size();
  const std::size_t n = k == 0 ? 0 : g[0].size();
  const auto elems = f.elements();
  std::vector<std::size_t> coeff(k, 0);
  while (true) {
    std::vector<std::uint32_t> word(n);
    for (std::size_t j = 0; j < n; ++j) {
      Gf v = f.zero();
      for (std::size_t i = 0; i < k; ++i) v = v + elems[coeff[i]] * g[i][j];
      word[j] = v.code();
    }
    out.insert(std::move(word));
    std::size_t i = 0;
    while (i < k && ++coeff[i] == elems.size()) coeff[i++] = 0;
    if (i == k) break;
  }
  return out;
}

int min_distance(const GaloisField& f, const Rows& g) {
  int best = -1;
  for (const auto& w : codewords(f, g)) {
    const int wt = static_cast<int>(std::count_if(w.begin(), w.end(), [](std::uint32_t c) { return c != 0; }));
    if (wt > 0 && (best < 0 || wt < best)) best = wt;
  }
  return best;
}

bool monomially_equivalent(const GaloisField& f, const Rows& a, const Rows& b) {
  if (a.empty() || b.empty()) return a.size() == b.size();
  const std::size_t n = a[0].size();
  const auto target = codewords(f, b);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const std::uint32_t units = f.size() - 1;
  do {
    std::vector<std::uint32_t> scale(n, 0);  // index into the nonzero elements
    while (true) {
      bool ok = true;
      for (const Row& row : a) {
        std::vector<std::uint32_t> img(n);
        for (std::size_t i = 0; i < n; ++i) img[perm[i]] = (f.element(scale[i] + 1) * row[i]).code();
        if (!target.count(img)) {
          ok = false;
          break;
        }
      }
      if (ok && rank(a) == rank(b)) return true;
      std::size_t i = 0;
      while (i < n && ++scale[i] == units) scale[i++] = 0;
      if (i == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace agc::oracle
