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

// Brute-force reference computations. They use plain vectors and direct
// element arithmetic only, never the elimination or enumeration code they
// are checking.

#ifndef AGC_SELFTEST_ORACLES_HPP
#define AGC_SELFTEST_ORACLES_HPP

#include <set>
#include <vector>

#include "agc/linalg.hpp"

namespace agc::oracle {

using Row = std::vector<Gf>;
using Rows = std::vector<Row>;

Rows to_rows(const GfMatrix& m);
/// Rank by plain Gaussian elimination.
int rank(Rows rows);
bool same_row_space(const Rows& a, const Rows& b);
/// Closed under (c_1, ..., c_n) -> (c_2, ..., c_n, c_1).
bool cyclic(const Rows& g);
/// Every combination of the rows, as code vectors.
std::set<std::vector<std::uint32_t>> codewords(const GaloisField& f, const Rows& g);
/// Smallest nonzero weight over all q^k combinations of the rows.
int min_distance(const GaloisField& f, const Rows& g);
/// Some monomial map (all n! (q-1)^n of them are tried) taking code a onto code b.
bool monomially_equivalent(const GaloisField& f, const Rows& a, const Rows& b);

}  // namespace agc::oracle

#endif  // AGC_SELFTEST_ORACLES_HPP
