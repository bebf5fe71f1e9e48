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

#ifndef AGC_LINCODE_HPP
#define AGC_LINCODE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "agc/linalg.hpp"

namespace agc {

/// Thrown when an exhaustive search would exceed its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budgets {
  std::uint64_t codewords = 10'000'000;  // q^k
  std::uint64_t permutations = 40'320;   // n!
};

class LinearCode {
 public:
  /// Rows may be dependent; entries are bound to `f`.
  LinearCode(const GaloisField& f, const GfMatrix& generator);

  const GaloisField& field() const { return *field_; }
  Eigen::Index length() const { return generator_.cols(); }
  Eigen::Index dimension() const { return echelon_.rank(); }
  const GfMatrix& generator() const { return generator_; }
  const Echelon<Gf>& echelon() const { return echelon_; }
  /// Full-rank basis (the nonzero rref rows).
  const GfMatrix& basis() const { return echelon_.rows; }
  bool contains(const GfRow& v) const;

 private:
  const GaloisField* field_;
  GfMatrix generator_;
  Echelon<Gf> echelon_;
};

/// Same row space; throws std::invalid_argument on a field or length mismatch.
bool codes_equal(const LinearCode& a, const LinearCode& b);

using WeightEnumerator = std::vector<std::uint64_t>;

/// W[0..n]; throws BudgetExceeded when q^k exceeds the codeword budget.
WeightEnumerator weight_enumerator(const LinearCode& c, const Budgets& budgets = {});
/// Exact d; throws std::domain_error for the zero code.
int min_distance(const LinearCode& c, const Budgets& budgets = {});
bool is_mds(const LinearCode& c, const Budgets& budgets = {});

/// (c_1, ..., c_n) -> (c_2, ..., c_n, c_1), applied to every row.
GfMatrix cyclic_shift(const GfMatrix& m);
bool is_cyclic(const LinearCode& c);

struct StandardForm {
  /// Column j of the permuted generator is column perm[j] of the original.
  std::vector<Eigen::Index> permutation;
  GfMatrix w;  // k × (n - k)
  bool identity_permutation() const;
};

/// (I_k | W) after moving the pivot columns to the front; throws
/// std::domain_error for the zero code.
StandardForm standard_form(const LinearCode& c);

/// Column i of C1 goes to column target[i], scaled by scale[i]:
/// (cM)_{target[i]} = scale[i] c_i.
struct MonomialMap {
  std::vector<Eigen::Index> target;
  std::vector<Gf> scale;

  GfMatrix apply(const GfMatrix& m) const;
  bool is_permutation() const;
  /// The n × n monomial matrix M with C2 = C1 M.
  GfMatrix matrix(const GaloisField& f) const;
};

enum class Verdict { kEquivalent, kInequivalent, kUndecided };
std::string to_string(Verdict v);

struct EquivalenceResult {
  Verdict verdict;
  std::optional<MonomialMap> witness;  // set iff kEquivalent
  std::string reason;
};

/// Weight-enumerator filter, then a search over column permutations with
/// per-permutation scaling solved on rref forms. Budget overruns give
/// kUndecided, never an exception.
EquivalenceResult monomial_equivalence(const LinearCode& a, const LinearCode& b, const Budgets& budgets = {});

std::string format_matrix(const GaloisField& f, const GfMatrix& m);

}  // namespace agc

#endif  // AGC_LINCODE_HPP
