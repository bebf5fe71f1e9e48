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

// Fixed field of a cyclic subgroup <sigma> of PGL2(F_q) acting on F_q(x).

#ifndef AGC_FIXEDFIELD_HPP
#define AGC_FIXEDFIELD_HPP

#include <string>
#include <vector>

#include "agc/places.hpp"

namespace agc {

enum class InvariantMethod { kTrace, kNorm, kPowerSum2 };
std::string to_string(InvariantMethod m);

struct InvariantGenerator {
  RationalFunction z;
  unsigned m;  // order of A
  InvariantMethod method;
};

/// Thrown when trace, norm and second power sum all have degree below m.
class DegenerateGenerator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// First of sum sigma^i(x), prod sigma^i(x), sum sigma^i(x)^2 of degree m;
/// the returned z satisfies z(A·x) = z.
InvariantGenerator invariant_generator(const MobiusMap& a);

struct FiberEntry {
  Place place;
  int e;  // multiplicity; the inertia degree is place.degree()
};

/// Places over t of the fixed field, from the factorization of N - tD
/// (of D when t = inf), with the infinite place filling up the degree to m.
std::vector<FiberEntry> fiber_decomposition(const InvariantGenerator& z, const ProjPoint& t);
int fiber_degree(const std::vector<FiberEntry>& fiber);

struct SplittingReport {
  InvariantGenerator generator;
  std::vector<ProjPoint> orbit;
  ProjPoint t;                    // z(alpha_1)
  bool constant_on_orbit = false;
  std::vector<FiberEntry> fiber;  // over t
  bool fiber_is_orbit = false;    // every fiber place is an orbit place and vice versa
  bool uniform_ef = false;        // e·f = m/n at every orbit place
  int sum_ef = 0;

  bool ok() const { return constant_on_orbit && fiber_is_orbit && uniform_ef && sum_ef == static_cast<int>(generator.m); }
};

SplittingReport splitting_report(const MobiusMap& a, const ProjPoint& alpha);

}  // namespace agc

#endif  // AGC_FIXEDFIELD_HPP
