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

#include <algorithm>
#include <set>

namespace agc {

std::string to_string(InvariantMethod m) {
  switch (m) {
    case InvariantMethod::kTrace:
      return "trace";
    case InvariantMethod::kNorm:
      return "norm";
    case InvariantMethod::kPowerSum2:
      return "power-sum-2";
  }
  return "?";
}

InvariantGenerator invariant_generator(const MobiusMap& a) {
  const GaloisField& f = a.field();
  const unsigned m = pgl2_order(a);
  if (m < 2) throw std::invalid_argument("the identity has no proper fixed field");

  RationalFunction trace(f), power_sum(f);
  RationalFunction norm = RationalFunction::constant(f.one());
  MobiusMap power = MobiusMap::identity(f);
  for (unsigned i = 0; i < m; ++i, power = power * a) {
    const RationalFunction image(Polynomial(f, {power.b(), power.a()}), Polynomial(f, {power.d(), power.c()}));
    trace = trace + image;
    norm = norm * image;
    power_sum = power_sum + image * image;
  }
  for (auto [z, method] : {std::pair{trace, InvariantMethod::kTrace}, std::pair{norm, InvariantMethod::kNorm},
                           std::pair{power_sum, InvariantMethod::kPowerSum2}}) {
    if (z.degree() != static_cast<int>(m)) continue;
    if (mobius_substitute(z, a) != z) throw std::logic_error("candidate invariant is not fixed by sigma");
    return {z, m, method};
  }
  throw DegenerateGenerator("trace, norm and second power sum of " + to_string(a) + " all have degree below " +
                            std::to_string(m));
}

std::vector<FiberEntry> fiber_decomposition(const InvariantGenerator& z, const ProjPoint& t) {
  const Polynomial& num = z.z.numerator();
  const Polynomial& den = z.z.denominator();
  const Polynomial poly = t.is_infinity() ? den : num - t.value() * den;
  std::vector<FiberEntry> out;
  for (const Factor& fa : factor(poly)) out.push_back({Place::irreducible(fa.factor), fa.multiplicity});
  const int at_infinity = static_cast<int>(z.m) - poly.degree();
  if (at_infinity > 0) out.push_back({Place::infinity(), at_infinity});
  return out;
}

int fiber_degree(const std::vector<FiberEntry>& fiber) {
  int s = 0;
  for (const FiberEntry& e : fiber) s += e.e * e.place.degree();
  return s;
}

SplittingReport splitting_report(const MobiusMap& a, const ProjPoint& alpha) {
  SplittingReport rep{invariant_generator(a), orbit(a, alpha), ProjPoint::infinity(), false, {}};
  const auto& orb = rep.orbit;
  rep.t = evaluate_projective(rep.generator.z, orb.front());
  rep.constant_on_orbit = std::all_of(orb.begin(), orb.end(), [&](const ProjPoint& p) {
    return evaluate_projective(rep.generator.z, p) == rep.t;
  });
  rep.fiber = fiber_decomposition(rep.generator, rep.t);
  rep.sum_ef = fiber_degree(rep.fiber);

  std::set<Place> fiber_places, orbit_set;
  for (const FiberEntry& e : rep.fiber) fiber_places.insert(e.place);
  for (const ProjPoint& p : orb) orbit_set.insert(Place::rational(p));
  rep.fiber_is_orbit = fiber_places == orbit_set;
  const int expected = static_cast<int>(rep.generator.m / orb.size());
  rep.uniform_ef = std::all_of(rep.fiber.begin(), rep.fiber.end(), [&](const FiberEntry& e) {
    return !orbit_set.count(e.place) || e.e * e.place.degree() == expected;
  });
  return rep;
}

}  // namespace agc
