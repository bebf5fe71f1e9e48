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

// agcodes: command-line front end.
//
// Exit status: 0 when every check the subcommand asks for holds, 1 when one
// fails, 2 on usage errors, 3 when an enumeration budget runs out.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "agc/fixedfield.hpp"
#include "agc/selftest.hpp"
#include "agc/sigma.hpp"
#include "json.hpp"

namespace {

using agc::Gf;
using agc::GaloisField;
using agc::GfMatrix;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kUndecided = 3;

struct Options {
  std::string q;
  std::string modulus;
  std::string matrix;
  std::string alpha = "1";
  std::string beta = "inf";
  std::string divisor;
  std::string code1;
  std::string code2;
  int r = 1;
  int s = 0;
  unsigned n = 0;
  unsigned p = 0;
  unsigned m = 0;
  bool pole_basis = false;
  bool json = false;
  agc::Budgets budgets;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

const GaloisField& field_of(const Options& o) {
  if (o.q.empty()) throw UsageError("--q is required");
  std::optional<std::vector<unsigned>> mod;
  if (!o.modulus.empty()) {
    mod.emplace();
    for (const auto& c : split(o.modulus, ',')) {
      try {
        mod->push_back(static_cast<unsigned>(std::stoul(c)));
      } catch (const std::exception&) {
        throw UsageError("bad modulus coefficient '" + c + "'");
      }
    }
  }
  return agc::field_from_spec(o.q, mod);
}

agc::MobiusMap matrix_of(const GaloisField& f, const Options& o) {
  if (o.matrix.empty()) throw UsageError("--matrix is required");
  return agc::parse_matrix(f, o.matrix);
}

// Rows separated by ';', entries by ','.
GfMatrix parse_generator(const GaloisField& f, const std::string& text) {
  const auto rows = split(text, ';');
  if (rows.empty()) throw UsageError("empty generator matrix");
  std::vector<std::vector<Gf>> cells;
  for (const auto& row : rows) {
    cells.emplace_back();
    for (const auto& e : split(row, ',')) cells.back().push_back(f.parse(e));
    if (cells.back().size() != cells.front().size()) throw UsageError("generator rows differ in length");
  }
  GfMatrix m(static_cast<Eigen::Index>(cells.size()), static_cast<Eigen::Index>(cells.front().size()));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = cells[i][j];
  }
  return m;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> point_strings(const std::vector<agc::ProjPoint>& pts) {
  std::vector<std::string> out;
  for (const auto& t : pts) out.push_back(agc::to_string(t));
  return out;
}

std::vector<std::string> place_strings(const std::vector<agc::Place>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(agc::to_string(p));
  return out;
}

Json matrix_json(const GaloisField& f, const GfMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(f.format(m(i, j).in(f)));
    rows.push_back(row);
  }
  return rows;
}

// Bracketed rows with aligned columns.
std::string matrix_text(const GaloisField& f, const GfMatrix& m, const std::string& indent = "  ") {
  std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 1);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      width[static_cast<std::size_t>(j)] = std::max(width[static_cast<std::size_t>(j)], f.format(m(i, j).in(f)).size());
    }
  }
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += indent + "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const std::string e = f.format(m(i, j).in(f));
      out += " " + std::string(width[static_cast<std::size_t>(j)] - e.size(), ' ') + e;
    }
    out += " ]\n";
  }
  return out;
}

struct CodeSummary {
  Json json;
  std::string text;
  bool undecided = false;
};

CodeSummary summarize(const agc::LinearCode& c, const agc::Budgets& budgets) {
  const GaloisField& f = c.field();
  CodeSummary s;
  s.json["n"] = c.length();
  s.json["k"] = c.dimension();
  std::optional<agc::WeightEnumerator> w;
  try {
    w = agc::weight_enumerator(c, budgets);
  } catch (const agc::BudgetExceeded&) {
    s.undecided = true;
  }
  std::optional<int> d;
  if (w) {
    for (std::size_t i = 1; i < w->size(); ++i) {
      if ((*w)[i] != 0) {
        d = static_cast<int>(i);
        break;
      }
    }
  }
  s.json["d"] = d ? Json(*d) : Json(nullptr);
  s.json["generator"] = matrix_json(f, c.generator());
  s.json["weight_enumerator"] = w ? Json(*w) : Json(nullptr);

  std::ostringstream t;
  t << "[n, k, d] = [" << c.length() << ", " << c.dimension() << ", "
    << (d ? std::to_string(*d) : s.undecided ? std::string("undecided") : std::string("-")) << "]\n";
  t << "generator:\n" << matrix_text(f, c.generator());
  if (w) {
    std::vector<std::string> parts;
    for (auto x : *w) parts.push_back(std::to_string(x));
    t << "weight enumerator: " << join(parts, " ") << "\n";
  }
  s.text = t.str();
  return s;
}

Json optional_json(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }
Json optional_json(const std::optional<int>& i) { return i ? Json(*i) : Json(nullptr); }

Json report_json(const agc::VerificationReport& r) {
  Json j;
  j["places_distinct"] = r.places_distinct;
  j["supports_disjoint"] = r.supports_disjoint;
  j["shift_condition"] = optional_json(r.shift_condition);
  j["D_invariant"] = optional_json(r.d_invariant);
  j["G_invariant"] = optional_json(r.g_invariant);
  j["order_divisibility"] = optional_json(r.order_divisibility);
  j["cyclic"] = r.code_cyclic;
  j["induced_permutation"] = r.induced_permutation;
  j["n"] = r.n;
  j["m"] = optional_json(r.m);
  j["k_iso"] = optional_json(r.k_iso);
  j["k"] = r.dimension;
  j["d"] = optional_json(r.distance);
  j["all"] = r.all();
  return j;
}

std::string report_text(const agc::VerificationReport& r) {
  const Json j = report_json(r);
  std::string out;
  for (const auto& [key, value] : j.items()) {
    out += key + "=" + (value.is_null() ? std::string("n/a") : value.dump()) + "\n";
  }
  return out;
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

agc::SigmaCodeSpec spec_of(const GaloisField& f, const Options& o) {
  return {matrix_of(f, o), agc::parse_point(f, o.alpha), agc::parse_point(f, o.beta), o.r};
}

Json spec_json(const agc::SigmaCodeSpec& s) {
  Json j;
  j["matrix"] = agc::to_string(s.a);
  j["alpha"] = agc::to_string(s.alpha);
  j["beta"] = agc::to_string(s.beta);
  j["r"] = s.r;
  return j;
}

int cmd_field(const Options& o) {
  const GaloisField& f = field_of(o);
  Json j;
  j["p"] = f.characteristic();
  j["m"] = f.degree();
  j["q"] = f.size();
  j["modulus"] = std::vector<unsigned>(f.modulus().begin(), f.modulus().end());
  j["primitive"] = f.format(f.primitive());
  std::vector<std::string> elems;
  for (const Gf& a : f.elements()) elems.push_back(f.format(a));
  j["elements"] = elems;

  std::ostringstream t;
  t << "GF(" << f.size() << ") = GF(" << f.characteristic() << "^" << f.degree() << ")\n";
  std::vector<std::string> mod;
  for (unsigned c : f.modulus()) mod.push_back(std::to_string(c));
  t << "modulus (ascending): " << join(mod, ",") << "\n";
  t << "primitive element: " << f.format(f.primitive()) << "\n";
  t << "elements: " << join(elems) << "\n";
  emit(o, j, t.str());
  return kOk;
}

int cmd_orbit(const Options& o) {
  const GaloisField& f = field_of(o);
  const agc::MobiusMap a = matrix_of(f, o);
  const agc::ProjPoint alpha = agc::parse_point(f, o.alpha);
  if (agc::is_fixed(a, alpha)) throw UsageError(agc::to_string(alpha) + " is fixed by A");
  const auto orb = agc::orbit(a, alpha);
  Json j;
  j["matrix"] = agc::to_string(a);
  j["order"] = agc::pgl2_order(a);
  j["orbit"] = point_strings(orb);
  j["fixed_points"] = point_strings(agc::fixed_points(a));
  j["isotropy"] = agc::isotropy_order(a, alpha);
  emit(o, j, join(point_strings(orb)) + "\n");
  return kOk;
}

int cmd_construct(const Options& o) {
  const GaloisField& f = field_of(o);
  const agc::SigmaCodeSpec spec = spec_of(f, o);
  const agc::LinearCode c =
      agc::construct_sigma_code(spec, o.pole_basis ? agc::BasisChoice::kPolePowers : agc::BasisChoice::kDefault);
  const CodeSummary s = summarize(c, o.budgets);
  Json j = s.json;
  j["spec"] = spec_json(spec);
  j["D"] = point_strings(agc::spec_orbit(spec));
  emit(o, j, agc::to_string(spec) + "\nD: " + join(point_strings(agc::spec_orbit(spec))) + "\n" + s.text);
  return s.undecided ? kUndecided : kOk;
}

int cmd_verify(const Options& o) {
  const GaloisField& f = field_of(o);
  const agc::MobiusMap a = matrix_of(f, o);
  const agc::ProjPoint alpha = agc::parse_point(f, o.alpha);
  if (agc::is_fixed(a, alpha)) throw UsageError(agc::to_string(alpha) + " is fixed by A");
  const auto d = agc::orbit_places(agc::orbit(a, alpha));
  const agc::Divisor g = o.divisor.empty() ? agc::divisor(agc::Place::rational(agc::parse_point(f, o.beta)), o.r)
                                           : agc::parse_divisor(f, o.divisor);
  const agc::VerificationReport rep = agc::verify_sigma_cyclic(a, d, g, o.budgets);
  Json j = report_json(rep);
  j["D"] = place_strings(d);
  j["G"] = agc::to_string(g);
  emit(o, j, "D: " + join(place_strings(d)) + "\nG: " + agc::to_string(g) + "\n" + report_text(rep));
  return rep.all() ? kOk : kFailed;
}

int cmd_canonical(const Options& o) {
  const GaloisField& f = field_of(o);
  const agc::SigmaCodeSpec spec = spec_of(f, o);
  const agc::CanonicalResult res = agc::canonicalize(spec);
  const agc::LinearCode input = agc::construct_sigma_code(spec);
  const agc::LinearCode canon = agc::construct_sigma_code(res.canonical);
  const bool verified = agc::codes_equal(agc::LinearCode(f, res.witness.apply(input.generator())), canon);

  std::vector<std::string> scale;
  for (const Gf& c : res.witness.scale) scale.push_back(f.format(c.in(f)));
  Json j;
  j["input"] = spec_json(spec);
  j["canonical"] = spec_json(res.canonical);
  j["relation"] = agc::to_string(res.relation);
  j["witness"] = {{"target", res.witness.target}, {"scale", scale}};
  j["witness_verified"] = verified;
  j["steps"] = res.steps;

  std::ostringstream t;
  t << "input:     " << agc::to_string(spec) << "\n";
  for (const auto& step : res.steps) t << "  " << step << "\n";
  t << "canonical: " << agc::to_string(res.canonical) << "\n";
  t << "relation:  " << agc::to_string(res.relation) << "\n";
  std::vector<std::string> target;
  for (auto x : res.witness.target) target.push_back(std::to_string(x));
  t << "witness:   target " << join(target, " ") << ", scale " << join(scale, " ") << "\n";
  t << "witness_verified=" << (verified ? "true" : "false") << "\n";
  emit(o, j, t.str());
  return verified ? kOk : kFailed;
}

int cmd_equiv(const Options& o) {
  const GaloisField& f = field_of(o);
  if (o.code1.empty() || o.code2.empty()) throw UsageError("--code1 and --code2 are required");
  const agc::LinearCode a(f, parse_generator(f, o.code1));
  const agc::LinearCode b(f, parse_generator(f, o.code2));
  if (a.length() != b.length()) throw UsageError("codes have different lengths");
  const agc::EquivalenceResult res = agc::monomial_equivalence(a, b, o.budgets);
  Json j;
  j["verdict"] = agc::to_string(res.verdict);
  j["reason"] = res.reason;
  std::string text = agc::to_string(res.verdict) + ": " + res.reason + "\n";
  if (res.witness) {
    std::vector<std::string> scale;
    for (const Gf& c : res.witness->scale) scale.push_back(f.format(c.in(f)));
    j["witness"] = {{"target", res.witness->target}, {"scale", scale}};
    text += "monomial matrix:\n" + matrix_text(f, res.witness->matrix(f));
  } else {
    j["witness"] = nullptr;
  }
  emit(o, j, text);
  switch (res.verdict) {
    case agc::Verdict::kEquivalent:
      return kOk;
    case agc::Verdict::kInequivalent:
      return kFailed;
    case agc::Verdict::kUndecided:
      return kUndecided;
  }
  return kFailed;
}

Json fiber_json(const std::vector<agc::FiberEntry>& fiber) {
  Json arr = Json::array();
  for (const auto& e : fiber) arr.push_back({{"place", agc::to_string(e.place)}, {"e", e.e}, {"f", e.place.degree()}});
  return arr;
}

std::string fiber_text(const std::vector<agc::FiberEntry>& fiber) {
  std::vector<std::string> parts;
  for (const auto& e : fiber) {
    parts.push_back(agc::to_string(e.place) + " (e=" + std::to_string(e.e) + ", f=" + std::to_string(e.place.degree()) + ")");
  }
  return join(parts, "; ");
}

int cmd_fixedfield(const Options& o, bool with_alpha) {
  const GaloisField& f = field_of(o);
  const agc::MobiusMap a = matrix_of(f, o);
  std::optional<agc::InvariantGenerator> maybe;
  try {
    maybe = agc::invariant_generator(a);
  } catch (const agc::DegenerateGenerator& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  const agc::InvariantGenerator& g = *maybe;
  Json j;
  j["matrix"] = agc::to_string(a);
  j["z"] = g.z.to_string();
  j["m"] = g.m;
  j["method"] = agc::to_string(g.method);
  std::ostringstream t;
  t << "z = " << g.z.to_string() << "  (" << agc::to_string(g.method) << ")\nm = " << g.m << "\n";
  Json fibers = Json::array();
  for (const agc::ProjPoint& pt : agc::projective_line(f)) {
    const auto fib = agc::fiber_decomposition(g, pt);
    fibers.push_back({{"t", agc::to_string(pt)}, {"places", fiber_json(fib)}, {"sum_ef", agc::fiber_degree(fib)}});
    t << "t = " << agc::to_string(pt) << ": " << fiber_text(fib) << "\n";
  }
  j["fibers"] = fibers;
  int rc = kOk;
  if (with_alpha) {
    const agc::ProjPoint alpha = agc::parse_point(f, o.alpha);
    if (agc::is_fixed(a, alpha)) throw UsageError(agc::to_string(alpha) + " is fixed by A");
    const agc::SplittingReport rep = agc::splitting_report(a, alpha);
    j["splitting"] = {{"orbit", point_strings(rep.orbit)},
                      {"t", agc::to_string(rep.t)},
                      {"constant_on_orbit", rep.constant_on_orbit},
                      {"fiber_is_orbit", rep.fiber_is_orbit},
                      {"uniform_ef", rep.uniform_ef},
                      {"sum_ef", rep.sum_ef},
                      {"ok", rep.ok()}};
    t << "orbit of " << agc::to_string(alpha) << ": " << join(point_strings(rep.orbit)) << "\n";
    t << "z on orbit = " << agc::to_string(rep.t) << ", constant_on_orbit=" << std::boolalpha << rep.constant_on_orbit
      << ", fiber_is_orbit=" << rep.fiber_is_orbit << ", uniform_ef=" << rep.uniform_ef << ", sum_ef=" << rep.sum_ef
      << "\n";
    rc = rep.ok() ? kOk : kFailed;
  }
  emit(o, j, t.str());
  return rc;
}

int cmd_example(const Options& o, const agc::ExampleResult& ex) {
  const CodeSummary s = summarize(ex.code, o.budgets);
  Json j = s.json;
  j["D"] = place_strings(ex.d);
  j["G"] = agc::to_string(ex.g);
  j["cyclic"] = ex.report.code_cyclic;
  j["report"] = report_json(ex.report);
  j["note"] = ex.note;
  emit(o, j,
       "D: " + join(place_strings(ex.d)) + "\nG: " + agc::to_string(ex.g) + "\n" + s.text + report_text(ex.report) +
           "note: " + ex.note + "\n");
  if (!ex.report.all()) return kFailed;
  return s.undecided ? kUndecided : kOk;
}

int cmd_selftest(const Options& o) {
  Json arr = Json::array();
  int failed = 0;
  agc::selftest::run_all([&](const agc::selftest::CriterionResult& r) {
    failed += r.pass ? 0 : 1;
    if (o.json) {
      // Timings are left out so the output is reproducible.
      arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      std::cout << agc::selftest::format_line(r) << std::endl;
    }
  });
  if (o.json) std::cout << arr.dump(2) << "\n";
  return failed == 0 ? kOk : kFailed;
}

void add_field_options(CLI::App* sub, Options& o) {
  sub->add_option("--q", o.q, "field size: p^m, p, or a prime power")->required();
  sub->add_option("--modulus", o.modulus, "ascending coefficients of a monic irreducible, e.g. 1,1,1");
}

void add_spec_options(CLI::App* sub, Options& o) {
  add_field_options(sub, o);
  sub->add_option("--matrix", o.matrix, "PGL2 element as a,b;c,d")->required();
  sub->add_option("--alpha", o.alpha, "orbit seed (default 1)");
  sub->add_option("--beta", o.beta, "fixed point carrying G (default inf)");
  sub->add_option("--r", o.r, "coefficient of G at beta (default 1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic AG codes over F_q(x) from PGL2 automorphisms"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--budget-codewords", o.budgets.codewords, "largest q^k to enumerate");
  app.add_option("--budget-perms", o.budgets.permutations, "largest n! to search");

  auto* field = app.add_subcommand("field", "field tables");
  add_field_options(field, o);

  auto* orbit = app.add_subcommand("orbit", "orbit of alpha under A");
  add_field_options(orbit, o);
  orbit->add_option("--matrix", o.matrix, "PGL2 element as a,b;c,d")->required();
  orbit->add_option("--alpha", o.alpha, "orbit seed (default 1)");

  auto* construct = app.add_subcommand("construct", "build C(A, alpha, beta, r)");
  add_spec_options(construct, o);
  construct->add_flag("--pole-basis,--paper-basis", o.pole_basis, "use the 1/(x - beta)^i basis (finite beta)");

  auto* verify = app.add_subcommand("verify", "check the cyclicity hypotheses and the code");
  add_spec_options(verify, o);
  verify->add_option("--divisor", o.divisor, "G as e.g. '2*a=0 + 1*inf' (overrides --beta/--r)");

  auto* canonical = app.add_subcommand("canonical", "reduce a spec to its canonical representative");
  add_spec_options(canonical, o);

  auto* equiv = app.add_subcommand("equiv", "monomial equivalence of two codes");
  add_field_options(equiv, o);
  equiv->add_option("--code1", o.code1, "generator rows separated by ';'")->required();
  equiv->add_option("--code2", o.code2, "generator rows separated by ';'")->required();

  auto* fixedfield = app.add_subcommand("fixedfield", "invariant generator and fibers");
  add_field_options(fixedfield, o);
  fixedfield->add_option("--matrix", o.matrix, "PGL2 element as a,b;c,d")->required();
  auto* ff_alpha = fixedfield->add_option("--alpha", o.alpha, "also report the splitting of this orbit");

  auto* example = app.add_subcommand("example", "named families");
  example->require_subcommand(1);
  example->fallthrough();
  auto* frob = example->add_subcommand("frobenius", "D = Frobenius conjugates of a primitive element");
  frob->fallthrough();
  frob->add_option("--p", o.p, "characteristic")->required();
  frob->add_option("--m", o.m, "extension degree")->required();
  frob->add_option("--r", o.r, "coefficient of P_0")->required();
  frob->add_option("--s", o.s, "coefficient of P_inf")->required();
  auto* roots = example->add_subcommand("roots-of-unity", "D = n-th roots of unity");
  roots->fallthrough();
  add_field_options(roots, o);
  roots->add_option("--n", o.n, "orbit length, dividing q - 1")->required();
  roots->add_option("--r", o.r, "coefficient of P_0")->required();
  roots->add_option("--s", o.s, "coefficient of P_inf")->required();
  auto* as = example->add_subcommand("artin-schreier", "sigma(x) = x - 1");
  as->fallthrough();
  add_field_options(as, o);
  as->add_option("--s", o.s, "coefficient of P_inf")->required();

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  for (auto* sub : {field, orbit, construct, verify, canonical, equiv, fixedfield, selftest}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (field->parsed()) return cmd_field(o);
    if (orbit->parsed()) return cmd_orbit(o);
    if (construct->parsed()) return cmd_construct(o);
    if (verify->parsed()) return cmd_verify(o);
    if (canonical->parsed()) return cmd_canonical(o);
    if (equiv->parsed()) return cmd_equiv(o);
    if (fixedfield->parsed()) return cmd_fixedfield(o, ff_alpha->count() > 0);
    if (selftest->parsed()) return cmd_selftest(o);
    if (frob->parsed()) return cmd_example(o, agc::example_frobenius(o.p, o.m, o.r, o.s, o.budgets));
    if (roots->parsed()) return cmd_example(o, agc::example_roots_of_unity(field_of(o), o.n, o.r, o.s, o.budgets));
    if (as->parsed()) return cmd_example(o, agc::example_artin_schreier(field_of(o), o.s, o.budgets));
  } catch (const agc::BudgetExceeded& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
