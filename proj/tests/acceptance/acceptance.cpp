// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails. Everything runs in exact arithmetic.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "confalg/axioms.hpp"
#include "confalg/bimodule.hpp"
#include "confalg/compatible.hpp"
#include "confalg/corpus.hpp"
#include "confalg/derive.hpp"
#include "confalg/operators.hpp"
#include "confalg/poly_parse.hpp"
#include "confalg/search.hpp"
#include "confalg/sequation.hpp"
#include "poly_properties.hpp"
#include "random.hpp"
#include "sequation_cases.hpp"

namespace {

using namespace confalg;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  // Records a failed expectation; the first few are kept in the detail.
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok || failures < 5) detail << (detail.tellp() > 0 ? "; " : "") << what;
    ok = false;
    ++failures;
  }
  int failures = 0;
};

struct Criterion {
  int id;
  std::string title;
  double bound_seconds;  // 0 for no runtime bound
  std::function<void(Outcome&)> run;
};

Poly P(const std::string& s) { return parse_poly(s); }

VarId param(const std::string& name) { return VarRegistry::global().parameter(name); }

ModuleMap bind(const ModuleMap& m, const std::map<std::string, Rational>& values) {
  std::map<VarId, Poly> b;
  for (const auto& [name, v] : values) b[param(name)] = Poly(v);
  return m.substitute(b);
}

Rational nonzero(std::mt19937_64& rng) {
  Rational q = 0;
  while (q == 0) q = testing::random_rational(rng, 3);
  return q;
}

void c1_rank_one(Outcome& o) {
  const Structure vir = corpus::virasoro(corpus::virasoro_c());
  o.expect(check_axioms(vir).verdict, "virasoro with symbolic c is not left-symmetric");
  const Structure lie = commutator_lie(vir);
  o.expect(lie.op("bracket").at(0, 0, 0) == P("d + 2*lm"),
           "commutator is " + lie.op("bracket").at(0, 0, 0).to_string());
  o.expect(check_axioms(lie).verdict, "commutator is not Lie");
}

void c2_lw(Outcome& o) {
  const Structure lw = corpus::lw(corpus::lw_generic_g());
  o.expect(check_axioms(lw).verdict, "generic lw is not left-symmetric");
  for (int type = 1; type <= 3; ++type) {
    o.expect(check_rota_baxter(corpus::lw_type(type), lw, Poly()).verdict,
             "type " + std::to_string(type) + " fails the weight-zero check");
  }
  const Bimodule adj = adjoint_bimodule(lw);
  const Structure ld = induced_l_dendriform(corpus::lw_type(3), adj, LdFlavor::vertical);
  // g(-lm) and g(d + lm) for g = g0 + g1 lm + g2 lm^2.
  const Poly a = Poly::var(param("a"));
  const Poly g_neg = P("g0 - g1*lm + g2*lm^2");
  const Poly g_shift = P("g0 + g1*(d + lm) + g2*(d + lm)^2");
  const Poly tri_r = a.scaled(2) * g_neg * P("lm");
  const Poly tri_l = a.scaled(2) * P("d + lm") * g_shift;
  o.expect(ld.op("tri_r").at(0, 0, 1) == tri_r, "|> table is " + ld.op("tri_r").at(0, 0, 1).to_string());
  o.expect(ld.op("tri_l").at(0, 0, 1) == tri_l, "<| table is " + ld.op("tri_l").at(0, 0, 1).to_string());
  for (const char* op : {"tri_r", "tri_l"}) {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) {
          if (i == 0 && j == 0 && k == 1) continue;
          o.expect(ld.op(op).at(i, j, k).is_zero(), std::string("stray entry in ") + op);
        }
  }
  for (int type = 1; type <= 2; ++type) {
    for (LdFlavor f : {LdFlavor::vertical, LdFlavor::horizontal}) {
      const Structure z = induced_l_dendriform(corpus::lw_type(type), adj, f);
      o.expect(z.op("tri_r").is_zero() && z.op("tri_l").is_zero(),
               "type " + std::to_string(type) + " induces a nonzero table");
    }
  }
}

void c3_classification(Outcome& o) {
  const auto target = SearchTarget::rota_baxter(corpus::lw(Poly(1L)), Poly());
  const Ansatz ansatz = Ansatz::make(target.source(), target.target(), 1);
  const ConstraintSystem sys = generate_system(target, ansatz);
  const GridResult grid =
      grid_enumerate(target, ansatz, sys, {Rational(-1), Rational(0), Rational(1)});
  std::map<std::string, int> counts;
  int outside = 0;
  std::string example;
  for (const auto& point : grid.points) {
    const ModuleMap r = ansatz.instantiate(point);
    const auto type = classify_lw_operator(r);
    if (type) {
      ++counts[*type];
    } else {
      if (example.empty()) {
        example = r.to_string();
        std::replace(example.begin(), example.end(), '\n', ' ');
        while (!example.empty() && example.back() == ' ') example.pop_back();
      }
      ++outside;
    }
  }
  for (int type = 1; type <= 3; ++type) {
    o.expect(verify_family(target, lw_family(type, 1, target.source())).verdict,
             "family " + std::to_string(type) + " fails symbolically");
  }
  std::ostringstream tally;
  tally << grid.points.size() << " solutions";
  for (const auto& [k, v] : counts) tally << ", " << k << " " << v;
  tally << ", outside " << outside;
  o.expect(outside == 0, tally.str() + "; first outside point: " + example);
  if (o.ok) o.detail << tally.str();
}

struct GeneratedOperator {
  ModuleMap t;
  Bimodule m;
  std::string origin;
};

std::vector<GeneratedOperator> generated_o_operators(std::mt19937_64& rng) {
  std::vector<GeneratedOperator> out;
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int n = 0; n < 24; ++n) {
    const int type = n % 3 + 1;
    Poly g = Poly(static_cast<long>(coef(rng))) + Poly(static_cast<long>(coef(rng))) * P("lm") +
             Poly(static_cast<long>(coef(rng))) * P("lm^2");
    if (g.is_zero()) g = Poly(1L);
    const Structure lw = corpus::lw(g);
    const ModuleMap t = bind(corpus::lw_type(type), {{"h0", testing::random_rational(rng)},
                                                     {"h1", testing::random_rational(rng)},
                                                     {"h2", testing::random_rational(rng)},
                                                     {"a", nonzero(rng)}});
    out.push_back({t, adjoint_bimodule(lw), "lw type " + std::to_string(type)});
  }
  // O-operators for the dual of the adjoint bimodule, found by sampling.
  const Structure lw = corpus::lw(P("1 + lm"));
  const Bimodule dual = dual_bimodule(adjoint_bimodule(lw));
  for (int n = 0; n < 400 && out.size() < 30; ++n) {
    const ModuleMap t = testing::random_small_map(rng, dual.space, lw.module, 0.4);
    if (!t.is_zero() && check_o_operator(t, dual).verdict) {
      out.push_back({t, dual, "sampled dual-bimodule operator"});
    }
  }
  return out;
}

void c4_o_operators(Outcome& o) {
  std::mt19937_64 rng(4444);
  const auto ops = generated_o_operators(rng);
  o.expect(ops.size() >= 20, "only " + std::to_string(ops.size()) + " generated operators");
  for (const auto& [t, m, origin] : ops) {
    const std::string tag = origin + " " + t.to_string();
    o.expect(check_o_operator(t, m).verdict, "not an O-operator: " + tag);
    o.expect(graph_check(t, m).verdict, "graph check fails: " + tag);
    o.expect(lift_check(t, m).verdict, "lift check fails: " + tag);
    for (LdFlavor f : {LdFlavor::vertical, LdFlavor::horizontal}) {
      const Structure ld = induced_l_dendriform_tables(t, m, f);
      o.expect(check_axioms(ld).verdict, "induced structure fails: " + tag);
      const Structure h = horizontal(ld);
      const Structure v = vertical(ld);
      o.expect(check_axioms(h).verdict, "horizontal product fails: " + tag);
      o.expect(check_axioms(v).verdict, "vertical product fails: " + tag);
      const Structure ch = commutator_lie(h);
      o.expect(ch == commutator_lie(v), "commutators differ: " + tag);
      o.expect(check_axioms(ch).verdict, "commutator is not Lie: " + tag);
      const Structure tr = transpose_l_dendriform(ld);
      o.expect(horizontal(tr) == v && vertical(tr) == h, "transpose does not swap: " + tag);
    }
  }
  // The three characterisations also agree on maps that are not O-operators.
  const Structure lw = corpus::lw(P("1 + lm"));
  const Bimodule adj = adjoint_bimodule(lw);
  int negatives = 0;
  for (int n = 0; n < 20; ++n) {
    const ModuleMap t = testing::random_small_map(rng, adj.space, lw.module);
    const bool v = check_o_operator(t, adj).verdict;
    negatives += !v;
    o.expect(graph_check(t, adj).verdict == v && lift_check(t, adj).verdict == v,
             "characterisations disagree on " + t.to_string());
  }
  if (o.ok) o.detail << ops.size() << " O-operators, " << negatives << " non-examples";
}

void c5_sequation(Outcome& o) {
  std::mt19937_64 rng(5555);
  const auto algebras = testing::sequation_algebras();
  int truths = 0, cases = 30;
  for (int n = 0; n < cases; ++n) {
    const auto out = testing::sequation_case(rng, algebras[n % algebras.size()]);
    o.expect(out.s_equation == out.o_operator, "S-equation disagrees in case " + std::to_string(n));
    o.expect(out.round_trip, "round trip fails in case " + std::to_string(n));
    truths += out.o_operator;
  }
  o.expect(truths > 0 && truths < cases, "only one truth value exercised");
  int sym_truths = 0;
  for (int n = 0; n < cases; ++n) {
    const auto [se, op] = testing::symmetric_r_case(rng, algebras[n % algebras.size()]);
    o.expect(se == op, "symmetric r disagrees in case " + std::to_string(n));
    sym_truths += se;
  }
  if (o.ok) {
    o.detail << cases << " maps (" << truths << " solutions), " << cases << " symmetric tensors ("
             << sym_truths << " solutions)";
  }
}

void c6_canonical(Outcome& o) {
  for (LdFlavor f : {LdFlavor::vertical, LdFlavor::horizontal}) {
    const Structure ld = corpus::lw_type3_l_dendriform(corpus::lw_generic_g(), f);
    const auto [r, ambient] = canonical_r(ld, f);
    o.expect(ambient.rank() == 4, "ambient rank is not 4");
    const CheckReport rep = check_s_equation(ambient, r);
    o.expect(rep.verdict, std::string(to_string(f)) + ": " + rep.summary());
  }
}

void c7_nijenhuis(Outcome& o) {
  const Structure lw = corpus::lw(corpus::lw_generic_g());
  for (const Structure& s : {lw, corpus::virasoro(corpus::virasoro_c()), corpus::current_unit(),
                             corpus::current_dual_numbers()}) {
    o.expect(check_nijenhuis(ModuleMap::identity(s.module), s).verdict,
             "identity is not Nijenhuis");
  }
  const ModuleMap n = corpus::lw_square_zero();
  o.expect(n.after(n).is_zero(), "N does not square to zero");
  o.expect(check_nijenhuis(n, lw).verdict, "square-zero N is not Nijenhuis");
  o.expect(check_rota_baxter(n, lw, Poly()).verdict, "square-zero N is not Rota-Baxter");

  std::mt19937_64 rng(7777);
  const Bimodule adj = adjoint_bimodule(lw);
  int pairs = 0, compatible = 0;
  for (int k = 0; k < 8; ++k) {
    const auto sample = [&](int type) {
      return bind(corpus::lw_type(type), {{"h0", testing::random_rational(rng)},
                                          {"h1", testing::random_rational(rng)},
                                          {"h2", testing::random_rational(rng)},
                                          {"a", nonzero(rng)}});
    };
    // Two type-3 operators are compatible and invertible; a type-3 and a
    // type-2 operator with independent a are not compatible.
    const ModuleMap t1 = sample(3);
    const ModuleMap t2 = sample(3);
    const ModuleMap t3 = sample(2);
    for (const auto& [x, y, expect] : {std::tuple{t1, t2, true}, std::tuple{t1, t3, false}}) {
      ++pairs;
      const CompatibilityReport rep = check_compatible_o_operators(x, y, adj);
      o.expect(rep.agree(), "routes disagree on " + x.to_string() + " / " + y.to_string());
      if (!expect) continue;
      o.expect(rep.verdict(), "expected compatible pair rejected");
      if (!rep.verdict()) continue;
      ++compatible;
      o.expect(check_nijenhuis(quotient_nijenhuis(x, y), lw).verdict,
               "quotient is not Nijenhuis");
      const auto [s1, s2] = compatible_pair_from_o_operators(x, y, adj);
      o.expect(check_compatible_l_dendriform(s1, s2).verdict(),
               "induced pair is not compatible");
    }
  }
  // Symbolic families too.
  const CompatibilityReport fam = check_compatible_o_operators(corpus::lw_type(3), corpus::lw_type(1), adj);
  o.expect(fam.agree() && fam.verdict(), "type 3 and type 1 families");
  if (o.ok) o.detail << pairs + 1 << " pairs, " << compatible << " compatible invertible";
}

void c8_negative(Outcome& o) {
  const CheckReport bad = check_axioms(corpus::bad_current());
  o.expect(!bad.verdict && bad.axiom_id == "left_symmetry" &&
               bad.witness == std::vector<std::string>{"e1", "e2", "e2"} &&
               bad.residual_string() == "e1",
           "bad current: " + bad.summary());
  const CheckReport pert = check_rota_baxter(corpus::lw_perturbed_type3(), corpus::lw(Poly(1L)), Poly());
  o.expect(!pert.verdict && pert.witness == std::vector<std::string>{"L", "L"} &&
               pert.residual.coeffs.at(0).is_zero() && pert.residual.coeffs.at(1) == P("-4*lm*d"),
           "perturbed type 3: " + pert.summary());
  std::mt19937_64 rng(8888);
  for (int n = 0; n < 1000; ++n) {
    const auto failure = testing::poly_property_case(rng);
    if (failure) {
      o.expect(false, "polynomial case " + std::to_string(n) + ": " + *failure);
      break;
    }
  }
  if (o.ok) o.detail << "1000 polynomial cases";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "rank-one left-symmetric example and its commutator", 1.0, c1_rank_one},
      {2, "LW structure, Rota-Baxter families and induced tables", 2.0, c2_lw},
      {3, "grid classification of degree-1 Rota-Baxter operators on LW(1)", 60.0,
       c3_classification},
      {4, "O-operator characterisations and induced structures", 0.0, c4_o_operators},
      {5, "S-equation against O-operators on random maps", 120.0, c5_sequation},
      {6, "canonical S-equation solution, both flavors", 30.0, c6_canonical},
      {7, "Nijenhuis operators and compatible pairs", 0.0, c7_nijenhuis},
      {8, "negative controls and polynomial properties", 0.0, c8_negative},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.bound_seconds > 0 && secs >= c.bound_seconds) {
      std::ostringstream msg;
      msg << "runtime " << secs << " s exceeds " << c.bound_seconds << " s";
      o.expect(false, msg.str());
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ["
              << timing << "]";
    const std::string detail = o.detail.str();
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    failed += !o.ok;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
