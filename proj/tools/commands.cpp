#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "confalg/axioms.hpp"
#include "confalg/compatible.hpp"
#include "confalg/definition.hpp"
#include "confalg/derive.hpp"
#include "confalg/error.hpp"
#include "confalg/poly_parse.hpp"
#include "confalg/search.hpp"
#include "confalg/sequation.hpp"
#include "report.hpp"

namespace confalg::cli {

namespace {

Definition load(const GlobalOptions& g, const std::string& file) {
  LoadOptions opts;
  opts.max_degree = g.max_degree;
  return load_definition(file, opts);
}

CheckOptions check_options(const GlobalOptions& g) {
  CheckOptions o;
  o.threads = g.threads == 0 ? 1 : g.threads;
  return o;
}

Poly parse_in(const Definition& def, const std::string& text) {
  ParseScope scope;
  scope.parameters = std::set<std::string>(def.parameters.begin(), def.parameters.end());
  return parse_poly(text, scope);
}

CheckReport renamed(CheckReport r, std::string subject) {
  r.subject = std::move(subject);
  return r;
}

int finish(const GlobalOptions& g, const Report& report, std::ostream& out) {
  out << report.render(g.json);
  return report.verdict() ? 0 : 1;
}

/// The bimodule an operator acts on: the file's bimodule for maps on V,
/// otherwise the adjoint bimodule.
Bimodule bimodule_for(const Definition& def, const OperatorDef& op) {
  if (op.on_space) return *def.bimodule;
  if (def.structure.kind != Kind::left_symmetric) {
    throw InputError("operator tests need a left-symmetric structure");
  }
  return adjoint_bimodule(def.structure);
}

ModuleMap map_on_base(const Definition& def, const std::string& name) {
  if (def.operator_def(name).on_space) {
    throw InputError("operator '" + name + "' acts on the bimodule space, not on A");
  }
  return def.module_map(name);
}

Json tensor3_json(const TensorElement3& t) {
  Json list = Json::array();
  for (const auto& [key, c] : t.terms()) {
    list.push_back(Json{{"slots", {t.base().basis[key[0]], t.base().basis[key[1]],
                                   t.base().basis[key[2]]}},
                        {"coeff", c.to_string()}});
  }
  return list;
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const Poly p = parse_poly(item);
      if (!p.is_constant()) throw InputError("not a number");
      out.push_back(p.constant_term());
    } catch (const InputError&) {
      throw InputError("grid value '" + item + "' is not a rational number");
    }
  }
  if (out.empty()) throw InputError("grid must list at least one value");
  return out;
}

std::string map_line(const ModuleMap& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!out.empty()) out += ", ";
    out += m.source().basis[i] + " -> " + m.image(i).to_string(m.target());
  }
  return out;
}

Json map_json(const ModuleMap& m) {
  Json j = Json::object();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::object();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (!m.at(i, k).is_zero()) row[m.target().basis[k]] = m.at(i, k).to_string();
    }
    j[m.source().basis[i]] = row;
  }
  return j;
}

}  // namespace

int run_check(const GlobalOptions& g, const CheckArgs& a, std::ostream& out) {
  const Definition def = load(g, a.file);
  Structure s = def.structure;
  if (!a.kind.empty()) {
    s.kind = parse_kind(a.kind);
    s.validate();
  }
  const CheckOptions opts = check_options(g);
  Report report("check", a.file);
  report.add(renamed(check_axioms(s, opts), "axioms." + std::string(to_string(s.kind))));
  if (def.bimodule && s.kind == Kind::left_symmetric) {
    report.add(check_bimodule(*def.bimodule, opts));
  }
  if (s.kind == Kind::left_symmetric) {
    for (const auto& [name, b] : def.forms) {
      report.add(renamed(check_cocycle(b, s, opts), "cocycle." + name));
    }
  }
  return finish(g, report, out);
}

int run_operator(const GlobalOptions& g, const OperatorArgs& a, std::ostream& out) {
  const Definition def = load(g, a.file);
  const CheckOptions opts = check_options(g);
  Report report("operator", a.file);
  report.add_field("operator", a.op);
  report.add_field("test", a.test);
  const OperatorDef& op = def.operator_def(a.op);
  if (a.test == "o") {
    report.add(check_o_operator(def.module_map(a.op), bimodule_for(def, op), opts));
  } else if (a.test == "rb") {
    const Poly weight = parse_in(def, a.weight);
    report.add_field("weight", weight.to_string());
    report.add(check_rota_baxter(map_on_base(def, a.op), def.structure, weight, opts));
  } else if (a.test == "nijenhuis") {
    report.add(check_nijenhuis(map_on_base(def, a.op), def.structure, opts));
  } else if (a.test == "compatible") {
    if (a.with.empty()) throw InputError("--test compatible needs --with NAME");
    const OperatorDef& other = def.operator_def(a.with);
    if (other.on_space != op.on_space) throw InputError("the two operators have different domains");
    const CompatibilityReport c = check_compatible_o_operators(
        def.module_map(a.op), def.module_map(a.with), bimodule_for(def, op), opts);
    report.add(renamed(c.mixed, "compatible.mixed"));
    report.add(renamed(c.symbolic, "compatible.symbolic"));
    report.add_field("routes_agree", c.agree());
    if (!c.agree()) report.add_line("warning: the two compatibility routes disagree");
  } else {
    throw InputError("unknown operator test '" + a.test + "'");
  }
  return finish(g, report, out);
}

int run_derive(const GlobalOptions& g, const DeriveArgs& a, std::ostream& out) {
  const Definition def = load(g, a.file);
  const Structure& s = def.structure;
  Definition result;
  result.parameters = def.parameters;
  std::vector<std::string> notes;
  const auto need_op = [&]() -> const std::string& {
    if (a.op.empty()) throw InputError("--what " + a.what + " needs --op NAME");
    return a.op;
  };
  const auto bimodule_or_adjoint = [&]() {
    if (def.bimodule) return *def.bimodule;
    if (s.kind != Kind::left_symmetric) throw InputError("a left-symmetric structure is required");
    return adjoint_bimodule(s);
  };

  if (a.what == "semidirect") {
    if (!def.bimodule) throw InputError("--what semidirect needs a bimodule section");
    result.structure = semidirect_product(*def.bimodule, check_options(g));
  } else if (a.what == "dual") {
    const DualFlavor flavor = parse_dual_flavor(a.flavor.empty() ? "ls-dual" : a.flavor);
    if (flavor == DualFlavor::ls_dual) {
      const Bimodule m = bimodule_or_adjoint();
      result.structure = m.base;
      result.bimodule = dual_bimodule(m);
    } else {
      Bimodule m = dual_bimodule(s, flavor);
      result.structure = m.base;
      result.bimodule = std::move(m);
    }
  } else if (a.what == "induced-ld") {
    const std::string& name = need_op();
    const OperatorDef& op = def.operator_def(name);
    const LdFlavor flavor = parse_ld_flavor(a.flavor.empty() ? "vertical" : a.flavor);
    result.structure = induced_l_dendriform(def.module_map(name), bimodule_for(def, op), flavor,
                                            check_options(g));
  } else if (a.what == "deformed") {
    result.structure = deformed_product(s, map_on_base(def, need_op()));
  } else if (a.what == "pseudo-hessian") {
    if (a.form.empty()) throw InputError("--what pseudo-hessian needs --form NAME");
    result.structure = pseudo_hessian_structure(s, def.form(a.form), &notes);
  } else if (a.what == "canonical-r") {
    const LdFlavor flavor = parse_ld_flavor(a.flavor.empty() ? "vertical" : a.flavor);
    auto [r, ambient] = canonical_r(s, flavor);
    result.structure = std::move(ambient);
    result.tensors.emplace("r", std::move(r));
  } else if (a.what == "r-from-t") {
    const std::string& name = need_op();
    const OperatorDef& op = def.operator_def(name);
    const Bimodule m = bimodule_for(def, op);
    result.structure = s_equation_ambient(m);
    result.tensors.emplace("r", r_from_t(op.map, m));
  } else {
    result.structure = derive_structure(s, parse_conversion(a.what));
  }

  const std::string text = dump_definition(result);
  if (a.out.empty()) {
    out << text;
  } else {
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw InputError("cannot write '" + a.out + "'");
    file << text;
  }
  if (!a.out.empty() || !notes.empty()) {
    Report report("derive", a.file);
    report.add_field("what", a.what);
    if (!a.out.empty()) report.add_field("out", a.out);
    if (!notes.empty()) report.add_field("notes", notes);
    for (const auto& n : notes) report.add_line("note: " + n);
    if (!a.out.empty()) out << report.render(g.json);
  }
  return 0;
}

int run_sequation(const GlobalOptions& g, const SequationArgs& a, std::ostream& out) {
  const Definition def = load(g, a.file);
  Report report("sequation", a.file);
  if (a.canonical == !a.r.empty()) throw InputError("give exactly one of --r NAME and --canonical");
  if (!a.r.empty()) {
    const TensorElement2& r = def.tensor(a.r);
    const TensorElement3 value = double_bracket(def.structure, r);
    report.add(renamed(check_s_equation(def.structure, r), "s_equation." + a.r));
    report.add_field("symmetric", is_symmetric(r));
    report.add_field("double_bracket", tensor3_json(value));
    report.add_line("r is " + std::string(is_symmetric(r) ? "" : "not ") + "symmetric");
  } else {
    std::vector<LdFlavor> flavors;
    if (a.flavor.empty()) {
      flavors = {LdFlavor::vertical, LdFlavor::horizontal};
    } else {
      flavors = {parse_ld_flavor(a.flavor)};
    }
    for (LdFlavor f : flavors) {
      auto [r, ambient] = canonical_r(def.structure, f);
      report.add(renamed(check_s_equation(ambient, r), "s_equation." + std::string(to_string(f))));
      report.add_line(std::string(to_string(f)) + ": r = " + r.to_string());
    }
  }
  return finish(g, report, out);
}

int run_search(const GlobalOptions& g, const SearchArgs& a, std::ostream& out) {
  const Definition def = load(g, a.file);
  const Structure& s = def.structure;
  if (a.degree < 0) throw InputError("--degree must be nonnegative");
  if (a.degree > g.max_degree) throw InputError("--degree exceeds --max-degree");
  SearchTarget target;
  switch (parse_search_kind(a.test)) {
    case SearchKind::rota_baxter:
      target = SearchTarget::rota_baxter(s, parse_in(def, a.weight));
      break;
    case SearchKind::nijenhuis:
      target = SearchTarget::nijenhuis(s);
      break;
    case SearchKind::o_operator:
      if (def.bimodule) {
        target = SearchTarget::o_operator(*def.bimodule);
      } else {
        target = SearchTarget::o_operator(adjoint_bimodule(s));
      }
      break;
  }
  const Ansatz ansatz = Ansatz::make(target.source(), target.target(), a.degree);
  const ConstraintSystem sys = generate_system(target, ansatz);
  const GridResult grid = grid_enumerate(target, ansatz, sys, parse_grid(a.grid));

  Report report("search", a.file);
  report.add_field("test", std::string(to_string(target.kind)));
  report.add_field("degree", a.degree);
  std::vector<std::string> unknowns;
  for (VarId v : sys.unknowns) unknowns.push_back(VarRegistry::global().name(v));
  std::vector<std::string> free;
  for (VarId v : grid.free_unknowns) free.push_back(VarRegistry::global().name(v));
  std::vector<std::string> equations;
  for (const auto& e : sys.equations) equations.push_back(e.to_string());
  report.add_field("unknowns", unknowns);
  report.add_field("free_unknowns", free);
  report.add_field("equations", equations);
  report.add_line("unknowns: " + std::to_string(unknowns.size()) +
                  ", equations: " + std::to_string(equations.size()) +
                  ", free: " + std::to_string(free.size()));
  report.add_line("solutions: " + std::to_string(grid.points.size()));

  const bool classify = a.classify == "lw";
  if (!a.classify.empty() && !classify) throw InputError("unknown classification '" + a.classify + "'");
  if (classify && (target.kind != SearchKind::rota_baxter || s.rank() != 2)) {
    throw InputError("--classify lw applies to rank-2 Rota-Baxter searches");
  }

  Json points = Json::array();
  std::size_t outside = 0;
  for (const auto& p : grid.points) {
    const ModuleMap m = ansatz.instantiate(p);
    Json entry{{"map", map_json(m)}};
    std::string line = "  " + map_line(m);
    if (classify) {
      const auto family = classify_lw_operator(m);
      entry["family"] = family ? Json(*family) : Json(nullptr);
      line += "  [" + (family ? *family : std::string("outside")) + "]";
      if (!family) ++outside;
    }
    points.push_back(std::move(entry));
    report.add_line(line);
  }
  report.add_field("points", points);

  if (classify) {
    report.add_field("outside_families", outside);
    std::mt19937_64 rng(g.seed);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    for (int type = 1; type <= 3; ++type) {
      const ModuleMap family = lw_family(type, 2, s.module);
      report.add(renamed(verify_family(target, family), "family.type" + std::to_string(type)));
      // Spot checks at random rational instantiations.
      bool spot_ok = true;
      for (int n = 0; n < 10; ++n) {
        std::map<VarId, Poly> bind;
        for (const char* name : {"h0", "h1", "h2", "a"}) {
          int top = num(rng);
          if (std::string(name) == "a" && top == 0) top = 1;
          Rational value(top, den(rng));
          value.canonicalize();
          bind.emplace(*VarRegistry::global().find(name), Poly(value));
        }
        if (!target.check(family.substitute(bind)).verdict) spot_ok = false;
      }
      CheckReport spot;
      spot.subject = "family.type" + std::to_string(type) + ".spot_checks";
      spot.verdict = spot_ok;
      spot.axiom_id = "rota_baxter";
      report.add(spot);
    }
    if (outside > 0) {
      report.add_line(std::to_string(outside) + " solution(s) lie outside the listed families");
      report.set_verdict(false);
    }
  }
  return finish(g, report, out);
}

}  // namespace confalg::cli
