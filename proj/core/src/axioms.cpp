#include "confalg/axioms.hpp"

#include <array>
#include <set>

#include "confalg/error.hpp"

namespace confalg {

namespace {

NestedTerm L(int coef, const char* inner, const char* outer, bool swapped = false) {
  return {coef, true, swapped, inner, outer};
}

NestedTerm R(int coef, const char* inner, const char* outer, bool swapped = false) {
  return {coef, false, swapped, inner, outer};
}

std::vector<Law> make_laws(Kind kind) {
  switch (kind) {
    case Kind::raw:
      return {};
    case Kind::lie:
      // [a_lm [b_mu c]] - [[a_lm b]_{lm+mu} c] - [b_mu [a_lm c]]
      return {{"jacobi",
               {R(1, "bracket", "bracket"), L(-1, "bracket", "bracket"),
                R(-1, "bracket", "bracket", true)}}};
    case Kind::left_symmetric:
      return {{"left_symmetry",
               {L(1, "circ", "circ"), R(-1, "circ", "circ"), L(-1, "circ", "circ", true),
                R(1, "circ", "circ", true)}}};
    case Kind::associative:
      return {{"associativity", {L(1, "circ", "circ"), R(-1, "circ", "circ")}}};
    case Kind::dendriform:
      return {
          // a > (b > c) = (a > b) > c + (a < b) > c
          {"dendriform.1",
           {R(1, "succ", "succ"), L(-1, "succ", "succ"), L(-1, "prec", "succ")}},
          // (a < b) < c = a < (b > c) + a < (b < c)
          {"dendriform.2",
           {L(1, "prec", "prec"), R(-1, "succ", "prec"), R(-1, "prec", "prec")}},
          // (a > b) < c = a > (b < c)
          {"dendriform.3", {L(1, "succ", "prec"), R(-1, "prec", "succ")}},
      };
    case Kind::l_dendriform:
      return {
          // a|>(b|>c) - (a|>b)|>c - (a<|b)|>c - b|>(a|>c) + (b|>a)|>c + (b<|a)|>c
          {"l_dendriform.1",
           {R(1, "tri_r", "tri_r"), L(-1, "tri_r", "tri_r"), L(-1, "tri_l", "tri_r"),
            R(-1, "tri_r", "tri_r", true), L(1, "tri_r", "tri_r", true),
            L(1, "tri_l", "tri_r", true)}},
          // a|>(b<|c) - (a|>b)<|c - b<|(a|>c) - b<|(a<|c) + (b<|a)<|c
          {"l_dendriform.2",
           {R(1, "tri_l", "tri_r"), L(-1, "tri_r", "tri_l"), R(-1, "tri_r", "tri_l", true),
            R(-1, "tri_l", "tri_l", true), L(1, "tri_l", "tri_l", true)}},
      };
    case Kind::quadri:
      return {
          {"quadri(1,1)", {L(1, "nw", "nw"), R(-1, "star", "nw")}},
          {"quadri(1,2)", {L(1, "ne", "nw"), R(-1, "prec", "ne")}},
          {"quadri(1,3)", {L(1, "wedge", "ne"), R(-1, "succ", "ne")}},
          {"quadri(2,1)", {L(1, "sw", "nw"), R(-1, "wedge", "sw")}},
          {"quadri(2,2)", {L(1, "vee", "ne"), R(-1, "ne", "se")}},
          {"quadri(2,3)", {L(1, "se", "nw"), R(-1, "nw", "se")}},
          {"quadri(3,1)", {L(1, "prec", "sw"), R(-1, "vee", "sw")}},
          {"quadri(3,2)", {L(1, "star", "se"), R(-1, "se", "se")}},
          {"quadri(3,3)", {L(1, "succ", "sw"), R(-1, "sw", "se")}},
      };
  }
  return {};
}

/// Op tables specialised at lm, mu and lm+mu, built once per check.
class LambdaBank {
 public:
  LambdaBank(const std::map<std::string, ProductTable>& ops, const std::vector<Law>& laws) {
    const auto& reg = VarRegistry::global();
    lam_ = Poly::var(var::lm, reg);
    mu_ = Poly::var(var::mu, reg);
    sum_ = lam_ + mu_;
    std::set<std::string> names;
    for (const auto& law : laws) {
      for (const auto& t : law.terms) {
        names.insert(t.inner);
        names.insert(t.outer);
      }
    }
    for (const auto& name : names) {
      auto it = ops.find(name);
      if (it == ops.end()) throw InputError("identity refers to missing operation '" + name + "'");
      tables_.emplace(name, std::array<ProductTable, 3>{it->second, it->second.at_lambda(mu_),
                                                        it->second.at_lambda(sum_)});
    }
  }

  Element residual(const Law& law, std::size_t p, std::size_t q, std::size_t r) const {
    Element acc;
    for (const auto& t : law.terms) {
      const std::size_t x = t.swapped ? q : p;
      const std::size_t y = t.swapped ? p : q;
      const int lx = t.swapped ? 1 : 0;
      const int ly = t.swapped ? 0 : 1;
      const auto& inner = tables_.at(t.inner);
      const auto& outer = tables_.at(t.outer);
      Element value;
      if (t.left_nested) {
        const Element xy = inner[lx].entry(x, y);
        value = eval_right_basis(outer[2], xy, r, sum_);
      } else {
        const Element yc = inner[ly].entry(y, r);
        value = eval_left_basis(outer[lx], x, yc, lx == 0 ? lam_ : mu_);
      }
      if (acc.size() == 0) acc = Element(value.size());
      if (t.coef == 1) {
        acc += value;
      } else if (t.coef == -1) {
        acc -= value;
      } else {
        acc += value.scaled(Poly(static_cast<long>(t.coef)));
      }
    }
    return acc;
  }

 private:
  Poly lam_, mu_, sum_;
  std::map<std::string, std::array<ProductTable, 3>> tables_;
};

}  // namespace

const std::vector<Law>& laws_for(Kind kind) {
  static const std::map<Kind, std::vector<Law>> cache = [] {
    std::map<Kind, std::vector<Law>> m;
    for (Kind k : {Kind::raw, Kind::lie, Kind::left_symmetric, Kind::associative, Kind::dendriform,
                   Kind::l_dendriform, Kind::quadri}) {
      m.emplace(k, make_laws(k));
    }
    return m;
  }();
  return cache.at(kind);
}

std::map<std::string, ProductTable> with_derived_ops(const Structure& s) {
  auto ops = s.ops;
  if (s.kind == Kind::quadri) {
    const auto& nw = s.op("nw");
    const auto& sw = s.op("sw");
    const auto& ne = s.op("ne");
    const auto& se = s.op("se");
    ops["vee"] = sw + se;
    ops["wedge"] = nw + ne;
    ops["succ"] = ne + se;
    ops["prec"] = nw + sw;
    ops["star"] = nw + sw + ne + se;
  }
  return ops;
}

std::vector<Law> polarize(const std::vector<Law>& laws) {
  std::vector<Law> out;
  for (const auto& law : laws) {
    Law mixed{law.id + ".mixed", {}};
    for (const auto& t : law.terms) {
      NestedTerm a = t;
      a.inner += "#1";
      a.outer += "#2";
      NestedTerm b = t;
      b.inner += "#2";
      b.outer += "#1";
      mixed.terms.push_back(a);
      mixed.terms.push_back(b);
    }
    out.push_back(std::move(mixed));
  }
  return out;
}

Element law_residual(const std::map<std::string, ProductTable>& ops, const Law& law,
                     std::size_t p, std::size_t q, std::size_t r) {
  return LambdaBank(ops, {law}).residual(law, p, q, r);
}

CheckReport check_laws(const std::string& subject, const FreeModule& module,
                       const std::map<std::string, ProductTable>& ops,
                       const std::vector<Law>& laws, const CheckOptions& options) {
  const LambdaBank bank(ops, laws);
  return check_tuples(
      subject, {&module, &module, &module}, module,
      [&](const std::vector<std::size_t>& t) -> std::optional<Violation> {
        for (const auto& law : laws) {
          Element res = bank.residual(law, t[0], t[1], t[2]);
          if (!res.is_zero()) return Violation{law.id, std::move(res)};
        }
        return std::nullopt;
      },
      options);
}

CheckReport check_skew_symmetry(const FreeModule& module, const ProductTable& bracket,
                                const CheckOptions& options) {
  const ProductTable sum = bracket + opposite(bracket);
  return check_tuples(
      "lie", {&module, &module}, module,
      [&](const std::vector<std::size_t>& t) -> std::optional<Violation> {
        Element res = sum.entry(t[0], t[1]);
        if (res.is_zero()) return std::nullopt;
        return Violation{"skew_symmetry", std::move(res)};
      },
      options);
}

CheckReport check_axioms_as(const Structure& s, Kind kind, const CheckOptions& options) {
  if (kind == Kind::raw) throw InputError("raw structures have no identities to check");
  Structure view = s;
  view.kind = kind;
  view.validate();
  const std::string subject(to_string(kind));
  if (kind == Kind::lie) {
    CheckReport skew = check_skew_symmetry(view.module, view.op("bracket"), options);
    if (!skew.verdict) return skew;
  }
  return check_laws(subject, view.module, with_derived_ops(view), laws_for(kind), options);
}

CheckReport check_axioms(const Structure& s, const CheckOptions& options) {
  return check_axioms_as(s, s.kind, options);
}

}  // namespace confalg
