#include "confalg/corpus.hpp"

#include "confalg/search.hpp"

namespace confalg::corpus {

namespace {

Poly param(const char* name) { return Poly::var(VarRegistry::global().parameter(name)); }
Poly lam() { return Poly::var(var::lm); }
Poly dd() { return Poly::var(var::d); }

FreeModule lw_module() { return FreeModule(std::vector<std::string>{"L", "W"}); }

}  // namespace

Poly virasoro_c() { return param("c"); }

Structure virasoro(const Poly& c) {
  ProductTable t = ProductTable::square(1);
  t.at(0, 0, 0) = lam() + dd() + c;
  return Structure(FreeModule(std::vector<std::string>{"a"}), Kind::left_symmetric,
                   {{"circ", t}});
}

Structure lw(const Poly& g) {
  ProductTable t = ProductTable::square(2);
  t.at(0, 0, 1) = g.substitute({{var::lm, -lam()}}) * lam();
  return Structure(lw_module(), Kind::left_symmetric, {{"circ", t}});
}

Poly lw_generic_g() { return param("g0") + param("g1") * lam() + param("g2") * lam().pow(2); }

ModuleMap lw_type(int type) { return lw_family(type, 2, lw_module()); }

ModuleMap lw_perturbed_type3() {
  ModuleMap r(lw_module(), lw_module());
  r.at(0, 0) = Poly(2L);
  r.at(1, 1) = Poly(1L) + dd();
  return r;
}

ModuleMap lw_bad_r() {
  ModuleMap r(lw_module(), lw_module());
  r.at(0, 0) = Poly(1L);
  return r;
}

ModuleMap lw_square_zero() {
  ModuleMap n(lw_module(), lw_module());
  n.at(0, 1) = Poly(1L);
  return n;
}

Structure lw_type3_l_dendriform(const Poly& g, LdFlavor flavor) {
  ModuleMap r(lw_module(), lw_module());
  const Poly a = param("a");
  r.at(0, 0) = a.scaled(2);
  r.at(1, 1) = a;
  return induced_l_dendriform_tables(r, adjoint_bimodule(lw(g)), flavor);
}

Structure current_unit() {
  return current_structure({{{Rational(1)}}}, Kind::left_symmetric,
                           FreeModule(std::vector<std::string>{"e"}));
}

Structure current_dual_numbers() {
  // 1*1 = 1, 1*x = x*1 = x, x*x = 0.
  return current_structure({{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, Kind::left_symmetric,
                           FreeModule(std::vector<std::string>{"u", "x"}));
}

Structure bad_current() {
  return current_structure({{{0, 0}, {1, 0}}, {{0, 0}, {0, 0}}}, Kind::left_symmetric,
                           FreeModule::numbered(2));
}

BilinearForm unit_form() {
  BilinearForm b(current_unit().module);
  b.at(0, 0) = Poly(1L);
  return b;
}

BilinearForm dual_numbers_form() {
  BilinearForm b(current_dual_numbers().module);
  b.at(0, 1) = Poly(1L);
  b.at(1, 0) = Poly(1L);
  return b;
}

}  // namespace confalg::corpus
