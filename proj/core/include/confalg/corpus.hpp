#pragma once

#include "confalg/bilinear_form.hpp"
#include "confalg/operators.hpp"
#include "confalg/tensor.hpp"

/// Ready-made structures, operators and forms used by the examples, the
/// test suites and the benchmarks. Symbolic constants are registered as
/// parameters of the global registry under the names given below.
namespace confalg::corpus {

/// Rank one, a o_lm a = (lm + d + c) a; pass Poly::var("c") for symbolic c.
Structure virasoro(const Poly& c);
/// The parameter c.
Poly virasoro_c();

/// Rank two with basis (L, W), L o_lm L = g(-lm) lm W and all other products
/// zero; g is given as a polynomial in lm.
Structure lw(const Poly& g);
/// g0 + g1 lm + g2 lm^2 with parameters g0, g1, g2.
Poly lw_generic_g();

/// Rota-Baxter families on lw with h = h0 + h1 d + h2 d^2 and parameter a.
ModuleMap lw_type(int type);
/// R(L) = 2 L, R(W) = (1 + d) W: not a Rota-Baxter operator of lw(1).
ModuleMap lw_perturbed_type3();
/// R(L) = L, R(W) = 0: not a Rota-Baxter operator of lw(1).
ModuleMap lw_bad_r();
/// N(L) = W, N(W) = 0; squares to zero.
ModuleMap lw_square_zero();

/// The l-dendriform structure induced on lw(g) by the type-3 family with
/// h = 0 (parameter a).
Structure lw_type3_l_dendriform(const Poly& g, LdFlavor flavor);

/// Current algebra C[d] (x) C with e e = e.
Structure current_unit();
/// Current algebra over C[x]/(x^2) with basis (u, x), u the unit.
Structure current_dual_numbers();
/// e1 e2 = e1 on rank two, a current product that is not left-symmetric.
Structure bad_current();

/// B(e, e) = 1 on current_unit.
BilinearForm unit_form();
/// B(u, x) = B(x, u) = 1 on current_dual_numbers.
BilinearForm dual_numbers_form();

}  // namespace confalg::corpus
