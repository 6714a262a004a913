#pragma once

#include "confalg/bimodule.hpp"
#include "confalg/check.hpp"
#include "confalg/module_map.hpp"

namespace confalg {

/// rho = l - r, a representation of the sub-adjacent Lie algebra on V.
ProductTable representation_rho(const Bimodule& m);

/// [T u_lm T v] = T(rho(T u)_lm v - rho(T v)_{-d-lm} u) for T: V -> g, with
/// rho a table of shape (rank g, rank V, rank V).
CheckReport check_lie_o_operator(const ModuleMap& t, const Structure& g, const FreeModule& space,
                                 const ProductTable& rho, const CheckOptions& options = {});
/// Weight-zero Rota-Baxter operator of a Lie structure (adjoint representation).
CheckReport check_lie_rota_baxter(const ModuleMap& r, const Structure& g,
                                  const CheckOptions& options = {});

/// a o b = [R(a)_lm b], left-symmetric when R is a Rota-Baxter operator.
Structure lie_rb_left_symmetric(const ModuleMap& r, const Structure& g);

/// For commuting Rota-Baxter operators R1, R2 of g:
/// a |> b = [R1 R2(a)_lm b], a <| b = [R2(a)_lm R1(b)]. Throws when
/// R1 R2 != R2 R1.
Structure commuting_pair_l_dendriform(const ModuleMap& r1, const ModuleMap& r2,
                                      const Structure& g);

}  // namespace confalg
