#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "confalg/bimodule.hpp"
#include "confalg/check.hpp"
#include "confalg/module_map.hpp"

namespace confalg {

/// T(u) o_lm T(v) - T(l(T u)_lm v + r(T v)_{-d-lm} u) for u = v_p, v = v_q.
Element o_operator_residual(const ModuleMap& t, const Bimodule& m, std::size_t p, std::size_t q);
CheckReport check_o_operator(const ModuleMap& t, const Bimodule& m,
                             const CheckOptions& options = {});

/// R(e_p) o_lm R(e_q) - R(R(e_p) o_lm e_q + e_p o_lm R(e_q) + q e_p o_lm e_q).
Element rota_baxter_residual(const ModuleMap& r, const Structure& s, const Poly& weight,
                             std::size_t p, std::size_t q);
/// N(e_p) o_lm N(e_q) - N(N(e_p) o_lm e_q + e_p o_lm N(e_q) - N(e_p o_lm e_q)).
Element nijenhuis_residual(const ModuleMap& n, const Structure& s, std::size_t p, std::size_t q);

/// R(a) o R(b) = R(R(a) o b + a o R(b) + q a o b) on basis pairs; the weight
/// may be a rational constant or a parameter polynomial.
CheckReport check_rota_baxter(const ModuleMap& r, const Structure& s, const Poly& weight,
                              const CheckOptions& options = {});

/// N(a) o N(b) = N(N(a) o b + a o N(b) - N(a o b)) on basis pairs.
CheckReport check_nijenhuis(const ModuleMap& n, const Structure& s,
                            const CheckOptions& options = {});
/// a o^N b = N(a) o b + a o N(b) - N(a o b), returned unverified.
Structure deformed_product(const Structure& s, const ModuleMap& n);

/// One clause of the Nijenhuis / Rota-Baxter correspondence:
/// N^2 = 0 (weight 0), N^2 = N (weight -1), N^2 = id (N + id weight -2 and
/// N - id weight 2).
struct RelationClause {
  std::string hypothesis;
  bool applies = false;
  bool nijenhuis = false;
  std::vector<std::pair<std::string, bool>> rota_baxter;
  bool consistent = true;
};
std::vector<RelationClause> nijenhuis_rb_relations(const ModuleMap& n, const Structure& s);

/// Closure of the graph {(T v, v)} in the semidirect product: for graph
/// generators g_p, g_q the A-part of g_p o g_q must equal T of its V-part.
CheckReport graph_check(const ModuleMap& t, const Bimodule& m, const CheckOptions& options = {});
/// T^(a, u) = (T u, 0) on A + V.
ModuleMap lift(const ModuleMap& t, const Bimodule& m);
/// Weight-zero Rota-Baxter check of the lift on the semidirect product.
CheckReport lift_check(const ModuleMap& t, const Bimodule& m, const CheckOptions& options = {});

enum class LdFlavor { vertical, horizontal };
LdFlavor parse_ld_flavor(std::string_view name);
std::string_view to_string(LdFlavor f);

/// L-dendriform structure on V induced by T (not verified):
///   vertical:   u |> v = l(T u)_lm v,  u <| v = -r(T u)_lm v
///   horizontal: u |> v = l(T u)_lm v,  u <| v = r(T v)_{-lm-d} u
Structure induced_l_dendriform_tables(const ModuleMap& t, const Bimodule& m, LdFlavor flavor);
/// As above, but refuses maps that are not O-operators.
Structure induced_l_dendriform(const ModuleMap& t, const Bimodule& m, LdFlavor flavor,
                               const CheckOptions& options = {});

/// f(x_p o x_q) = f(x_p) o' f(x_q) on basis pairs of the source.
CheckReport check_homomorphism(const ModuleMap& f, const FreeModule& source,
                               const ProductTable& source_op, const FreeModule& target,
                               const ProductTable& target_op, const CheckOptions& options = {});

/// For invertible T: a |> b = T(l(a)_lm T^-1 b), a <| b = -T(r(a)_lm T^-1 b)
/// on A. Genericity conditions of the inverse are appended to `notes`.
Structure invertible_o_compatible_structure(const ModuleMap& t, const Bimodule& m,
                                            std::vector<std::string>* notes = nullptr);

}  // namespace confalg
