#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confalg/operators.hpp"

namespace confalg {

enum class SearchKind { rota_baxter, nijenhuis, o_operator };
/// "rb", "nijenhuis" or "o".
SearchKind parse_search_kind(std::string_view name);
std::string_view to_string(SearchKind kind);

/// The identity a candidate map is tested against.
struct SearchTarget {
  SearchKind kind = SearchKind::rota_baxter;
  Structure structure;
  /// Used by o_operator only.
  Bimodule bimodule;
  Poly weight;

  static SearchTarget rota_baxter(const Structure& s, const Poly& weight);
  static SearchTarget nijenhuis(const Structure& s);
  static SearchTarget o_operator(const Bimodule& m);

  const FreeModule& source() const;
  const FreeModule& target() const;
  /// Residual of the identity on the basis pair (p, q).
  Element residual(const ModuleMap& t, std::size_t p, std::size_t q) const;
  CheckReport check(const ModuleMap& t, const CheckOptions& options = {}) const;
};

/// T(v_i) = sum_j sum_{k <= D} c_i_j_k d^k e_j with one parameter per
/// coefficient (indices 1-based in the parameter names).
struct Ansatz {
  FreeModule source;
  FreeModule target;
  int degree = 0;
  std::vector<VarId> unknowns;
  ModuleMap map;

  static Ansatz make(const FreeModule& source, const FreeModule& target, int degree);
  /// Binds every unknown to the corresponding value.
  ModuleMap instantiate(const std::vector<Rational>& values) const;
};

/// Polynomial equations in the ansatz unknowns, one per monomial in the
/// remaining variables (lm, d and structure parameters) of each residual
/// coefficient; normalized to leading coefficient 1 and deduplicated.
struct ConstraintSystem {
  std::vector<VarId> unknowns;
  std::vector<Poly> equations;

  bool vanishes_at(const std::vector<Rational>& values) const;
};

ConstraintSystem generate_system(const SearchTarget& target, const Ansatz& ansatz);
/// Builds the ansatz of the given degree first; throws InputError for D < 0.
ConstraintSystem generate_system(const SearchTarget& target, int degree);

/// Runs the checker with the family's parameters left symbolic.
CheckReport verify_family(const SearchTarget& target, const ModuleMap& family,
                          const CheckOptions& options = {});

struct GridOptions {
  /// Maximal number of grid points per independent block of unknowns.
  std::size_t block_cap = 19683;
  /// Maximal number of combined solution points.
  std::size_t total_cap = 1000000;
};

struct GridResult {
  std::vector<VarId> unknowns;
  /// Unknowns absent from every equation; they range over the whole grid.
  std::vector<VarId> free_unknowns;
  /// Solution points in the order of `unknowns`, sorted lexicographically.
  std::vector<std::vector<Rational>> points;
};

/// Exhaustive search over values^unknowns. Unknowns are split into blocks
/// that share no equation, each block is enumerated separately and the
/// block solutions are combined; every combined point is re-validated with
/// the direct checker. Throws InputError if a block or the result exceeds
/// its cap.
GridResult grid_enumerate(const SearchTarget& target, const Ansatz& ansatz,
                          const ConstraintSystem& system, const std::vector<Rational>& values,
                          const GridOptions& options = {});

/// Member of the weight-zero Rota-Baxter classification on the rank-2
/// algebra with basis (L, W) and L o L = g(-lm) lm W:
///   type1: R(L) = h W, R(W) = 0, h != 0
///   type2: R(L) = h W, R(W) = a W, a a nonzero constant
///   type3: R(L) = 2a L + h W, R(W) = a W, a a nonzero constant
/// Returns "zero", "type1", "type2", "type3" or nothing.
std::optional<std::string> classify_lw_operator(const ModuleMap& r);

/// The families above with h = h0 + h1 d + ... + h_deg d^deg and a as
/// parameters named with `prefix` ("h0", "a", ...).
ModuleMap lw_family(int type, int h_degree, const FreeModule& module,
                    const std::string& prefix = "");

}  // namespace confalg
