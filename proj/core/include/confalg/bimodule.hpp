#pragma once

#include <string_view>

#include "confalg/check.hpp"
#include "confalg/structure.hpp"

namespace confalg {

/// A bimodule (V, l, r) over a left-symmetric structure A. The action tables
/// have shape (rank A, rank V, rank V): l(e_i)_lm v_j = sum_k l.at(i,j,k) v_k,
/// and the right action v_lm a is r(a)_{-lm-d} v.
struct Bimodule {
  Structure base;
  FreeModule space;
  ProductTable l;
  ProductTable r;

  Bimodule() = default;
  Bimodule(Structure a, FreeModule v, ProductTable left, ProductTable right);
  void validate() const;
  bool operator==(const Bimodule& other) const = default;
};

/// The two matrix-form bimodule identities on every (e_p, e_q, v_s):
///   l(a o_lm b)_{lm+mu} v - l(a)_lm l(b)_mu v - l(b o_mu a)_{lm+mu} v + l(b)_mu l(a)_lm v
///   r(b)_{-d-lm-mu} l(a)_lm v - l(a)_lm r(b)_{-d-mu} v
///     - r(b)_{-d-lm-mu} r(a)_lm v + r(a o_lm b)_{-d-mu} v
CheckReport check_bimodule(const Bimodule& m, const CheckOptions& options = {});

/// (A, L_A, R_A): L_A(a)_lm b = a o_lm b, R_A(a)_lm b = b o_{-d-lm} a.
Bimodule adjoint_bimodule(const Structure& s);

/// A + V with (a+u) o (b+v) = a o b + l(a)_lm v + r(b)_{-d-lm} u; V o V = 0.
/// The bimodule identities are verified first.
Structure semidirect_product(const Bimodule& m, const CheckOptions& options = {});
/// Same table without verifying the bimodule.
Structure semidirect_table(const Bimodule& m);

/// Dual action on the dual basis: X*(e_i)_lm v_j* = -sum_k X(i,k,j)(lm, -lm-d) v_k*.
ProductTable star_action(const ProductTable& action);

enum class DualFlavor { ls_dual, ld_horizontal, ld_vertical };
DualFlavor parse_dual_flavor(std::string_view name);

/// ls_dual: (V*, l* - r*, -r*) for a bimodule m.
Bimodule dual_bimodule(const Bimodule& m);
/// For an l-dendriform structure s:
///   ld_horizontal: (A*, L*_|> - R*_<|, -R*_<|) over the horizontal product,
///   ld_vertical:   (A*, L*_|> + L*_<|, L*_<|) over the vertical product.
/// ls_dual is accepted too and means the dual of the adjoint bimodule.
Bimodule dual_bimodule(const Structure& s, DualFlavor flavor);

/// (A, L_|>, R_<|) over the horizontal product and (A, L_|>, -L_<|) over the
/// vertical one.
Bimodule ld_horizontal_bimodule(const Structure& ld);
Bimodule ld_vertical_bimodule(const Structure& ld);

}  // namespace confalg
