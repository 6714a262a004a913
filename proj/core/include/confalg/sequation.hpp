#pragma once

#include <utility>

#include "confalg/bimodule.hpp"
#include "confalg/check.hpp"
#include "confalg/operators.hpp"
#include "confalg/tensor.hpp"

namespace confalg {

/// {{r, r}} modulo d1 + d2 + d3 for r = sum_i x_i (x) y_i:
///     sum (y_j o_mu x_i) (x) x_j (x) y_i          at mu = d2
///   - sum x_j (x) (y_j o_mu x_i) (x) y_i          at mu = d1
///   - sum x_i (x) x_j (x) [y_i mu y_j]            at mu = d1
/// A product landing in slot s has its d renamed to d_s; the bracket is the
/// commutator of the left-symmetric product.
TensorElement3 double_bracket(const Structure& s, const TensorElement2& r);

/// Passes when the double bracket vanishes. On failure the witness is the
/// first basis triple with a nonzero coefficient, reported as a scalar
/// residual in d1, d2.
CheckReport check_s_equation(const Structure& s, const TensorElement2& r);

/// T^r with T^r_lm(e_p*) = sum_q c_pq(-lm-d, d) e_q, a map A* -> A.
ConformalMap t_from_r(const TensorElement2& r);

/// The structure A + V* built from the dual bimodule (l* - r*, -r*) of m.
Structure s_equation_ambient(const Bimodule& m);

/// r = r_T + flip(r_T) over the basis of A + V*, where r_T carries
/// a_ij(-d1-d2, d1) on e_j (x) v_i*.
TensorElement2 r_from_t(const ConformalMap& t, const Bimodule& m);
TensorElement2 r_from_t(const ModuleMap& t, const Bimodule& m);

/// sum_i (e_i (x) e_i* + e_i* (x) e_i) together with the ambient structure:
/// vertical flavor over A + A* with (L*_|> + L*_<|, L*_<|), horizontal
/// flavor with (L*_|> - R*_<|, -R*_<|).
std::pair<TensorElement2, Structure> canonical_r(const Structure& ld, LdFlavor flavor);

}  // namespace confalg
