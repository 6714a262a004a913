#pragma once

#include <string_view>

#include "confalg/structure.hpp"

namespace confalg {

/// [a_lm b] = a o_lm b - b o_{-d-lm} a for left-symmetric or associative s.
/// For an l-dendriform s the bracket of its horizontal product is returned
/// (both derived products share it).
Structure commutator_lie(const Structure& s);

/// a . b = a |> b + a <| b.
Structure horizontal(const Structure& ld);
/// a o b = a |> b - b <|_{-d-lm} a.
Structure vertical(const Structure& ld);
/// |>^t = |>, a <|^t b = -b <|_{-d-lm} a.
Structure transpose_l_dendriform(const Structure& ld);

/// |> = succ, <| = prec.
Structure dendriform_as_l_dendriform(const Structure& dend);
/// a * b = a succ b + a prec b, tagged associative.
Structure dendriform_sum(const Structure& dend);

/// Dendriform pair (succ = ne + se, prec = nw + sw).
Structure quadri_succ_prec(const Structure& q);
/// Dendriform pair (succ = vee = sw + se, prec = wedge = nw + ne).
Structure quadri_vee_wedge(const Structure& q);
/// a * b = sum of the four operations, tagged associative.
Structure quadri_star(const Structure& q);
/// |> = se - opposite(nw), <| = ne - opposite(sw).
Structure quadri_l_dendriform(const Structure& q);

enum class Conversion {
  commutator,
  horizontal,
  vertical,
  transpose,
  dendriform_ld,
  dendriform_sum,
  quadri_succ_prec,
  quadri_vee_wedge,
  quadri_star,
  quadri_ld,
};

Conversion parse_conversion(std::string_view name);
std::string_view to_string(Conversion c);
/// Applies a conversion; results are not re-verified.
Structure derive_structure(const Structure& s, Conversion which);

}  // namespace confalg
