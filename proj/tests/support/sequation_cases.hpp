#pragma once

#include <random>
#include <vector>

#include "confalg/bimodule.hpp"
#include "confalg/corpus.hpp"
#include "confalg/operators.hpp"
#include "confalg/poly_parse.hpp"
#include "confalg/sequation.hpp"
#include "random.hpp"

namespace confalg::testing {

/// Left-symmetric corpus structures used by the randomized S-equation runs.
inline std::vector<Structure> sequation_algebras() {
  return {corpus::lw(Poly(1L)), corpus::lw(parse_poly("1 + lm")), corpus::virasoro(Poly(0L))};
}

struct SequationOutcome {
  bool o_operator = false;
  bool s_equation = false;
  bool round_trip = false;
};

/// Random conformal T: V -> A over the adjoint bimodule (degree <= 1 in lm
/// and d, coefficients in {-1, 0, 1}). Compares the S-equation for r_T
/// with the O-operator check of T_0 and tests the t_from_r round trip.
inline SequationOutcome sequation_case(std::mt19937_64& rng, const Structure& a) {
  const Bimodule m = adjoint_bimodule(a);
  const ConformalMap t = random_small_conformal_map(rng, m.space, a.module, 0.7);
  SequationOutcome out;
  out.o_operator = check_o_operator(t.at_zero(), m).verdict;
  const TensorElement2 r = r_from_t(t, m);
  out.s_equation = check_s_equation(s_equation_ambient(m), r).verdict;

  // The V -> A block of T^r is T itself.
  const ConformalMap back = t_from_r(r);
  const std::size_t na = a.rank();
  out.round_trip = is_symmetric(r);
  for (std::size_t i = 0; i < m.space.rank(); ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      out.round_trip = out.round_trip && back.at(na + i, j) == t.at(i, j);
    }
  }
  return out;
}

/// Random symmetric r in A (x) A: the S-equation for r against the
/// O-operator check of (T^r)_0 on the dual of the adjoint bimodule.
inline std::pair<bool, bool> symmetric_r_case(std::mt19937_64& rng, const Structure& a) {
  std::uniform_int_distribution<int> u(-1, 1);
  TensorElement2 r(a.module);
  for (std::size_t p = 0; p < a.rank(); ++p) {
    for (std::size_t q = 0; q < a.rank(); ++q) {
      if (u(rng) == 0) continue;
      r.add(p, q,
            Poly(static_cast<long>(u(rng))) + Poly(static_cast<long>(u(rng))) * Poly::var(var::d1) +
                Poly(static_cast<long>(u(rng))) * Poly::var(var::d2));
    }
  }
  r = r + flip(r);
  const bool se = check_s_equation(a, r).verdict;
  const bool o = check_o_operator(t_from_r(r).at_zero(), dual_bimodule(adjoint_bimodule(a))).verdict;
  return {se, o};
}

}  // namespace confalg::testing
