#pragma once

#include <utility>

#include "confalg/operators.hpp"

namespace confalg {

/// Verdicts of both routes for compatibility of two O-operators.
struct CompatibilityReport {
  /// T1 and T2 are O-operators and the mixed identity
  /// T1(u) o T2(v) + T2(u) o T1(v) = T1(l(T2 u) v + r(T2 v) u) + T2(l(T1 u) v + r(T1 v) u)
  /// holds.
  CheckReport mixed;
  /// k1 T1 + k2 T2 is an O-operator with k1, k2 symbolic parameters.
  CheckReport symbolic;
  bool agree() const { return mixed.verdict == symbolic.verdict; }
  bool verdict() const { return mixed.verdict && symbolic.verdict; }
};

/// The symbolic scalars used by the k1, k2 routes.
Poly kappa1();
Poly kappa2();

CheckReport check_mixed_o_identity(const ModuleMap& t1, const ModuleMap& t2, const Bimodule& m,
                                   const CheckOptions& options = {});
CompatibilityReport check_compatible_o_operators(const ModuleMap& t1, const ModuleMap& t2,
                                                 const Bimodule& m,
                                                 const CheckOptions& options = {});

/// N(NT(u) o T(v) + T(u) o NT(v))
///   = N(T(l(NT u) v + r(NT v)_{-d-lm} u) + NT(l(T u) v + r(T v)_{-d-lm} u)).
CheckReport nt_check(const ModuleMap& n, const ModuleMap& t, const Bimodule& m,
                     const CheckOptions& options = {});

/// N = T1 T2^-1 as a map on A.
ModuleMap quotient_nijenhuis(const ModuleMap& t1, const ModuleMap& t2,
                             std::string* genericity = nullptr);

struct LdCompatibilityReport {
  /// Both structures l-dendriform and the two mixed identities hold.
  CheckReport mixed;
  /// (k1 |>1 + k2 |>2, k1 <|1 + k2 <|2) is l-dendriform for symbolic k.
  CheckReport symbolic;
  bool agree() const { return mixed.verdict == symbolic.verdict; }
  bool verdict() const { return mixed.verdict && symbolic.verdict; }
};
LdCompatibilityReport check_compatible_l_dendriform(const Structure& s1, const Structure& s2,
                                                    const CheckOptions& options = {});

/// The two vertical structures induced on V by T1 and T2.
std::pair<Structure, Structure> compatible_pair_from_o_operators(const ModuleMap& t1,
                                                                 const ModuleMap& t2,
                                                                 const Bimodule& m);
/// The two structures induced on A by invertible T1 and T2.
std::pair<Structure, Structure> compatible_pair_on_base(const ModuleMap& t1, const ModuleMap& t2,
                                                        const Bimodule& m,
                                                        std::vector<std::string>* notes = nullptr);

}  // namespace confalg
