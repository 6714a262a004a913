#pragma once

#include <map>
#include <string>
#include <vector>

#include "confalg/check.hpp"
#include "confalg/structure.hpp"

namespace confalg {

/// One nested product in a three-argument identity, with (x, y) = (a, b) at
/// lambdas (lm, mu), or (b, a) at (mu, lm) when swapped:
///   left_nested:  (x inner_{lx} y) outer_{lx+ly} c
///   otherwise:     x outer_{lx} (y inner_{ly} c)
struct NestedTerm {
  int coef = 1;
  bool left_nested = true;
  bool swapped = false;
  std::string inner;
  std::string outer;
};

/// A trilinear identity sum(terms) = 0 over basis triples.
struct Law {
  std::string id;
  std::vector<NestedTerm> terms;
};

/// Defining identities of a kind, in reporting order. Lie skew-symmetry is
/// a pair law and is handled separately by check_axioms.
const std::vector<Law>& laws_for(Kind kind);

/// The op map with the quadri derived operations added:
/// vee = sw + se, wedge = nw + ne, succ = ne + se, prec = nw + sw,
/// star = sum of all four. Other kinds are returned unchanged.
std::map<std::string, ProductTable> with_derived_ops(const Structure& s);

/// For compatible structures: each law X(op1, op2) yields
/// X(op1#1, op2#2) + X(op1#2, op2#1), the coefficient of k1*k2 in the law
/// for k1*X#1 + k2*X#2.
std::vector<Law> polarize(const std::vector<Law>& laws);

/// Checks each law on every basis triple (a, b, c) = (e_p, e_q, e_r) with
/// generic lambdas; the first violation is reported in (p, q, r, law) order.
CheckReport check_laws(const std::string& subject, const FreeModule& module,
                       const std::map<std::string, ProductTable>& ops,
                       const std::vector<Law>& laws, const CheckOptions& options = {});

/// Residual of one law on a basis triple (zero when it holds).
Element law_residual(const std::map<std::string, ProductTable>& ops, const Law& law,
                     std::size_t p, std::size_t q, std::size_t r);

/// [a_lm b] + [b_{-lm-d} a] on basis pairs.
CheckReport check_skew_symmetry(const FreeModule& module, const ProductTable& bracket,
                                const CheckOptions& options = {});

/// Verifies every defining identity of s.kind; raw structures are rejected.
CheckReport check_axioms(const Structure& s, const CheckOptions& options = {});
/// Same, reading s as a structure of `kind` (the ops it requires must exist).
CheckReport check_axioms_as(const Structure& s, Kind kind, const CheckOptions& options = {});

}  // namespace confalg
