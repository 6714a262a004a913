#pragma once

#include <random>
#include <vector>

#include "confalg/module_map.hpp"
#include "confalg/poly.hpp"
#include "confalg/tensor.hpp"

namespace confalg::testing {

inline Rational random_rational(std::mt19937_64& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Sum of up to `max_terms` random terms in `vars` with per-variable
/// exponent at most `max_exp`.
inline Poly random_poly(std::mt19937_64& rng, const std::vector<VarId>& vars, int max_terms = 4,
                        int max_exp = 2) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::vector<Term> terms;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    for (VarId v : vars) {
      const int e = exp(rng);
      if (e > 0) m = m * Monomial::var(v, e);
    }
    terms.push_back({m, random_rational(rng)});
  }
  return Poly::from_terms(std::move(terms), &VarRegistry::global());
}

/// Entries c0 + c1 d (+ c2 lm when `with_lambda`) with c_i in {-1, 0, 1}.
inline Poly small_entry(std::mt19937_64& rng, bool with_lambda) {
  std::uniform_int_distribution<int> u(-1, 1);
  Poly p = Poly(static_cast<long>(u(rng))) + Poly(static_cast<long>(u(rng))) * Poly::var(var::d);
  if (with_lambda) p += Poly(static_cast<long>(u(rng))) * Poly::var(var::lm);
  return p;
}

inline ModuleMap random_small_map(std::mt19937_64& rng, const FreeModule& source,
                                  const FreeModule& target, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  ModuleMap m(source, target);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (keep(rng)) m.at(i, j) = small_entry(rng, false);
    }
  }
  return m;
}

inline ConformalMap random_small_conformal_map(std::mt19937_64& rng, const FreeModule& source,
                                               const FreeModule& target, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  ConformalMap m(source, target);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (keep(rng)) m.at(i, j) = small_entry(rng, true);
    }
  }
  return m;
}

/// Independent evaluation oracle: sums coefficient * prod value^exponent
/// directly over the stored terms.
inline Rational eval_at(const Poly& p, const std::vector<Rational>& point) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational prod = t.coeff;
    const auto& exps = t.mono.exponents();
    for (std::size_t v = 0; v < exps.size(); ++v) {
      for (int e = 0; e < exps[v]; ++e) prod *= point.at(v);
    }
    sum += prod;
  }
  return sum;
}

}  // namespace confalg::testing
