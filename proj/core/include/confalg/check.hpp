#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "confalg/element.hpp"

namespace confalg {

/// Outcome of an identity check. When verdict is false, axiom_id names the
/// violated law, witness lists the basis elements of the first violating
/// tuple and residual is the nonzero difference of the two sides.
struct CheckReport {
  bool verdict = true;
  std::string subject;
  std::string axiom_id;
  std::vector<std::string> witness;
  std::vector<std::size_t> witness_index;
  Element residual;
  FreeModule residual_module;
  /// Genericity conditions and other remarks attached to the verdict.
  std::vector<std::string> notes;

  explicit operator bool() const { return verdict; }
  std::string residual_string() const;
  std::string summary() const;
};

struct Violation {
  std::string axiom_id;
  Element residual;
};

struct CheckOptions {
  /// Worker threads for per-tuple evaluation; the reported violation is the
  /// same for every thread count.
  unsigned threads = 1;
};

using TupleCheck = std::function<std::optional<Violation>(const std::vector<std::size_t>&)>;

/// Runs `fn` on every index tuple of the given slot modules in lexicographic
/// order and reports the first violation.
CheckReport check_tuples(const std::string& subject, const std::vector<const FreeModule*>& slots,
                         const FreeModule& residual_module, const TupleCheck& fn,
                         const CheckOptions& options = {});

/// Concatenates reports: the first failing one wins, notes accumulate.
CheckReport first_failure(const std::string& subject, std::vector<CheckReport> reports);

}  // namespace confalg
