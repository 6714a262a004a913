#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confalg/bilinear_form.hpp"
#include "confalg/bimodule.hpp"
#include "confalg/tensor.hpp"

namespace confalg {

/// A named operator of a definition file: either a map A -> A or, for
/// operators declared on the bimodule space, a map V -> A. Entries may use
/// lm (conformal maps) but most commands need lm-free entries.
struct OperatorDef {
  bool on_space = false;
  ConformalMap map;
};

/// In-memory form of the JSON definition format:
///
///   {
///     "parameters": ["c"],
///     "basis": ["a"],
///     "kind": "left-symmetric",
///     "products": {"circ": [{"left": "a", "right": "a",
///                            "value": [{"basis": "a", "coeff": "lm + d + c"}]}]},
///     "bimodule": {"space": [...], "l": [...], "r": [...]},
///     "operators": {"R": {"domain": "A", "map": {"a": {"a": "2"}}}},
///     "tensors": {"r": [{"left": "a", "right": "a", "coeff": "d1"}]},
///     "bilinear_forms": {"B": [{"left": "a", "right": "a", "coeff": "1"}]}
///   }
///
/// Every section except basis, kind and products is optional; products
/// that are not listed are zero.
struct Definition {
  std::vector<std::string> parameters;
  Structure structure;
  std::optional<Bimodule> bimodule;
  std::map<std::string, OperatorDef> operators;
  std::map<std::string, TensorElement2> tensors;
  std::map<std::string, BilinearForm> forms;

  /// The named operator as a module map; throws InputError when it is
  /// missing or its entries use lm.
  ModuleMap module_map(const std::string& name) const;
  const OperatorDef& operator_def(const std::string& name) const;
  const TensorElement2& tensor(const std::string& name) const;
  const BilinearForm& form(const std::string& name) const;
};

struct LoadOptions {
  /// Largest accepted degree in any of lm, d, d1, d2.
  int max_degree = 6;
};

/// Parses definition JSON. Identifiers that are not declared parameters,
/// unknown basis names and malformed polynomials raise InputError.
Definition parse_definition(std::string_view text, const LoadOptions& options = {});
Definition load_definition(const std::string& path, const LoadOptions& options = {});

/// A definition holding just a structure; parameters are collected from its
/// tables.
Definition make_definition(const Structure& s);

/// Canonical JSON text (two-space indent, trailing newline). The declared
/// parameters come first, followed by any other parameter in use, sorted.
std::string dump_definition(const Definition& def);

}  // namespace confalg
