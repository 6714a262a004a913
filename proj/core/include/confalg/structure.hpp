#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "confalg/table.hpp"

namespace confalg {

enum class Kind { raw, lie, left_symmetric, associative, dendriform, l_dendriform, quadri };

std::string_view to_string(Kind kind);
/// Accepts "left-symmetric" and "left_symmetric" spellings alike.
Kind parse_kind(std::string_view text);
/// Operation names a structure of this kind must carry.
const std::vector<std::string>& required_ops(Kind kind);

/// A free module with named lambda-product tables and a kind tag.
struct Structure {
  FreeModule module;
  Kind kind = Kind::raw;
  std::map<std::string, ProductTable> ops;

  Structure() = default;
  Structure(FreeModule m, Kind k, std::map<std::string, ProductTable> tables);

  std::size_t rank() const { return module.rank(); }
  const ProductTable& op(const std::string& name) const;
  bool has_op(const std::string& name) const { return ops.count(name) != 0; }
  /// Throws InputError unless the required ops exist with square shape.
  void validate() const;
  bool operator==(const Structure& other) const = default;
};

/// Rank-n structure whose required ops are all zero.
Structure zero_structure(const FreeModule& module, Kind kind);

/// Current algebra C[d] (x) A: constants[i][j][k] is the coefficient of e_k in
/// e_i e_j; every op required by `kind` receives the same table (use kind
/// left_symmetric, associative or lie for a single-op algebra).
Structure current_structure(const std::vector<std::vector<std::vector<Rational>>>& constants,
                            Kind kind, FreeModule module = {});

}  // namespace confalg
