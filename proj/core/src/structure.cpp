#include "confalg/structure.hpp"

#include <array>

#include "confalg/error.hpp"

namespace confalg {

namespace {

struct KindInfo {
  Kind kind;
  std::string_view name;
};

constexpr std::array<KindInfo, 7> kKinds{{
    {Kind::raw, "raw"},
    {Kind::lie, "lie"},
    {Kind::left_symmetric, "left-symmetric"},
    {Kind::associative, "associative"},
    {Kind::dendriform, "dendriform"},
    {Kind::l_dendriform, "l-dendriform"},
    {Kind::quadri, "quadri"},
}};

}  // namespace

std::string_view to_string(Kind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k.name;
  }
  return "?";
}

Kind parse_kind(std::string_view text) {
  std::string norm(text);
  for (auto& c : norm) {
    if (c == '_') c = '-';
  }
  for (const auto& k : kKinds) {
    if (k.name == norm) return k.kind;
  }
  throw InputError("unknown structure kind '" + std::string(text) + "'");
}

const std::vector<std::string>& required_ops(Kind kind) {
  static const std::vector<std::string> none;
  static const std::vector<std::string> lie{"bracket"};
  static const std::vector<std::string> circ{"circ"};
  static const std::vector<std::string> dend{"succ", "prec"};
  static const std::vector<std::string> ld{"tri_r", "tri_l"};
  static const std::vector<std::string> quadri{"nw", "sw", "ne", "se"};
  switch (kind) {
    case Kind::raw:
      return none;
    case Kind::lie:
      return lie;
    case Kind::left_symmetric:
    case Kind::associative:
      return circ;
    case Kind::dendriform:
      return dend;
    case Kind::l_dendriform:
      return ld;
    case Kind::quadri:
      return quadri;
  }
  return none;
}

Structure::Structure(FreeModule m, Kind k, std::map<std::string, ProductTable> tables)
    : module(std::move(m)), kind(k), ops(std::move(tables)) {
  validate();
}

const ProductTable& Structure::op(const std::string& name) const {
  auto it = ops.find(name);
  if (it == ops.end()) {
    throw InputError("structure has no operation '" + name + "'");
  }
  return it->second;
}

void Structure::validate() const {
  const std::size_t n = module.rank();
  for (const auto& name : required_ops(kind)) {
    if (!has_op(name)) {
      throw InputError(std::string(to_string(kind)) + " structure requires operation '" + name +
                       "'");
    }
  }
  for (const auto& [name, table] : ops) {
    if (table.left() != n || table.right() != n || table.out() != n) {
      throw InputError("operation '" + name + "' does not match the module rank");
    }
  }
}

Structure zero_structure(const FreeModule& module, Kind kind) {
  std::map<std::string, ProductTable> ops;
  for (const auto& name : required_ops(kind)) ops.emplace(name, ProductTable::square(module.rank()));
  return Structure(module, kind, std::move(ops));
}

Structure current_structure(const std::vector<std::vector<std::vector<Rational>>>& constants,
                            Kind kind, FreeModule module) {
  const std::size_t n = constants.size();
  if (module.rank() == 0) module = FreeModule::numbered(n);
  if (module.rank() != n) throw InputError("structure constants do not match the basis");
  ProductTable t = ProductTable::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (constants[i].size() != n) throw InputError("structure constants are not n x n x n");
    for (std::size_t j = 0; j < n; ++j) {
      if (constants[i][j].size() != n) throw InputError("structure constants are not n x n x n");
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = Poly(constants[i][j][k]);
    }
  }
  std::map<std::string, ProductTable> ops;
  for (const auto& name : required_ops(kind)) ops.emplace(name, t);
  return Structure(std::move(module), kind, std::move(ops));
}

}  // namespace confalg
