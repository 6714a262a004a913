#include "confalg/definition.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "confalg/error.hpp"
#include "confalg/poly_parse.hpp"

namespace confalg {

using Json = nlohmann::ordered_json;

ModuleMap Definition::module_map(const std::string& name) const {
  const OperatorDef& def = operator_def(name);
  for (std::size_t i = 0; i < def.map.rows(); ++i) {
    for (std::size_t j = 0; j < def.map.cols(); ++j) {
      if (def.map.at(i, j).uses(var::lm)) {
        throw InputError("operator '" + name + "' depends on lm; a module map is required");
      }
    }
  }
  return def.map.at_zero();
}

const OperatorDef& Definition::operator_def(const std::string& name) const {
  auto it = operators.find(name);
  if (it == operators.end()) throw InputError("no operator named '" + name + "'");
  return it->second;
}

const TensorElement2& Definition::tensor(const std::string& name) const {
  auto it = tensors.find(name);
  if (it == tensors.end()) throw InputError("no tensor named '" + name + "'");
  return it->second;
}

const BilinearForm& Definition::form(const std::string& name) const {
  auto it = forms.find(name);
  if (it == forms.end()) throw InputError("no bilinear form named '" + name + "'");
  return it->second;
}

namespace {

class Reader {
 public:
  Reader(const LoadOptions& options) : options_(options) {}

  Definition read(const Json& root) {
    if (!root.is_object()) throw InputError("definition must be a JSON object");
    for (const auto& [key, value] : root.items()) {
      static const std::set<std::string> known{"parameters", "basis", "kind",
                                               "products", "bimodule", "operators",
                                               "tensors", "bilinear_forms"};
      if (!known.count(key)) throw InputError("unknown section '" + key + "'");
      (void)value;
    }
    Definition def;
    std::set<std::string> params;
    if (root.contains("parameters")) {
      for (const auto& p : array(root["parameters"], "parameters")) {
        const std::string name = text(p, "parameter name");
        if (!VarRegistry::is_identifier(name) || VarRegistry::is_reserved(name)) {
          throw InputError("'" + name + "' cannot be used as a parameter name");
        }
        if (!params.insert(name).second) throw InputError("parameter '" + name + "' repeated");
        def.parameters.push_back(name);
      }
    }
    scope_.parameters = params;

    const FreeModule module = names(required(root, "basis"), "basis");
    const Kind kind = parse_kind(text(required(root, "kind"), "kind"));
    std::map<std::string, ProductTable> ops;
    const Json& products = required(root, "products");
    if (!products.is_object()) throw InputError("products must be an object");
    for (const auto& [op, entries] : products.items()) {
      ops.emplace(op, table(entries, module, module, module, "products." + op));
    }
    for (const auto& op : required_ops(kind)) {
      if (!ops.count(op)) ops.emplace(op, ProductTable::square(module.rank()));
    }
    def.structure = Structure(module, kind, std::move(ops));

    if (root.contains("bimodule")) {
      const Json& b = root["bimodule"];
      if (!b.is_object()) throw InputError("bimodule must be an object");
      const FreeModule space = names(required(b, "space"), "bimodule.space");
      if (space.rank() == 0) throw InputError("bimodule.space must not be empty");
      ProductTable l = b.contains("l") ? table(b["l"], module, space, space, "bimodule.l")
                                       : ProductTable(module.rank(), space.rank(), space.rank());
      ProductTable r = b.contains("r") ? table(b["r"], module, space, space, "bimodule.r")
                                       : ProductTable(module.rank(), space.rank(), space.rank());
      def.bimodule = Bimodule(def.structure, space, std::move(l), std::move(r));
    }

    if (root.contains("operators")) {
      const Json& section = root["operators"];
      if (!section.is_object()) throw InputError("operators must be an object");
      for (const auto& [name, body] : section.items()) {
        def.operators.emplace(name, operator_def(body, def, "operators." + name));
      }
    }
    if (root.contains("tensors")) {
      const Json& section = root["tensors"];
      if (!section.is_object()) throw InputError("tensors must be an object");
      for (const auto& [name, body] : section.items()) {
        TensorElement2 t(module);
        for (const auto& entry : array(body, "tensors." + name)) {
          const std::string where = "tensors." + name;
          t.add(module.index_of(text(required(entry, "left"), where)),
                module.index_of(text(required(entry, "right"), where)),
                poly(required(entry, "coeff"), where));
        }
        def.tensors.emplace(name, std::move(t));
      }
    }
    if (root.contains("bilinear_forms")) {
      const Json& section = root["bilinear_forms"];
      if (!section.is_object()) throw InputError("bilinear_forms must be an object");
      for (const auto& [name, body] : section.items()) {
        BilinearForm b(module);
        for (const auto& entry : array(body, "bilinear_forms." + name)) {
          const std::string where = "bilinear_forms." + name;
          b.at(module.index_of(text(required(entry, "left"), where)),
               module.index_of(text(required(entry, "right"), where))) +=
              poly(required(entry, "coeff"), where);
        }
        b.validate();
        def.forms.emplace(name, std::move(b));
      }
    }
    return def;
  }

 private:
  static const Json& required(const Json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) {
      throw InputError(std::string("missing field '") + key + "'");
    }
    return obj[key];
  }

  static const Json& array(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + " must be a list");
    return j;
  }

  static std::string text(const Json& j, const std::string& where) {
    if (!j.is_string()) throw InputError(where + " must be a string");
    return j.get<std::string>();
  }

  static FreeModule names(const Json& j, const std::string& where) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& n : array(j, where)) {
      std::string name = text(n, where);
      if (name.empty()) throw InputError(where + " contains an empty name");
      if (!seen.insert(name).second) throw InputError(where + " repeats '" + name + "'");
      out.push_back(std::move(name));
    }
    return FreeModule(std::move(out));
  }

  Poly poly(const Json& j, const std::string& where) const {
    std::string s;
    if (j.is_string()) {
      s = j.get<std::string>();
    } else if (j.is_number_integer()) {
      s = std::to_string(j.get<long long>());
    } else {
      throw InputError(where + ": coefficient must be a polynomial string");
    }
    Poly p;
    try {
      p = parse_poly(s, scope_);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    for (VarId v : {var::lm, var::d, var::d1, var::d2}) {
      if (p.degree_in(v) > options_.max_degree) {
        throw InputError(where + ": degree of '" + s + "' exceeds the limit of " +
                         std::to_string(options_.max_degree));
      }
    }
    return p;
  }

  ProductTable table(const Json& entries, const FreeModule& left, const FreeModule& right,
                     const FreeModule& out, const std::string& where) const {
    ProductTable t(left.rank(), right.rank(), out.rank());
    for (const auto& entry : array(entries, where)) {
      const std::size_t i = left.index_of(text(required(entry, "left"), where));
      const std::size_t j = right.index_of(text(required(entry, "right"), where));
      for (const auto& v : array(required(entry, "value"), where)) {
        const std::size_t k = out.index_of(text(required(v, "basis"), where));
        t.at(i, j, k) += poly(required(v, "coeff"), where);
      }
    }
    return t;
  }

  OperatorDef operator_def(const Json& body, const Definition& def, const std::string& where) {
    if (!body.is_object()) throw InputError(where + " must be an object");
    OperatorDef out;
    const std::string domain = body.contains("domain") ? text(body["domain"], where) : "A";
    if (domain == "V") {
      if (!def.bimodule) throw InputError(where + ": domain V needs a bimodule section");
      out.on_space = true;
    } else if (domain != "A") {
      throw InputError(where + ": domain must be \"A\" or \"V\"");
    }
    const FreeModule& source = out.on_space ? def.bimodule->space : def.structure.module;
    const FreeModule& target = def.structure.module;
    out.map = ConformalMap(source, target);
    const Json& map = required(body, "map");
    if (!map.is_object()) throw InputError(where + ".map must be an object");
    for (const auto& [src, row] : map.items()) {
      const std::size_t i = source.index_of(src);
      if (!row.is_object()) throw InputError(where + ".map." + src + " must be an object");
      for (const auto& [tgt, coeff] : row.items()) {
        const Poly p = poly(coeff, where);
        if (p.uses(var::d1) || p.uses(var::d2) || p.uses(var::d3) || p.uses(var::mu) ||
            p.uses(var::nu) || p.uses(var::th)) {
          throw InputError(where + ": operator entries may use only d, lm and parameters");
        }
        out.map.at(i, target.index_of(tgt)) += p;
      }
    }
    return out;
  }

  LoadOptions options_;
  ParseScope scope_;
};

void collect(const Poly& p, std::set<VarId>& used) {
  for (VarId v : p.variables()) {
    if (p.registry_or_global().role(v) == VarRole::parameter) used.insert(v);
  }
}

Json table_json(const ProductTable& t, const FreeModule& left, const FreeModule& right,
                const FreeModule& out) {
  Json list = Json::array();
  for (std::size_t i = 0; i < t.left(); ++i) {
    for (std::size_t j = 0; j < t.right(); ++j) {
      Json value = Json::array();
      for (std::size_t k = 0; k < t.out(); ++k) {
        if (t.at(i, j, k).is_zero()) continue;
        value.push_back(Json{{"basis", out.basis[k]}, {"coeff", t.at(i, j, k).to_string()}});
      }
      if (value.empty()) continue;
      list.push_back(Json{{"left", left.basis[i]}, {"right", right.basis[j]}, {"value", value}});
    }
  }
  return list;
}

}  // namespace

Definition parse_definition(std::string_view text, const LoadOptions& options) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return Reader(options).read(root);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed definition: ") + e.what());
  }
}

Definition load_definition(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_definition(buf.str(), options);
}

Definition make_definition(const Structure& s) {
  Definition def;
  def.structure = s;
  std::set<VarId> used;
  for (const auto& [name, t] : s.ops) t.map([&](const Poly& p) { collect(p, used); return p; });
  for (VarId v : used) def.parameters.push_back(VarRegistry::global().name(v));
  std::sort(def.parameters.begin(), def.parameters.end());
  return def;
}

std::string dump_definition(const Definition& def) {
  const Structure& s = def.structure;
  std::set<VarId> used;
  for (const auto& [name, t] : s.ops) t.map([&](const Poly& p) { collect(p, used); return p; });
  if (def.bimodule) {
    for (const auto* t : {&def.bimodule->l, &def.bimodule->r}) {
      t->map([&](const Poly& p) { collect(p, used); return p; });
    }
  }
  for (const auto& [name, op] : def.operators) {
    for (std::size_t i = 0; i < op.map.rows(); ++i) {
      for (std::size_t j = 0; j < op.map.cols(); ++j) collect(op.map.at(i, j), used);
    }
  }
  for (const auto& [name, t] : def.tensors) {
    for (const auto& [key, c] : t.terms()) collect(c, used);
  }
  for (const auto& [name, b] : def.forms) {
    for (const auto& p : b.entries) collect(p, used);
  }

  std::vector<std::string> params = def.parameters;
  std::vector<std::string> extra;
  for (VarId v : used) {
    const std::string& name = VarRegistry::global().name(v);
    if (std::find(params.begin(), params.end(), name) == params.end()) extra.push_back(name);
  }
  std::sort(extra.begin(), extra.end());
  params.insert(params.end(), extra.begin(), extra.end());

  Json root;
  root["parameters"] = params;
  root["basis"] = s.module.basis;
  root["kind"] = std::string(to_string(s.kind));
  Json products = Json::object();
  for (const auto& [name, t] : s.ops) products[name] = table_json(t, s.module, s.module, s.module);
  root["products"] = products;

  if (def.bimodule) {
    const Bimodule& m = *def.bimodule;
    root["bimodule"] = Json{{"space", m.space.basis},
                            {"l", table_json(m.l, s.module, m.space, m.space)},
                            {"r", table_json(m.r, s.module, m.space, m.space)}};
  }
  if (!def.operators.empty()) {
    Json ops = Json::object();
    for (const auto& [name, op] : def.operators) {
      Json map = Json::object();
      for (std::size_t i = 0; i < op.map.rows(); ++i) {
        Json row = Json::object();
        for (std::size_t j = 0; j < op.map.cols(); ++j) {
          if (!op.map.at(i, j).is_zero()) {
            row[op.map.target().basis[j]] = op.map.at(i, j).to_string();
          }
        }
        map[op.map.source().basis[i]] = row;
      }
      ops[name] = Json{{"domain", op.on_space ? "V" : "A"}, {"map", map}};
    }
    root["operators"] = ops;
  }
  if (!def.tensors.empty()) {
    Json tensors = Json::object();
    for (const auto& [name, t] : def.tensors) {
      Json list = Json::array();
      for (const auto& [key, c] : t.terms()) {
        list.push_back(Json{{"left", t.base().basis[key[0]]},
                            {"right", t.base().basis[key[1]]},
                            {"coeff", c.to_string()}});
      }
      tensors[name] = list;
    }
    root["tensors"] = tensors;
  }
  if (!def.forms.empty()) {
    Json forms = Json::object();
    for (const auto& [name, b] : def.forms) {
      Json list = Json::array();
      for (std::size_t i = 0; i < b.module.rank(); ++i) {
        for (std::size_t j = 0; j < b.module.rank(); ++j) {
          if (b.at(i, j).is_zero()) continue;
          list.push_back(Json{{"left", b.module.basis[i]},
                              {"right", b.module.basis[j]},
                              {"coeff", b.at(i, j).to_string()}});
        }
      }
      forms[name] = list;
    }
    root["bilinear_forms"] = forms;
  }
  return root.dump(2) + "\n";
}

}  // namespace confalg
