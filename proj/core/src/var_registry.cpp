#include "confalg/var_registry.hpp"

#include <array>
#include <cctype>
#include <mutex>

#include "confalg/error.hpp"

namespace confalg {

namespace {

constexpr std::array<std::pair<std::string_view, VarRole>, var::builtin_count> kBuiltins{{
    {"lm", VarRole::lambda},
    {"mu", VarRole::lambda},
    {"nu", VarRole::lambda},
    {"th", VarRole::lambda},
    {"d", VarRole::derivation},
    {"d1", VarRole::derivation},
    {"d2", VarRole::derivation},
    {"d3", VarRole::derivation},
}};

}  // namespace

std::string_view to_string(VarRole role) {
  switch (role) {
    case VarRole::derivation:
      return "derivation";
    case VarRole::lambda:
      return "lambda";
    case VarRole::parameter:
      return "parameter";
  }
  return "?";
}

VarRegistry::VarRegistry() {
  for (const auto& [name, role] : kBuiltins) {
    index_.emplace(std::string(name), static_cast<VarId>(entries_.size()));
    entries_.push_back({std::string(name), role});
  }
}

VarRegistry& VarRegistry::global() {
  static VarRegistry registry;
  return registry;
}

bool VarRegistry::is_identifier(std::string_view name) {
  if (name.empty()) return false;
  const auto first = static_cast<unsigned char>(name.front());
  if (!std::isalpha(first) && first != '_') return false;
  for (char c : name) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

bool VarRegistry::is_reserved(std::string_view name) {
  for (const auto& [builtin, role] : kBuiltins) {
    if (builtin == name) return true;
  }
  return false;
}

VarId VarRegistry::intern(std::string_view name, VarRole role) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = index_.find(std::string(name)); it != index_.end()) {
      if (entries_[it->second].role != role) {
        throw InputError("variable '" + std::string(name) + "' is already registered as " +
                         std::string(to_string(entries_[it->second].role)));
      }
      return it->second;
    }
  }
  if (!is_identifier(name)) {
    throw InputError("'" + std::string(name) + "' is not a valid identifier");
  }
  std::unique_lock lock(mutex_);
  if (auto it = index_.find(std::string(name)); it != index_.end()) {
    if (entries_[it->second].role != role) {
      throw InputError("variable '" + std::string(name) + "' is already registered as " +
                       std::string(to_string(entries_[it->second].role)));
    }
    return it->second;
  }
  const auto id = static_cast<VarId>(entries_.size());
  entries_.push_back({std::string(name), role});
  index_.emplace(std::string(name), id);
  return id;
}

std::optional<VarId> VarRegistry::find(std::string_view name) const {
  std::shared_lock lock(mutex_);
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

const std::string& VarRegistry::name(VarId id) const {
  std::shared_lock lock(mutex_);
  if (id >= entries_.size()) throw InputError("unknown variable id " + std::to_string(id));
  return entries_[id].name;
}

VarRole VarRegistry::role(VarId id) const {
  std::shared_lock lock(mutex_);
  if (id >= entries_.size()) throw InputError("unknown variable id " + std::to_string(id));
  return entries_[id].role;
}

std::size_t VarRegistry::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

}  // namespace confalg
