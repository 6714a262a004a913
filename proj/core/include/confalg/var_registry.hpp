#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace confalg {

using VarId = std::uint32_t;

enum class VarRole { derivation, lambda, parameter };

std::string_view to_string(VarRole role);

/// Fixed ids of the variables every registry starts with. Lambda variables
/// come first so that they dominate the graded-lex order, then the
/// derivation slots; parameters follow in registration order.
namespace var {
inline constexpr VarId lm = 0;  // λ
inline constexpr VarId mu = 1;  // μ
inline constexpr VarId nu = 2;  // ν
inline constexpr VarId th = 3;  // θ
inline constexpr VarId d = 4;   // ∂ acting on a single element
inline constexpr VarId d1 = 5;  // ∂ on tensor slot 1
inline constexpr VarId d2 = 6;
inline constexpr VarId d3 = 7;
inline constexpr VarId builtin_count = 8;
}  // namespace var

/// Append-only table of named, role-tagged variables. Roles never change
/// once a name is registered. Lookups and registration are thread-safe;
/// references returned by name() stay valid for the registry's lifetime.
class VarRegistry {
 public:
  VarRegistry();
  VarRegistry(const VarRegistry&) = delete;
  VarRegistry& operator=(const VarRegistry&) = delete;

  /// The process-wide registry used by default everywhere.
  static VarRegistry& global();

  /// Returns the id of `name`, registering it with `role` if it is new.
  /// Throws InputError when the name exists with another role or is not an
  /// identifier.
  VarId intern(std::string_view name, VarRole role);
  VarId parameter(std::string_view name) { return intern(name, VarRole::parameter); }

  std::optional<VarId> find(std::string_view name) const;
  const std::string& name(VarId id) const;
  VarRole role(VarId id) const;
  std::size_t size() const;

  static bool is_identifier(std::string_view name);
  static bool is_reserved(std::string_view name);

 private:
  struct Entry {
    std::string name;
    VarRole role;
  };
  mutable std::shared_mutex mutex_;
  std::deque<Entry> entries_;
  std::unordered_map<std::string, VarId> index_;
};

}  // namespace confalg
