#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liaison {

// A polynomial ring indeterminate x_{base,layer}. Layer 1 is the plain variable.
struct Variable {
  std::int32_t base = 1;
  std::int32_t layer = 1;

  constexpr auto operator<=>(const Variable&) const = default;
  constexpr Variable with_layer(std::int32_t l) const { return {base, l}; }
  constexpr std::uint64_t key() const {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(base)) << 32) |
           static_cast<std::uint32_t>(layer);
  }
};

// Display names for variable bases. Bases without a name print as x_<base>.
class VariableNames {
 public:
  void set(std::int32_t base, std::string name);
  bool has(std::int32_t base) const { return names_.count(base) != 0; }
  std::string base_name(std::int32_t base) const;
  std::string display(Variable v, bool explicit_layer = false) const;
  std::optional<std::int32_t> base_of(std::string_view name) const;
  // Accepts "name", "name_<j>" and "name'" forms; nullopt when the stem is unknown.
  std::optional<Variable> resolve(std::string_view token) const;
  const std::map<std::int32_t, std::string>& entries() const { return names_; }

 private:
  std::map<std::int32_t, std::string> names_;
};

std::vector<Variable> sorted_unique(std::vector<Variable> vars);

}  // namespace liaison
