#include "liaison/variable.hpp"

#include <algorithm>
#include <cctype>

namespace liaison {

void VariableNames::set(std::int32_t base, std::string name) { names_[base] = std::move(name); }

std::string VariableNames::base_name(std::int32_t base) const {
  auto it = names_.find(base);
  if (it != names_.end()) return it->second;
  return "x_" + std::to_string(base);
}

std::string VariableNames::display(Variable v, bool explicit_layer) const {
  std::string stem = base_name(v.base);
  if (v.layer == 1 && !explicit_layer) return stem;
  return stem + "_" + std::to_string(v.layer);
}

std::optional<std::int32_t> VariableNames::base_of(std::string_view name) const {
  for (const auto& [b, n] : names_)
    if (n == name) return b;
  return std::nullopt;
}

namespace {

std::optional<std::int32_t> default_base(std::string_view s) {
  if (s.size() < 3 || s.substr(0, 2) != "x_") return std::nullopt;
  std::int64_t value = 0;
  for (char c : s.substr(2)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    value = value * 10 + (c - '0');
    if (value > 1'000'000) return std::nullopt;
  }
  if (value < 1) return std::nullopt;
  return static_cast<std::int32_t>(value);
}

}  // namespace

std::optional<Variable> VariableNames::resolve(std::string_view token) const {
  std::size_t primes = 0;
  while (!token.empty() && token.back() == '\'') {
    token.remove_suffix(1);
    ++primes;
  }
  if (auto b = base_of(token)) return Variable{*b, static_cast<std::int32_t>(1 + primes)};
  if (primes != 0) {
    if (auto b = default_base(token); b && !has(*b)) return Variable{*b, static_cast<std::int32_t>(1 + primes)};
    return std::nullopt;
  }
  std::optional<std::pair<std::string_view, int>> layered;
  if (auto pos = token.rfind('_'); pos != std::string_view::npos && pos > 0 && pos + 1 < token.size()) {
    std::string_view digits = token.substr(pos + 1);
    if (digits.size() <= 6 && std::all_of(digits.begin(), digits.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      int layer = std::stoi(std::string(digits));
      if (layer >= 1) layered = std::make_pair(token.substr(0, pos), layer);
    }
  }
  if (layered)
    if (auto b = base_of(layered->first)) return Variable{*b, layered->second};
  if (auto b = default_base(token); b && !has(*b)) return Variable{*b, 1};
  if (layered)
    if (auto b = default_base(layered->first); b && !has(*b)) return Variable{*b, layered->second};
  return std::nullopt;
}

std::vector<Variable> sorted_unique(std::vector<Variable> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

}  // namespace liaison
