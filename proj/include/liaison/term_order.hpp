#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "liaison/monomial.hpp"

namespace liaison {

// Monomial order over an explicit universe listed by decreasing priority.
class TermOrder {
 public:
  enum class Kind { Lex, GrevLex, Product, Induced };

  static TermOrder lex(std::vector<Variable> vars);
  static TermOrder grevlex(std::vector<Variable> vars);
  // Lex on the front block, ties broken by tail (which must not mention front variables).
  static TermOrder product(std::vector<Variable> front, TermOrder tail);
  // Compares depol images under base, then the larger y-degree wins.
  static TermOrder induced(TermOrder base, Variable y, Variable y_primed);

  Kind kind() const;
  const std::vector<Variable>& variables() const;
  bool contains(Variable v) const;
  std::size_t rank(Variable v) const;  // 0 is the highest priority

  // Throws PreconditionError when a variable is outside the universe.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const;
  void check_universe(const Monomial& m) const;

  // Component access for product / induced orders.
  const std::vector<Variable>& front() const;
  const TermOrder& tail() const;
  const TermOrder& base() const;
  Variable y() const;
  Variable y_primed() const;

  // Same shape with v inserted into the universe directly after `after`.
  TermOrder with_variable_after(Variable v, Variable after) const;
  // Same shape with v appended at lowest priority.
  TermOrder with_variable_appended(Variable v) const;
  // Same shape restricted to the given variables (priority kept).
  TermOrder restricted_to(const std::vector<Variable>& keep) const;

  std::string describe() const;

  struct Node;

 private:
  explicit TermOrder(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace liaison
