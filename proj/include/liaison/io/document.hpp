#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "liaison/polynomial.hpp"
#include "liaison/simplicial.hpp"
#include "liaison/term_order.hpp"

namespace liaison::io {

struct OrderSpec {
  enum class Kind { Lex, GrevLex, Product };
  Kind kind = Kind::Lex;
  std::vector<Variable> front;      // product only
  std::shared_ptr<OrderSpec> tail;  // product only

  // Builds the order on `vars` (priority list); product fronts are pulled out first.
  TermOrder build(const std::vector<Variable>& vars) const;
  bool operator==(const OrderSpec& o) const;
};

struct NamedIdeal {
  std::string name;
  std::vector<Polynomial> generators;
  bool operator==(const NamedIdeal&) const = default;
};

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
  bool operator==(const NamedComplex&) const = default;
};

struct SourceDocument {
  VariableNames names;
  std::vector<Variable> variables;  // ring variables by decreasing priority
  OrderSpec order_spec;
  std::vector<NamedIdeal> ideals;
  std::vector<NamedComplex> complexes;
  std::map<std::string, std::string> settings;

  TermOrder order() const { return order_spec.build(variables); }
  // Empty name selects the first ideal; throws PreconditionError when absent.
  const std::vector<Polynomial>& ideal(const std::string& name = "") const;
  const SimplicialComplex& complex(const std::string& name = "") const;
  bool operator==(const SourceDocument& o) const;
};

// Grammar (statements end with ';', the last one may omit it; '#' starts a comment):
//   ring v1 > v2 > ... [lex | grevlex | product(v, ...; <order>)];   (',' also separates)
//   [name =] (f1, f2, ...);
//   complex name [on v1, v2, ...] = ([v, ...], [], ...);  or  = void;
//   set key = value;
SourceDocument parse(std::string_view text);
// Single polynomial in the variables of doc; new names are added to doc.
Polynomial parse_polynomial(std::string_view text, SourceDocument& doc);

std::string format(const Monomial& m, const VariableNames& names);
std::string format(const Polynomial& f, const VariableNames& names, const TermOrder* order = nullptr);
std::string format_ideal(const std::vector<Polynomial>& gens, const VariableNames& names,
                         const TermOrder* order = nullptr);
std::string format(const MonomialIdeal& ideal, const VariableNames& names);
std::string format(const SimplicialComplex& complex, const VariableNames& names);
std::string format(const OrderSpec& spec, const VariableNames& names);
std::string format(const SourceDocument& doc);

}  // namespace liaison::io
