#include <sstream>

#include "liaison/io/document.hpp"

namespace liaison::io {

std::string format(const Monomial& m, const VariableNames& names) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.entries()) {
    if (!out.empty()) out += '*';
    out += names.display(v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string format(const Polynomial& f, const VariableNames& names, const TermOrder* order) {
  if (f.is_zero()) return "0";
  std::vector<Term> terms = order ? f.sorted(*order) : f.terms();
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Rational c = terms[i].coef;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (i == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Monomial& m = terms[i].mono;
    if (m.is_one())
      out += to_string(c);
    else if (c == 1)
      out += format(m, names);
    else
      out += to_string(c) + "*" + format(m, names);
  }
  return out;
}

std::string format_ideal(const std::vector<Polynomial>& gens, const VariableNames& names, const TermOrder* order) {
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += format(gens[i], names, order);
  }
  return out + ")";
}

std::string format(const MonomialIdeal& ideal, const VariableNames& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out += ", ";
    out += format(ideal.generators()[i], names);
  }
  return out + ")";
}

namespace {

std::string vertex_list(const std::vector<Variable>& vs, const VariableNames& names) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += names.display(vs[i]);
  }
  return out;
}

}  // namespace

std::string format(const SimplicialComplex& complex, const VariableNames& names) {
  if (complex.is_void()) return "void";
  std::string out = "(";
  auto facets = complex.facet_sets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (i) out += ", ";
    out += "[" + vertex_list(facets[i], names) + "]";
  }
  return out + ")";
}

std::string format(const OrderSpec& spec, const VariableNames& names) {
  switch (spec.kind) {
    case OrderSpec::Kind::Lex:
      return "lex";
    case OrderSpec::Kind::GrevLex:
      return "grevlex";
    case OrderSpec::Kind::Product:
      return "product(" + vertex_list(spec.front, names) + "; " +
             (spec.tail ? format(*spec.tail, names) : std::string("lex")) + ")";
  }
  return "lex";
}

std::string format(const SourceDocument& doc) {
  std::ostringstream os;
  os << "ring " << vertex_list(doc.variables, doc.names) << ' ' << format(doc.order_spec, doc.names) << ";\n";
  TermOrder order = doc.order();
  for (const auto& [k, v] : doc.settings) os << "set " << k << " = " << v << ";\n";
  for (const auto& i : doc.ideals) {
    if (!i.name.empty()) os << i.name << " = ";
    os << format_ideal(i.generators, doc.names, &order) << ";\n";
  }
  for (const auto& c : doc.complexes)
    os << "complex " << c.name << " on " << vertex_list(c.complex.universe(), doc.names) << " = "
       << format(c.complex, doc.names) << ";\n";
  return os.str();
}

}  // namespace liaison::io
