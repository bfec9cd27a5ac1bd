#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "liaison/bdl.hpp"
#include "liaison/errors.hpp"
#include "liaison/geometric.hpp"
#include "liaison/groebner.hpp"
#include "liaison/io/certificate.hpp"
#include "liaison/io/document.hpp"

using namespace liaison;
using namespace liaison::io;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string input;
  std::string ideal;
  std::string cert;
  std::string var;
  std::string b;
  std::string path;
  std::string method = "search";
  std::vector<std::string> assertions;
  std::size_t budget = 5000;
  int degree = 10;
  bool weak = false;
};

std::string read_all(const std::string& path) {
  std::ostringstream os;
  if (path.empty() || path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open '" + path + "'");
    os << in.rdbuf();
  }
  return os.str();
}

void write_cert(const Options& o, const Json& j) {
  if (o.cert.empty()) return;
  std::ofstream out(o.cert);
  if (!out) throw PreconditionError("cannot write '" + o.cert + "'");
  out << j.dump(2) << '\n';
  std::cout << "certificate written to " << o.cert << '\n';
}

Variable variable_flag(const SourceDocument& doc, const std::string& name) {
  if (name.empty()) throw PreconditionError("--var is required");
  auto v = doc.names.resolve(name);
  if (!v || std::find(doc.variables.begin(), doc.variables.end(), *v) == doc.variables.end())
    throw PreconditionError("unknown variable '" + name + "'");
  return *v;
}

MonomialIdeal monomial_input(const SourceDocument& doc, const Options& o) {
  const auto& gens = doc.ideal(o.ideal);
  if (!is_monomial_ideal(gens)) throw PreconditionError("this command expects a monomial ideal");
  return as_monomial_ideal(gens, doc.variables);
}

TermOrder order_at(const TermOrder& base, Variable y) {
  if (is_y_compatible_global(base, y)) return base;
  std::vector<Variable> rest;
  for (Variable v : base.variables())
    if (v != y) rest.push_back(v);
  if (rest.empty()) return TermOrder::lex({y});
  return TermOrder::product({y}, base.restricted_to(rest));
}

void print_checks(const std::map<std::string, CheckStatus>& checks) {
  for (const auto& [k, v] : checks) std::cout << "    " << k << ": " << to_string(v) << '\n';
}

void print_shedding(const SheddingCertificate& n, const VariableNames& names, int depth) {
  if (!n) return;
  std::string pad(2 * depth, ' ');
  std::cout << pad << format(n->complex, names);
  if (n->vertex) {
    std::cout << "  shed " << names.display(*n->vertex) << (n->weak ? " (weak)" : "") << '\n';
    print_shedding(n->link_child, names, depth + 1);
    print_shedding(n->deletion_child, names, depth + 1);
  } else {
    static const char* reasons[] = {"", "empty face", "simplex", "Cohen-Macaulay"};
    std::cout << "  leaf: " << reasons[static_cast<int>(n->leaf)] << '\n';
  }
}

void print_gvd_tree(const GvdTree& n, const VariableNames& names, int depth) {
  if (!n) return;
  std::string pad(2 * depth, ' ');
  std::cout << pad << format_ideal(n->ideal, names) << "  " << to_string(n->outcome) << " (" << to_string(n->status)
            << ")";
  if (n->y) std::cout << " at " << names.display(*n->y);
  std::cout << ": " << n->reason << '\n';
  print_gvd_tree(n->c_child, names, depth + 1);
  print_gvd_tree(n->n_child, names, depth + 1);
}

int cmd_polarize(const SourceDocument& doc, const Options& o) {
  MonomialIdeal I = monomial_input(doc, o);
  PolarizationVector b;
  if (!o.b.empty()) {
    std::vector<std::uint32_t> entries;
    std::stringstream ss(o.b);
    for (std::string item; std::getline(ss, item, ',');) entries.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    b = PolarizationVector::from_list(I.universe(), entries);
  } else {
    b = PolarizationVector::full(I);
  }
  std::cout << format(polarize(I, b), doc.names) << '\n';
  return kOk;
}

int cmd_depolarize(const SourceDocument& doc, const Options& o) {
  std::cout << format(depolarize(monomial_input(doc, o)), doc.names) << '\n';
  return kOk;
}

int cmd_gb(const SourceDocument& doc, const Options& o) {
  TermOrder order = doc.order();
  GroebnerBasis gb = groebner_basis(doc.ideal(o.ideal), order);
  std::cout << "order: " << format(doc.order_spec, doc.names) << '\n';
  std::cout << format_ideal(gb.elements(), doc.names, &order) << '\n';
  std::cout << "initial ideal: " << format(initial_ideal(gb), doc.names) << '\n';
  return kOk;
}

int cmd_hilbert(const SourceDocument& doc, const Options& o) {
  KPolynomial k = hilbert_series_quotient(doc.ideal(o.ideal), doc.order());
  std::cout << "K-polynomial:";
  for (std::size_t i = 0; i < k.numerator.size(); ++i) std::cout << ' ' << k.numerator[i] << "*t^" << i;
  std::cout << "\nambient variables: " << k.ambient_dim << "\nKrull dimension: " << k.krull_dimension()
            << "\nmultiplicity: " << k.multiplicity() << "\nseries:";
  for (long long c : k.series(o.degree)) std::cout << ' ' << c;
  std::cout << '\n';
  return kOk;
}

int cmd_sr(const SourceDocument& doc, const Options& o) {
  if (!doc.complexes.empty()) {
    std::cout << format(to_ideal(doc.complex(o.ideal)), doc.names) << '\n';
    return kOk;
  }
  MonomialIdeal I = monomial_input(doc, o);
  if (!I.is_squarefree()) throw PreconditionError("Stanley-Reisner complex requires a squarefree ideal");
  std::cout << format(from_ideal(I), doc.names) << '\n';
  return kOk;
}

int cmd_vdecomp(const SourceDocument& doc, const Options& o) {
  SimplicialComplex c = doc.complexes.empty() ? from_ideal(monomial_input(doc, o)) : doc.complex(o.ideal);
  auto cert = o.weak ? is_weakly_vertex_decomposable(c) : is_vertex_decomposable(c);
  if (!cert) {
    std::cout << (o.weak ? "not weakly vertex decomposable\n" : "not vertex decomposable\n");
    return kFail;
  }
  std::cout << (o.weak ? "weakly vertex decomposable\n" : "vertex decomposable\n");
  print_shedding(*cert, doc.names, 0);
  write_cert(o, shedding_certificate(*cert, doc.names));
  return kOk;
}

int cmd_bdl(const SourceDocument& doc, const Options& o) {
  MonomialIdeal C = monomial_input(doc, o);
  BDLStep s = verify_bdl(bdl_decompose(C, variable_flag(doc, o.var)));
  std::cout << "A = " << format(s.A, doc.names) << "\nB = " << format(s.B, doc.names) << '\n';
  for (const auto& [k, v] : s.checks.list()) std::cout << "    " << k << ": " << (v ? "ok" : "failed") << '\n';
  std::cout << (s.verified() ? "basic double G-link verified\n" : "not a basic double G-link\n");
  return s.verified() ? kOk : kFail;
}

int cmd_glicci(const SourceDocument& doc, const Options& o) {
  MonomialIdeal I = monomial_input(doc, o);
  std::optional<GlicciChain> chain;
  SheddingCertificate shedding;
  if (o.method == "stable" || o.method == "artinian") {
    ConstructiveChain cc = o.method == "stable" ? stable_chain(I) : artinian_chain(I);
    chain = cc.chain;
    shedding = cc.shedding;
  } else if (o.method == "search") {
    chain = glicci_chain_search(I, o.budget);
  } else {
    throw PreconditionError("unknown method '" + o.method + "'");
  }
  if (!chain) {
    std::cout << "no chain found within the budget (this does not show the ideal is not glicci)\n";
    return kFail;
  }
  for (std::size_t i = 0; i < chain->steps.size(); ++i) {
    const BDLStep& s = chain->steps[i];
    std::cout << "step " << i + 1 << ": " << format(s.C, doc.names) << " = " << doc.names.display(s.z) << " * "
              << format(s.B, doc.names) << " + " << format(s.A, doc.names) << '\n';
  }
  std::cout << "terminal: " << format(chain->terminal, doc.names) << '\n';
  std::cout << "basic double G-links: " << chain->steps.size() << '\n';
  std::cout << "chain length (G-links): " << chain->g_link_length() << '\n';
  ChainReport rep = verify_chain(*chain);
  std::cout << "verification: " << (rep.ok ? "ok" : rep.failure) << '\n';
  write_cert(o, bdl_chain_certificate(*chain, doc.names, shedding));
  return rep.ok ? kOk : kFail;
}

int cmd_geopol(const SourceDocument& doc, const Options& o) {
  Variable y = variable_flag(doc, o.var);
  TermOrder order = order_at(doc.order(), y);
  GroebnerBasis G = groebner_basis(doc.ideal(o.ideal), order);
  GeoPolarization gp = decide_gb_status(geo_polarize_gb(G, y));
  VariableNames names = doc.names;
  std::cout << "Groebner basis: " << format_ideal(G.elements(), names, &order) << '\n';
  std::cout << "uniform y-degree: " << (uniform_y_degree(G, y) ? "yes" : "no") << '\n';
  std::cout << "polarization: " << format_ideal(gp.polarized, names, &gp.induced) << '\n';
  std::cout << "Groebner basis under the induced order: " << to_string(gp.gb_status) << '\n';
  std::cout << "y - y' : " << to_string(gp.nzd_status) << '\n';
  if (gp.gb_status == GbStatus::NotGb) {
    if (auto w = zerodivisor_witness(gp)) std::cout << "zerodivisor witness: " << format(*w, names) << '\n';
    return kFail;
  }
  return kOk;
}

int cmd_gvd(const SourceDocument& doc, const Options& o) {
  TermOrder base = doc.order();
  if (!o.var.empty()) {
    Variable y = variable_flag(doc, o.var);
    TermOrder order = order_at(base, y);
    GVD g = gvd(doc.ideal(o.ideal), y, order);
    std::cout << "in_y(I) = " << format_ideal(g.in_y_generators, doc.names, &order) << '\n';
    std::cout << "C = " << format_ideal(g.C.elements(), doc.names, &order) << '\n';
    std::cout << "N = " << format_ideal(g.N.elements(), doc.names, &order) << '\n';
    std::cout << "nondegenerate: " << to_string(g.nondegenerate) << " (" << g.nondegeneracy_method << ")\n";
    return g.nondegenerate == Tri::Yes ? kOk : kFail;
  }
  GvdMode mode = o.weak ? GvdMode::Weak : GvdMode::Plain;
  GvdTree tree = is_geometrically_vertex_decomposable(doc.ideal(o.ideal), base, mode);
  print_gvd_tree(tree, doc.names, 0);
  std::cout << (o.weak ? "weakly " : "") << "geometrically vertex decomposable: " << to_string(tree->outcome) << '\n';
  write_cert(o, gvd_tree_certificate(tree, base, mode, doc.names));
  return tree->outcome == Outcome::Success ? kOk : kFail;
}

int cmd_biliaison(const SourceDocument& doc, const Options& o) {
  if (o.path.empty()) throw PreconditionError("--path v1,v2,... is required");
  std::set<std::string> asserted(o.assertions.begin(), o.assertions.end());
  BiliaisonChain chain;
  std::vector<Polynomial> current = doc.ideal(o.ideal);
  std::stringstream ss(o.path);
  for (std::string name; std::getline(ss, name, ',');) {
    Variable y = variable_flag(doc, name);
    BiliaisonStep s = biliaison_at(current, order_at(doc.order(), y), y, asserted);
    std::cout << "step " << chain.steps.size() + 1 << " at " << name << (s.y_primed ? " (via polarization)" : "")
              << ":\n  I = " << format_ideal(s.I, doc.names) << "\n  D = " << format_ideal(s.D, doc.names)
              << "\n  N = " << format_ideal(s.N, doc.names) << "\n  witness = (" << format(s.witness_v, doc.names)
              << ") / (" << format(s.witness_d, doc.names) << ")\n  status: " << to_string(s.status()) << '\n';
    print_checks(s.checks);
    current = s.D;
    chain.steps.push_back(std::move(s));
  }
  ChainVerdict v = verify_biliaison_chain(chain);
  std::cout << "chain status: " << to_string(v.status) << '\n';
  std::cout << "ends at a complete intersection: " << (v.terminal_complete_intersection ? "yes" : "no") << '\n';
  for (const auto& p : v.problems) std::cout << "  " << p << '\n';
  write_cert(o, biliaison_chain_certificate(chain, doc.names));
  return is_positive(v.status) ? kOk : kFail;
}

int cmd_verify(const Options& o) {
  if (o.cert.empty()) throw PreconditionError("--cert is required");
  Json j;
  try {
    j = Json::parse(read_all(o.cert));
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("certificate is not valid JSON: ") + e.what());
  }
  CertificateAudit a = verify_certificate(j);
  std::cout << "certificate kind: " << a.kind << '\n';
  for (const auto& line : a.lines) std::cout << "  " << line << '\n';
  std::cout << "result: " << (a.ok ? "accepted" : "rejected") << " (" << to_string(a.status) << ")\n";
  return a.ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Liaison toolkit for monomial and polynomial ideals"};
  app.require_subcommand(1);
  Options o;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--in,input", o.input, "input document (default: stdin)");
    sub->add_option("--ideal", o.ideal, "name of the ideal or complex to use");
    return sub;
  };
  std::map<std::string, CLI::App*> subs;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    subs[name] = s;
    return s;
  };
  add_input(sub("polarize", "polarize a monomial ideal"))->add_option("--b", o.b, "partial polarization b_1,...,b_n");
  add_input(sub("depolarize", "depolarize a layered monomial ideal"));
  add_input(sub("gb", "reduced Groebner basis"));
  add_input(sub("hilbert", "Hilbert series of R/I"))->add_option("--degree", o.degree, "series degree");
  add_input(sub("sr", "Stanley-Reisner ideal <-> complex"));
  {
    CLI::App* t = add_input(sub("vdecomp", "vertex decomposition of a complex"));
    t->add_flag("--weak", o.weak, "weak vertex decomposability");
    t->add_option("--cert", o.cert, "write a shedding certificate");
  }
  {
    CLI::App* s = sub("bdl", "basic double G-link at a variable");
    add_input(s);
    s->add_option("--var", o.var, "multiplier variable")->required();
  }
  {
    CLI::App* s = sub("glicci", "chain of basic double G-links to an ideal of variables");
    add_input(s);
    s->add_option("--budget", o.budget, "verification budget for the search");
    s->add_option("--method", o.method, "search | stable | artinian");
    s->add_option("--cert", o.cert, "write a bdl_chain certificate");
  }
  {
    CLI::App* s = sub("geopol", "geometric polarization of a Groebner basis");
    add_input(s);
    s->add_option("--var", o.var, "variable y")->required();
  }
  {
    CLI::App* s = sub("gvd", "geometric vertex decomposition");
    add_input(s);
    s->add_option("--var", o.var, "decompose at this variable only");
    s->add_flag("--weak", o.weak, "weak decomposability search");
    s->add_option("--cert", o.cert, "write a gvd_tree certificate");
  }
  {
    CLI::App* s = sub("biliaison", "chain of elementary G-biliaisons");
    add_input(s);
    s->add_option("--path", o.path, "variables, comma separated")->required();
    s->add_option("--assert", o.assertions, "checks to assert when undecided");
    s->add_option("--cert", o.cert, "write a biliaison_chain certificate");
  }
  sub("verify", "verify a certificate")->add_option("--cert", o.cert, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (subs["verify"]->parsed()) return cmd_verify(o);
    SourceDocument doc = parse(read_all(o.input));
    if (subs["polarize"]->parsed()) return cmd_polarize(doc, o);
    if (subs["depolarize"]->parsed()) return cmd_depolarize(doc, o);
    if (subs["gb"]->parsed()) return cmd_gb(doc, o);
    if (subs["hilbert"]->parsed()) return cmd_hilbert(doc, o);
    if (subs["sr"]->parsed()) return cmd_sr(doc, o);
    if (subs["vdecomp"]->parsed()) return cmd_vdecomp(doc, o);
    if (subs["bdl"]->parsed()) return cmd_bdl(doc, o);
    if (subs["glicci"]->parsed()) return cmd_glicci(doc, o);
    if (subs["geopol"]->parsed()) return cmd_geopol(doc, o);
    if (subs["gvd"]->parsed()) return cmd_gvd(doc, o);
    if (subs["biliaison"]->parsed()) return cmd_biliaison(doc, o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const SchemaError& e) {
    std::cerr << "invalid certificate: " << e.what() << '\n';
    return kFail;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kFail;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
