#include "liaison/io/certificate.hpp"

#include <functional>
#include <map>
#include <set>

#include "liaison/errors.hpp"

namespace liaison::io {

namespace {

// ---- writing ------------------------------------------------------------------

class Writer {
 public:
  explicit Writer(const VariableNames& names) : names_(names) {}

  std::string name(Variable v) {
    std::string s = names_.display(v);
    auto [it, inserted] = by_name_.emplace(s, v);
    if (!inserted && it->second != v) throw Error("variable name collision in certificate: " + s);
    used_.insert(v);
    return s;
  }

  Json names_of(const std::vector<Variable>& vs) {
    Json a = Json::array();
    for (Variable v : vs) a.push_back(name(v));
    return a;
  }

  Json monomial(const Monomial& m) {
    Json o = Json::object();
    for (const auto& [v, e] : m.entries()) o[name(v)] = e;
    return o;
  }

  Json polynomial(const Polynomial& f) {
    Json a = Json::array();
    for (const auto& t : f.terms()) a.push_back({{"c", to_string(t.coef)}, {"m", monomial(t.mono)}});
    return a;
  }

  Json polynomials(const std::vector<Polynomial>& fs) {
    Json a = Json::array();
    for (const auto& f : fs) a.push_back(polynomial(f));
    return a;
  }

  Json ideal(const MonomialIdeal& I) {
    Json g = Json::array();
    for (const auto& m : I.generators()) g.push_back(monomial(m));
    return {{"universe", names_of(I.universe())}, {"generators", g}};
  }

  Json order(const TermOrder& o) {
    switch (o.kind()) {
      case TermOrder::Kind::Lex:
        return {{"kind", "lex"}, {"variables", names_of(o.variables())}};
      case TermOrder::Kind::GrevLex:
        return {{"kind", "grevlex"}, {"variables", names_of(o.variables())}};
      case TermOrder::Kind::Product:
        return {{"kind", "product"}, {"front", names_of(o.front())}, {"tail", order(o.tail())}};
      case TermOrder::Kind::Induced:
        return {{"kind", "induced"}, {"base", order(o.base())}, {"y", name(o.y())}, {"y_primed", name(o.y_primed())}};
    }
    return nullptr;
  }

  Json complex(const SimplicialComplex& c) {
    Json f = Json::array();
    for (const auto& facet : c.facet_sets()) f.push_back(names_of(facet));
    return {{"universe", names_of(c.universe())}, {"facets", f}, {"void", c.is_void()}};
  }

  Json ring() {
    Json a = Json::array();
    for (Variable v : used_)
      a.push_back({{"name", names_.display(v)}, {"stem", names_.base_name(v.base)}, {"base", v.base}, {"layer", v.layer}});
    return a;
  }

 private:
  const VariableNames& names_;
  std::map<std::string, Variable> by_name_;
  std::set<Variable> used_;
};

Json envelope(const std::string& kind, Writer& w, Json payload) {
  return {{"version", kCertificateVersion}, {"kind", kind}, {"ring", w.ring()}, {"payload", std::move(payload)}};
}

std::string leaf_name(LeafReason r) {
  switch (r) {
    case LeafReason::EmptyFace:
      return "empty_face";
    case LeafReason::Simplex:
      return "simplex";
    case LeafReason::CohenMacaulay:
      return "cohen_macaulay";
    default:
      return "none";
  }
}

LeafReason leaf_from(const std::string& s) {
  if (s == "empty_face") return LeafReason::EmptyFace;
  if (s == "simplex") return LeafReason::Simplex;
  if (s == "cohen_macaulay") return LeafReason::CohenMacaulay;
  if (s == "none") return LeafReason::None;
  throw SchemaError("unknown leaf reason '" + s + "'");
}

Json bdl_step(Writer& w, const BDLStep& s) {
  Json checks = Json::object();
  for (const auto& [k, v] : s.checks.list()) checks[k] = v;
  Json relabel = Json::array();
  for (const auto& [from, to] : s.relabel) relabel.push_back({w.name(from), w.name(to)});
  return {{"C", w.ideal(s.C)}, {"z", w.name(s.z)},          {"A", w.ideal(s.A)},     {"B", w.ideal(s.B)},
          {"z_absent", s.z_absent}, {"checked", s.checked}, {"checks", checks}, {"relabel", relabel}};
}

Json shedding_node(Writer& w, const SheddingCertificate& n) {
  if (!n) return nullptr;
  return {{"complex", w.complex(n->complex)},
          {"vertex", n->vertex ? Json(w.name(*n->vertex)) : Json(nullptr)},
          {"leaf", leaf_name(n->leaf)},
          {"weak", n->weak},
          {"link", shedding_node(w, n->link_child)},
          {"deletion", shedding_node(w, n->deletion_child)}};
}

Json status_map(const std::map<std::string, CheckStatus>& m) {
  Json o = Json::object();
  for (const auto& [k, v] : m) o[k] = to_string(v);
  return o;
}

Json gvd_node(Writer& w, const GvdTree& n) {
  if (!n) return nullptr;
  return {{"ideal", w.polynomials(n->ideal)},
          {"ring", w.names_of(n->ring)},
          {"leaf", n->leaf},
          {"y", n->y ? Json(w.name(*n->y)) : Json(nullptr)},
          {"outcome", to_string(n->outcome)},
          {"status", to_string(n->status)},
          {"reason", n->reason},
          {"checks", status_map(n->checks)},
          {"c_child", gvd_node(w, n->c_child)},
          {"n_child", gvd_node(w, n->n_child)}};
}

// ---- validation ---------------------------------------------------------------

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw SchemaError("certificate " + path + ": " + what);
}

const Json& field(const Json& o, const char* key, const std::string& path) {
  if (!o.is_object()) bad(path, "expected an object");
  auto it = o.find(key);
  if (it == o.end()) bad(path, std::string("missing key '") + key + "'");
  return *it;
}

void expect_type(const Json& v, Json::value_t t, const std::string& path) {
  bool ok = v.type() == t || (t == Json::value_t::number_integer && v.is_number_unsigned());
  if (!ok) bad(path, std::string("expected ") + Json(t).type_name() + ", found " + v.type_name());
}

void expect_string(const Json& v, const std::string& path) { expect_type(v, Json::value_t::string, path); }
void expect_bool(const Json& v, const std::string& path) { expect_type(v, Json::value_t::boolean, path); }
void expect_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path, "expected an integer");
}

void expect_names(const Json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array of variable names");
  for (std::size_t i = 0; i < v.size(); ++i) expect_string(v[i], path + "[" + std::to_string(i) + "]");
}

void check_monomial(const Json& v, const std::string& path) {
  if (!v.is_object()) bad(path, "expected a monomial object");
  for (const auto& [k, e] : v.items())
    if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long long>() >= 0))
      bad(path + "." + k, "expected a non-negative exponent");
}

void check_polynomial(const Json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "expected a term array");
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::string p = path + "[" + std::to_string(i) + "]";
    expect_string(field(v[i], "c", p), p + ".c");
    check_monomial(field(v[i], "m", p), p + ".m");
  }
}

void check_polynomials(const Json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array of polynomials");
  for (std::size_t i = 0; i < v.size(); ++i) check_polynomial(v[i], path + "[" + std::to_string(i) + "]");
}

void check_ideal(const Json& v, const std::string& path) {
  expect_names(field(v, "universe", path), path + ".universe");
  const Json& g = field(v, "generators", path);
  if (!g.is_array()) bad(path + ".generators", "expected an array");
  for (std::size_t i = 0; i < g.size(); ++i) check_monomial(g[i], path + ".generators[" + std::to_string(i) + "]");
}

void check_order(const Json& v, const std::string& path) {
  const Json& k = field(v, "kind", path);
  expect_string(k, path + ".kind");
  std::string kind = k.get<std::string>();
  if (kind == "lex" || kind == "grevlex") {
    expect_names(field(v, "variables", path), path + ".variables");
  } else if (kind == "product") {
    expect_names(field(v, "front", path), path + ".front");
    check_order(field(v, "tail", path), path + ".tail");
  } else if (kind == "induced") {
    check_order(field(v, "base", path), path + ".base");
    expect_string(field(v, "y", path), path + ".y");
    expect_string(field(v, "y_primed", path), path + ".y_primed");
  } else {
    bad(path + ".kind", "unknown order kind '" + kind + "'");
  }
}

void check_status_map(const Json& v, const std::string& path) {
  if (!v.is_object()) bad(path, "expected an object of statuses");
  for (const auto& [k, s] : v.items()) {
    expect_string(s, path + "." + k);
    try {
      check_status_from_string(s.get<std::string>());
    } catch (const SchemaError&) {
      bad(path + "." + k, "unknown status '" + s.get<std::string>() + "'");
    }
  }
}

void check_nullable(const Json& v, const std::string& path, const std::function<void(const Json&, const std::string&)>& f) {
  if (!v.is_null()) f(v, path);
}

void check_shedding(const Json& v, const std::string& path) {
  const Json& c = field(v, "complex", path);
  expect_names(field(c, "universe", path + ".complex"), path + ".complex.universe");
  const Json& facets = field(c, "facets", path + ".complex");
  if (!facets.is_array()) bad(path + ".complex.facets", "expected an array");
  for (std::size_t i = 0; i < facets.size(); ++i)
    expect_names(facets[i], path + ".complex.facets[" + std::to_string(i) + "]");
  expect_bool(field(c, "void", path + ".complex"), path + ".complex.void");
  check_nullable(field(v, "vertex", path), path + ".vertex", expect_string);
  expect_string(field(v, "leaf", path), path + ".leaf");
  expect_bool(field(v, "weak", path), path + ".weak");
  check_nullable(field(v, "link", path), path + ".link", check_shedding);
  check_nullable(field(v, "deletion", path), path + ".deletion", check_shedding);
}

void check_gvd_node(const Json& v, const std::string& path) {
  check_polynomials(field(v, "ideal", path), path + ".ideal");
  expect_names(field(v, "ring", path), path + ".ring");
  expect_bool(field(v, "leaf", path), path + ".leaf");
  check_nullable(field(v, "y", path), path + ".y", expect_string);
  expect_string(field(v, "outcome", path), path + ".outcome");
  expect_string(field(v, "status", path), path + ".status");
  expect_string(field(v, "reason", path), path + ".reason");
  check_status_map(field(v, "checks", path), path + ".checks");
  check_nullable(field(v, "c_child", path), path + ".c_child", check_gvd_node);
  check_nullable(field(v, "n_child", path), path + ".n_child", check_gvd_node);
}

// ---- reading ------------------------------------------------------------------

class Reader {
 public:
  explicit Reader(const Json& doc) {
    for (const auto& e : doc.at("ring")) {
      Variable v{e.at("base").get<std::int32_t>(), e.at("layer").get<std::int32_t>()};
      std::string stem = e.at("stem").get<std::string>();
      if (stem != "x_" + std::to_string(v.base)) ring_.names.set(v.base, stem);
      if (!by_name_.emplace(e.at("name").get<std::string>(), v).second)
        throw SchemaError("certificate ring: duplicate variable name");
      ring_.variables.push_back(v);
    }
  }

  const CertificateRing& ring() const { return ring_; }

  Variable var(const Json& n) const {
    auto it = by_name_.find(n.get<std::string>());
    if (it == by_name_.end()) throw SchemaError("certificate: unknown variable '" + n.get<std::string>() + "'");
    return it->second;
  }
  std::vector<Variable> vars(const Json& a) const {
    std::vector<Variable> out;
    for (const auto& n : a) out.push_back(var(n));
    return out;
  }
  Monomial monomial(const Json& o) const {
    Monomial m;
    for (const auto& [k, e] : o.items()) m *= Monomial::of(var(Json(k)), e.get<std::uint32_t>());
    return m;
  }
  Polynomial polynomial(const Json& a) const {
    std::vector<Term> terms;
    for (const auto& t : a) {
      try {
        terms.push_back({parse_rational(t.at("c").get<std::string>()), monomial(t.at("m"))});
      } catch (const PreconditionError& e) {
        throw SchemaError(std::string("certificate coefficient: ") + e.what());
      }
    }
    return Polynomial::from_terms(std::move(terms));
  }
  std::vector<Polynomial> polynomials(const Json& a) const {
    std::vector<Polynomial> out;
    for (const auto& f : a) out.push_back(polynomial(f));
    return out;
  }
  MonomialIdeal ideal(const Json& o) const {
    std::vector<Monomial> g;
    for (const auto& m : o.at("generators")) g.push_back(monomial(m));
    return MonomialIdeal(std::move(g), vars(o.at("universe")));
  }
  TermOrder order(const Json& o) const {
    std::string kind = o.at("kind").get<std::string>();
    if (kind == "lex") return TermOrder::lex(vars(o.at("variables")));
    if (kind == "grevlex") return TermOrder::grevlex(vars(o.at("variables")));
    if (kind == "product") return TermOrder::product(vars(o.at("front")), order(o.at("tail")));
    return TermOrder::induced(order(o.at("base")), var(o.at("y")), var(o.at("y_primed")));
  }
  SimplicialComplex complex(const Json& o) const {
    std::vector<Variable> universe = vars(o.at("universe"));
    if (o.at("void").get<bool>()) return SimplicialComplex::void_complex(universe);
    std::vector<std::vector<Variable>> faces;
    for (const auto& f : o.at("facets")) faces.push_back(vars(f));
    return SimplicialComplex(universe, faces);
  }
  SheddingCertificate shedding(const Json& o) const {
    if (o.is_null()) return nullptr;
    SheddingNode n;
    n.complex = complex(o.at("complex"));
    if (!o.at("vertex").is_null()) n.vertex = var(o.at("vertex"));
    n.leaf = leaf_from(o.at("leaf").get<std::string>());
    n.weak = o.at("weak").get<bool>();
    n.link_child = shedding(o.at("link"));
    n.deletion_child = shedding(o.at("deletion"));
    return std::make_shared<const SheddingNode>(std::move(n));
  }
  GvdTree gvd(const Json& o) const {
    if (o.is_null()) return nullptr;
    GvdTreeNode n;
    n.ideal = polynomials(o.at("ideal"));
    n.ring = vars(o.at("ring"));
    n.leaf = o.at("leaf").get<bool>();
    if (!o.at("y").is_null()) n.y = var(o.at("y"));
    std::string out = o.at("outcome").get<std::string>();
    n.outcome = out == "success" ? Outcome::Success : (out == "failure" ? Outcome::Failure : Outcome::Unknown);
    n.status = check_status_from_string(o.at("status").get<std::string>());
    n.reason = o.at("reason").get<std::string>();
    for (const auto& [k, s] : o.at("checks").items()) n.checks[k] = check_status_from_string(s.get<std::string>());
    n.c_child = gvd(o.at("c_child"));
    n.n_child = gvd(o.at("n_child"));
    return std::make_shared<const GvdTreeNode>(std::move(n));
  }

 private:
  CertificateRing ring_;
  std::map<std::string, Variable> by_name_;
};

}  // namespace

// ---- public writers -------------------------------------------------------------

Json bdl_chain_certificate(const GlicciChain& chain, const VariableNames& names, const SheddingCertificate& shedding) {
  Writer w(names);
  Json steps = Json::array();
  for (const auto& s : chain.steps) steps.push_back(bdl_step(w, s));
  Json payload = {{"start", w.ideal(chain.start)},
                  {"steps", steps},
                  {"terminal", w.ideal(chain.terminal)},
                  {"g_link_length", chain.g_link_length()}};
  if (shedding) payload["shedding"] = shedding_node(w, shedding);
  return envelope("bdl_chain", w, std::move(payload));
}

Json shedding_certificate(const SheddingCertificate& root, const VariableNames& names) {
  Writer w(names);
  Json payload = {{"root", shedding_node(w, root)}};
  return envelope("shedding", w, std::move(payload));
}

Json biliaison_chain_certificate(const BiliaisonChain& chain, const VariableNames& names) {
  Writer w(names);
  Json steps = Json::array();
  CheckStatus overall = CheckStatus::Verified;
  for (const auto& s : chain.steps) {
    overall = conjunction(overall, s.status());
    steps.push_back({{"order", w.order(s.order)},
                     {"I", w.polynomials(s.I)},
                     {"y", w.name(s.y)},
                     {"D", w.polynomials(s.D)},
                     {"N", w.polynomials(s.N)},
                     {"shift", s.shift},
                     {"witness", {{"v", w.polynomial(s.witness_v)}, {"d", w.polynomial(s.witness_d)}}},
                     {"checks", status_map(s.checks)},
                     {"y_primed", s.y_primed ? Json(w.name(*s.y_primed)) : Json(nullptr)},
                     {"polarized", w.polynomials(s.polarized_basis)}});
  }
  Json payload = {{"steps", steps}, {"status", to_string(overall)}};
  return envelope("biliaison_chain", w, std::move(payload));
}

Json gvd_tree_certificate(const GvdTree& tree, const TermOrder& base, GvdMode mode, const VariableNames& names) {
  Writer w(names);
  Json payload = {{"mode", mode == GvdMode::Plain ? "plain" : "weak"},
                  {"base_order", w.order(base)},
                  {"tree", gvd_node(w, tree)}};
  return envelope("gvd_tree", w, std::move(payload));
}

// ---- validation and reading -----------------------------------------------------

void validate_certificate(const Json& doc) {
  if (!doc.is_object()) bad("root", "expected an object");
  const Json& version = field(doc, "version", "root");
  expect_int(version, "version");
  if (version.get<long long>() != kCertificateVersion)
    throw SchemaError("unsupported certificate version " + version.dump());
  const Json& kind = field(doc, "kind", "root");
  expect_string(kind, "kind");
  const Json& ring = field(doc, "ring", "root");
  if (!ring.is_array()) bad("ring", "expected an array");
  for (std::size_t i = 0; i < ring.size(); ++i) {
    std::string p = "ring[" + std::to_string(i) + "]";
    expect_string(field(ring[i], "name", p), p + ".name");
    expect_string(field(ring[i], "stem", p), p + ".stem");
    expect_int(field(ring[i], "base", p), p + ".base");
    expect_int(field(ring[i], "layer", p), p + ".layer");
  }
  const Json& payload = field(doc, "payload", "root");
  if (!payload.is_object()) bad("payload", "expected an object");
  std::string k = kind.get<std::string>();
  if (k == "bdl_chain") {
    check_ideal(field(payload, "start", "payload"), "payload.start");
    check_ideal(field(payload, "terminal", "payload"), "payload.terminal");
    expect_int(field(payload, "g_link_length", "payload"), "payload.g_link_length");
    const Json& steps = field(payload, "steps", "payload");
    if (!steps.is_array()) bad("payload.steps", "expected an array");
    for (std::size_t i = 0; i < steps.size(); ++i) {
      std::string p = "payload.steps[" + std::to_string(i) + "]";
      for (const char* key : {"C", "A", "B"}) check_ideal(field(steps[i], key, p), p + "." + key);
      expect_string(field(steps[i], "z", p), p + ".z");
      expect_bool(field(steps[i], "z_absent", p), p + ".z_absent");
      expect_bool(field(steps[i], "checked", p), p + ".checked");
      const Json& checks = field(steps[i], "checks", p);
      if (!checks.is_object()) bad(p + ".checks", "expected an object");
      for (const auto& [name, v] : checks.items()) expect_bool(v, p + ".checks." + name);
      const Json& relabel = field(steps[i], "relabel", p);
      if (!relabel.is_array()) bad(p + ".relabel", "expected an array");
      for (const auto& pair : relabel)
        if (!pair.is_array() || pair.size() != 2) bad(p + ".relabel", "expected name pairs");
    }
    if (payload.contains("shedding")) check_nullable(payload.at("shedding"), "payload.shedding", check_shedding);
  } else if (k == "shedding") {
    check_nullable(field(payload, "root", "payload"), "payload.root", check_shedding);
  } else if (k == "biliaison_chain") {
    expect_string(field(payload, "status", "payload"), "payload.status");
    const Json& steps = field(payload, "steps", "payload");
    if (!steps.is_array()) bad("payload.steps", "expected an array");
    for (std::size_t i = 0; i < steps.size(); ++i) {
      std::string p = "payload.steps[" + std::to_string(i) + "]";
      check_order(field(steps[i], "order", p), p + ".order");
      for (const char* key : {"I", "D", "N", "polarized"}) check_polynomials(field(steps[i], key, p), p + "." + key);
      expect_string(field(steps[i], "y", p), p + ".y");
      expect_int(field(steps[i], "shift", p), p + ".shift");
      const Json& wit = field(steps[i], "witness", p);
      check_polynomial(field(wit, "v", p + ".witness"), p + ".witness.v");
      check_polynomial(field(wit, "d", p + ".witness"), p + ".witness.d");
      check_status_map(field(steps[i], "checks", p), p + ".checks");
      check_nullable(field(steps[i], "y_primed", p), p + ".y_primed", expect_string);
    }
  } else if (k == "gvd_tree") {
    const Json& mode = field(payload, "mode", "payload");
    expect_string(mode, "payload.mode");
    if (mode != "plain" && mode != "weak") bad("payload.mode", "expected 'plain' or 'weak'");
    check_order(field(payload, "base_order", "payload"), "payload.base_order");
    check_gvd_node(field(payload, "tree", "payload"), "payload.tree");
  } else {
    bad("kind", "unknown certificate kind '" + k + "'");
  }
}

CertificateRing ring_from_certificate(const Json& doc) {
  validate_certificate(doc);
  return Reader(doc).ring();
}

GlicciChain bdl_chain_from_certificate(const Json& doc) {
  validate_certificate(doc);
  if (doc.at("kind") != "bdl_chain") throw SchemaError("certificate is not a bdl_chain");
  Reader r(doc);
  const Json& p = doc.at("payload");
  GlicciChain chain{r.ideal(p.at("start")), {}, r.ideal(p.at("terminal"))};
  for (const auto& s : p.at("steps")) {
    BDLStep step{r.ideal(s.at("C")), r.var(s.at("z")), r.ideal(s.at("A")), r.ideal(s.at("B"))};
    step.z_absent = s.at("z_absent").get<bool>();
    for (const auto& pair : s.at("relabel")) step.relabel[r.var(pair[0])] = r.var(pair[1]);
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

SheddingCertificate shedding_from_certificate(const Json& doc) {
  validate_certificate(doc);
  Reader r(doc);
  if (doc.at("kind") == "shedding") return r.shedding(doc.at("payload").at("root"));
  if (doc.at("kind") == "bdl_chain" && doc.at("payload").contains("shedding"))
    return r.shedding(doc.at("payload").at("shedding"));
  throw SchemaError("certificate carries no shedding tree");
}

BiliaisonChain biliaison_chain_from_certificate(const Json& doc) {
  validate_certificate(doc);
  if (doc.at("kind") != "biliaison_chain") throw SchemaError("certificate is not a biliaison_chain");
  Reader r(doc);
  BiliaisonChain chain;
  for (const auto& s : doc.at("payload").at("steps")) {
    BiliaisonStep step{.order = r.order(s.at("order")),
                       .I = r.polynomials(s.at("I")),
                       .y = r.var(s.at("y")),
                       .D = r.polynomials(s.at("D")),
                       .N = r.polynomials(s.at("N")),
                       .shift = s.at("shift").get<int>(),
                       .witness_v = r.polynomial(s.at("witness").at("v")),
                       .witness_d = r.polynomial(s.at("witness").at("d"))};
    for (const auto& [k, v] : s.at("checks").items()) step.checks[k] = check_status_from_string(v.get<std::string>());
    if (!s.at("y_primed").is_null()) step.y_primed = r.var(s.at("y_primed"));
    step.polarized_basis = r.polynomials(s.at("polarized"));
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

CertificateAudit verify_certificate(const Json& doc, const Field& field_choice) {
  validate_certificate(doc);
  CertificateAudit audit;
  audit.kind = doc.at("kind").get<std::string>();
  Reader r(doc);
  const VariableNames& names = r.ring().names;
  if (audit.kind == "bdl_chain") {
    GlicciChain chain = bdl_chain_from_certificate(doc);
    ChainReport rep = verify_chain(chain, field_choice);
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
      BDLStep redone = verify_bdl(bdl_decompose(chain.steps[i].C, chain.steps[i].z), field_choice);
      std::string line = "step " + std::to_string(i + 1) + ": z = " + names.display(chain.steps[i].z) + ": ";
      line += redone.verified() ? "verified" : "failed";
      for (const auto& f : redone.failed_checks()) line += " [" + f + "]";
      audit.lines.push_back(line);
    }
    audit.ok = rep.ok;
    if (!rep.ok) audit.lines.push_back("chain: " + rep.failure);
    if (doc.at("payload").contains("shedding") && !doc.at("payload").at("shedding").is_null()) {
      ReplayReport rr = replay_shedding(shedding_from_certificate(doc), field_choice);
      audit.lines.push_back("shedding tree: " + (rr.ok ? std::string("replayed ") + std::to_string(rr.nodes) + " nodes"
                                                      : "failed: " + rr.failure));
      audit.ok = audit.ok && rr.ok;
    }
    audit.status = audit.ok ? CheckStatus::Verified : CheckStatus::Failed;
  } else if (audit.kind == "shedding") {
    ReplayReport rr = replay_shedding(shedding_from_certificate(doc), field_choice);
    audit.ok = rr.ok;
    audit.status = rr.ok ? CheckStatus::Verified : CheckStatus::Failed;
    audit.lines.push_back(rr.ok ? "replayed " + std::to_string(rr.nodes) + " nodes" : "failed: " + rr.failure);
  } else if (audit.kind == "biliaison_chain") {
    BiliaisonChain chain = biliaison_chain_from_certificate(doc);
    ChainVerdict v = verify_biliaison_chain(chain, field_choice);
    for (std::size_t i = 0; i < v.step_status.size(); ++i)
      audit.lines.push_back("step " + std::to_string(i + 1) + ": y = " + names.display(chain.steps[i].y) + ": " +
                            to_string(v.step_status[i]));
    for (const auto& p : v.problems) audit.lines.push_back(p);
    audit.lines.push_back(std::string("terminal ideal is a complete intersection: ") +
                          (v.terminal_complete_intersection ? "yes" : "no"));
    audit.status = v.status;
    audit.ok = is_positive(v.status);
  } else {
    const Json& p = doc.at("payload");
    GvdMode mode = p.at("mode") == "plain" ? GvdMode::Plain : GvdMode::Weak;
    TermOrder base = r.order(p.at("base_order"));
    CheckStatus st = replay_gvd_tree(r.gvd(p.at("tree")), mode, base, field_choice);
    audit.status = st;
    audit.ok = is_positive(st);
    audit.lines.push_back("tree replay: " + to_string(st));
  }
  return audit;
}

}  // namespace liaison::io
