#include "liaison/term_order.hpp"

#include <algorithm>
#include <optional>

#include "liaison/errors.hpp"
#include "liaison/polynomial.hpp"

namespace liaison {

struct TermOrder::Node {
  Kind kind = Kind::Lex;
  std::vector<Variable> universe;
  std::vector<std::pair<Variable, std::size_t>> ranks;  // sorted by Variable
  std::vector<Variable> front;
  std::shared_ptr<const Node> front_lex;
  std::optional<TermOrder> sub;  // tail (product) or base (induced)
  Variable y{}, y_primed{};

  std::optional<std::size_t> rank_of(Variable v) const {
    auto it = std::lower_bound(ranks.begin(), ranks.end(), v,
                               [](const auto& a, Variable b) { return a.first < b; });
    if (it == ranks.end() || it->first != v) return std::nullopt;
    return it->second;
  }

  void index() {
    ranks.clear();
    for (std::size_t i = 0; i < universe.size(); ++i) ranks.emplace_back(universe[i], i);
    std::sort(ranks.begin(), ranks.end());
    for (std::size_t i = 1; i < ranks.size(); ++i)
      if (ranks[i].first == ranks[i - 1].first) throw PreconditionError("repeated variable in term order");
  }
};

namespace {

using NodePtr = std::shared_ptr<const TermOrder::Node>;

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

template <typename F>
void for_each_difference(const Monomial& a, const Monomial& b, F&& f) {
  auto ea = a.entries();
  auto eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      f(ea[i].first, ea[i].second, 0U);
      ++i;
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      f(eb[j].first, 0U, eb[j].second);
      ++j;
    } else {
      if (ea[i].second != eb[j].second) f(ea[i].first, ea[i].second, eb[j].second);
      ++i;
      ++j;
    }
  }
}

}  // namespace

static int compare_node(const TermOrder::Node& n, const Monomial& a, const Monomial& b);

static int compare_order(const TermOrder& o, const Monomial& a, const Monomial& b) {
  return sign(o.compare_unchecked(a, b));
}

static int compare_node(const TermOrder::Node& n, const Monomial& a, const Monomial& b) {
  switch (n.kind) {
    case TermOrder::Kind::Lex: {
      std::size_t best = SIZE_MAX;
      int s = 0;
      for_each_difference(a, b, [&](Variable v, std::uint32_t x, std::uint32_t y) {
        auto r = n.rank_of(v);
        if (r && *r < best) {
          best = *r;
          s = x > y ? 1 : -1;
        }
      });
      return s;
    }
    case TermOrder::Kind::GrevLex: {
      std::int64_t da = 0, db = 0;
      std::size_t worst = 0;
      bool any = false;
      int s = 0;
      for_each_difference(a, b, [&](Variable v, std::uint32_t x, std::uint32_t y) {
        auto r = n.rank_of(v);
        if (!r) return;
        da += x;
        db += y;
        if (!any || *r > worst) {
          any = true;
          worst = *r;
          s = x < y ? 1 : -1;
        }
      });
      if (da != db) return da > db ? 1 : -1;
      return s;
    }
    case TermOrder::Kind::Product: {
      int c = compare_node(*n.front_lex, a, b);
      if (c != 0) return c;
      return compare_order(*n.sub, a, b);
    }
    case TermOrder::Kind::Induced: {
      int c = compare_order(*n.sub, depol(a, n.y, n.y_primed), depol(b, n.y, n.y_primed));
      if (c != 0) return c;
      std::uint32_t ya = a.exponent(n.y), yb = b.exponent(n.y);
      return ya == yb ? 0 : (ya > yb ? 1 : -1);
    }
  }
  return 0;
}

TermOrder TermOrder::lex(std::vector<Variable> vars) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lex;
  n->universe = std::move(vars);
  n->index();
  return TermOrder(n);
}

TermOrder TermOrder::grevlex(std::vector<Variable> vars) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::GrevLex;
  n->universe = std::move(vars);
  n->index();
  return TermOrder(n);
}

TermOrder TermOrder::product(std::vector<Variable> front, TermOrder tail) {
  for (Variable v : front)
    if (tail.contains(v)) throw PreconditionError("product order: front variable repeated in tail");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->front = front;
  n->front_lex = lex(front).node_;
  n->universe = front;
  n->universe.insert(n->universe.end(), tail.variables().begin(), tail.variables().end());
  n->sub = std::move(tail);
  n->index();
  return TermOrder(n);
}

TermOrder TermOrder::induced(TermOrder base, Variable y, Variable y_primed) {
  if (!base.contains(y)) throw PreconditionError("induced order: y outside the base universe");
  if (base.contains(y_primed)) throw PreconditionError("induced order: y' must be a fresh variable");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Induced;
  n->y = y;
  n->y_primed = y_primed;
  n->universe = base.variables();
  auto pos = std::find(n->universe.begin(), n->universe.end(), y);
  while (pos + 1 != n->universe.end() && (pos + 1)->base == y.base) ++pos;
  n->universe.insert(pos + 1, y_primed);
  n->sub = std::move(base);
  n->index();
  return TermOrder(n);
}

TermOrder::Kind TermOrder::kind() const { return node_->kind; }
const std::vector<Variable>& TermOrder::variables() const { return node_->universe; }
bool TermOrder::contains(Variable v) const { return node_->rank_of(v).has_value(); }

std::size_t TermOrder::rank(Variable v) const {
  auto r = node_->rank_of(v);
  if (!r) throw PreconditionError("variable outside the term order universe");
  return *r;
}

void TermOrder::check_universe(const Monomial& m) const {
  for (const auto& [v, e] : m.entries())
    if (!node_->rank_of(v))
      throw PreconditionError("variable x_{" + std::to_string(v.base) + "," + std::to_string(v.layer) +
                              "} outside the term order universe");
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  check_universe(a);
  check_universe(b);
  return compare_unchecked(a, b);
}

std::strong_ordering TermOrder::compare_unchecked(const Monomial& a, const Monomial& b) const {
  int c = compare_node(*node_, a, b);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

const std::vector<Variable>& TermOrder::front() const {
  if (node_->kind != Kind::Product) throw PreconditionError("not a product order");
  return node_->front;
}
const TermOrder& TermOrder::tail() const {
  if (node_->kind != Kind::Product) throw PreconditionError("not a product order");
  return *node_->sub;
}
const TermOrder& TermOrder::base() const {
  if (node_->kind != Kind::Induced) throw PreconditionError("not an induced order");
  return *node_->sub;
}
Variable TermOrder::y() const {
  if (node_->kind != Kind::Induced) throw PreconditionError("not an induced order");
  return node_->y;
}
Variable TermOrder::y_primed() const {
  if (node_->kind != Kind::Induced) throw PreconditionError("not an induced order");
  return node_->y_primed;
}

TermOrder TermOrder::with_variable_after(Variable v, Variable after) const {
  if (contains(v)) throw PreconditionError("variable already in the term order");
  switch (kind()) {
    case Kind::Lex:
    case Kind::GrevLex: {
      auto vars = variables();
      auto pos = std::find(vars.begin(), vars.end(), after);
      if (pos == vars.end()) throw PreconditionError("anchor variable outside the term order");
      vars.insert(pos + 1, v);
      return kind() == Kind::Lex ? lex(vars) : grevlex(vars);
    }
    case Kind::Product: {
      auto f = front();
      auto pos = std::find(f.begin(), f.end(), after);
      if (pos != f.end()) {
        f.insert(pos + 1, v);
        return product(f, tail());
      }
      return product(f, tail().with_variable_after(v, after));
    }
    case Kind::Induced:
      return induced(base().with_variable_after(v, after == y_primed() ? y() : after), y(), y_primed());
  }
  return *this;
}

TermOrder TermOrder::with_variable_appended(Variable v) const {
  if (contains(v)) throw PreconditionError("variable already in the term order");
  switch (kind()) {
    case Kind::Lex: {
      auto vars = variables();
      vars.push_back(v);
      return lex(vars);
    }
    case Kind::GrevLex: {
      auto vars = variables();
      vars.push_back(v);
      return grevlex(vars);
    }
    case Kind::Product:
      return product(front(), tail().with_variable_appended(v));
    case Kind::Induced:
      return induced(base().with_variable_appended(v), y(), y_primed());
  }
  return *this;
}

TermOrder TermOrder::restricted_to(const std::vector<Variable>& keep) const {
  auto kept = [&](Variable v) { return std::find(keep.begin(), keep.end(), v) != keep.end(); };
  switch (kind()) {
    case Kind::Lex:
    case Kind::GrevLex: {
      std::vector<Variable> vars;
      for (Variable v : variables())
        if (kept(v)) vars.push_back(v);
      return kind() == Kind::Lex ? lex(vars) : grevlex(vars);
    }
    case Kind::Product: {
      std::vector<Variable> f;
      for (Variable v : front())
        if (kept(v)) f.push_back(v);
      TermOrder t = tail().restricted_to(keep);
      if (f.empty()) return t;
      return product(f, t);
    }
    case Kind::Induced: {
      TermOrder b = base().restricted_to(keep);
      if (!kept(y_primed()) || !b.contains(y())) return b;
      return induced(b, y(), y_primed());
    }
  }
  return *this;
}

std::string TermOrder::describe() const {
  auto list = [](const std::vector<Variable>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) s += ">";
      s += "x_{" + std::to_string(vs[i].base) + "," + std::to_string(vs[i].layer) + "}";
    }
    return s;
  };
  switch (kind()) {
    case Kind::Lex:
      return "lex(" + list(variables()) + ")";
    case Kind::GrevLex:
      return "grevlex(" + list(variables()) + ")";
    case Kind::Product:
      return "product(" + list(front()) + "; " + tail().describe() + ")";
    case Kind::Induced:
      return "induced(" + base().describe() + ")";
  }
  return {};
}

}  // namespace liaison
