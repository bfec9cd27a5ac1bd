#include "liaison/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "liaison/errors.hpp"
#include "liaison/term_order.hpp"

namespace liaison {

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
  };
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!valid_int(num) || !valid_int(den)) throw PreconditionError("malformed rational '" + std::string(text) + "'");
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!den.empty() && den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.push_back({Rational(value), Monomial()});
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) {
    terms_.push_back({c, Monomial()});
    terms_.back().coef.canonicalize();
  }
}

Polynomial::Polynomial(Monomial m, Rational c) {
  c.canonicalize();
  if (c != 0) terms_.push_back({std::move(c), std::move(m)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    t.coef.canonicalize();
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coef += t.coef;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0; });
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint32_t d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::vector<Variable> Polynomial::variables() const {
  std::vector<Variable> out;
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.mono.entries()) out.push_back(v);
  return sorted_unique(std::move(out));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return 0;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({subtract ? Rational(-b[j].coef) : b[j].coef, b[j].mono});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (c != 0) out.push_back({c, a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.terms_ = merge(terms_, o.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r;
  r.terms_ = merge(terms_, o.terms_, true);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) out.push_back({a.coef * b.coef, a.mono * b.mono});
  return from_terms(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::operator*(const Monomial& m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  r.normalize();
  return r;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial result(1L);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::mapped(const std::function<Variable(Variable)>& f) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.coef, t.mono.mapped(f)});
  return from_terms(std::move(out));
}

Polynomial Polynomial::monic(const TermOrder& order) const {
  if (is_zero()) return {};
  Rational c = leading_term(order).coef;
  return *this * Rational(1 / c);
}

std::vector<Term> Polynomial::sorted(const TermOrder& order) const {
  for (const auto& t : terms_) order.check_universe(t.mono);
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return order.compare_unchecked(a.mono, b.mono) > 0;
  });
  return out;
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  order.check_universe(best->mono);
  for (const auto& t : terms_) {
    order.check_universe(t.mono);
    if (order.compare_unchecked(t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

int deg_y(const Polynomial& f, Variable y) {
  if (f.is_zero()) return kNegInfinity;
  std::uint32_t d = 0;
  for (const auto& t : f.terms()) d = std::max(d, t.mono.exponent(y));
  return static_cast<int>(d);
}

Polynomial in_y(const Polynomial& f, Variable y) {
  int d = deg_y(f, y);
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (static_cast<int>(t.mono.exponent(y)) == d) out.push_back(t);
  return Polynomial::from_terms(std::move(out));
}

Monomial depol(const Monomial& m, Variable y, Variable y_primed) {
  std::uint32_t e = m.exponent(y_primed);
  if (e == 0) return m;
  return m.with_exponent(y_primed, 0).with_exponent(y, m.exponent(y) + e);
}

Polynomial depol(const Polynomial& f, Variable y, Variable y_primed) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) out.push_back({t.coef, depol(t.mono, y, y_primed)});
  return Polynomial::from_terms(std::move(out));
}

}  // namespace liaison
