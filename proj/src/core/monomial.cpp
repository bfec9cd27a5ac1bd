#include "liaison/monomial.hpp"

#include <algorithm>

#include "liaison/errors.hpp"

namespace liaison {

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (const auto& [v, e] : entries) {
    if (e == 0) continue;
    if (!e_.empty() && e_.back().first == v)
      e_.back().second += e;
    else
      e_.emplace_back(v, e);
  }
}

Monomial Monomial::of(Variable v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.e_.emplace_back(v, exponent);
  return m;
}

std::uint32_t Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), v,
                             [](const Entry& a, Variable b) { return a.first < b; });
  return (it != e_.end() && it->first == v) ? it->second : 0;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : e_) d += e;
  return d;
}

bool Monomial::is_squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](const Entry& x) { return x.second == 1; });
}

std::vector<Variable> Monomial::support() const {
  std::vector<Variable> out;
  out.reserve(e_.size());
  for (const auto& [v, e] : e_) out.push_back(v);
  return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.reserve(e_.size() + o.e_.size());
  auto i = e_.begin();
  auto j = o.e_.begin();
  while (i != e_.end() && j != o.e_.end()) {
    if (i->first < j->first) {
      r.e_.push_back(*i++);
    } else if (j->first < i->first) {
      r.e_.push_back(*j++);
    } else {
      r.e_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  r.e_.insert(r.e_.end(), i, e_.end());
  r.e_.insert(r.e_.end(), j, o.e_.end());
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  auto j = o.e_.begin();
  for (const auto& [v, e] : e_) {
    while (j != o.e_.end() && j->first < v) throw PreconditionError("monomial division is not exact");
    if (j != o.e_.end() && j->first == v) {
      if (j->second > e) throw PreconditionError("monomial division is not exact");
      if (j->second < e) r.e_.emplace_back(v, e - j->second);
      ++j;
    } else {
      r.e_.emplace_back(v, e);
    }
  }
  if (j != o.e_.end()) throw PreconditionError("monomial division is not exact");
  return r;
}

Monomial Monomial::pow(std::uint32_t k) const {
  if (k == 0) return {};
  Monomial r = *this;
  for (auto& [v, e] : r.e_) e *= k;
  return r;
}

Monomial Monomial::restricted(const std::function<bool(Variable)>& keep) const {
  Monomial r;
  for (const auto& x : e_)
    if (keep(x.first)) r.e_.push_back(x);
  return r;
}

Monomial Monomial::mapped(const std::function<Variable(Variable)>& f) const {
  std::vector<Entry> out;
  out.reserve(e_.size());
  for (const auto& [v, e] : e_) out.emplace_back(f(v), e);
  return Monomial(std::move(out));
}

Monomial Monomial::with_exponent(Variable v, std::uint32_t e) const {
  std::vector<Entry> out;
  for (const auto& x : e_)
    if (x.first != v) out.push_back(x);
  out.emplace_back(v, e);
  return Monomial(std::move(out));
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  std::size_t n = std::min(e_.size(), o.e_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (e_[k].first != o.e_[k].first) return o.e_[k].first <=> e_[k].first;
    if (e_[k].second != o.e_[k].second) return e_[k].second <=> o.e_[k].second;
  }
  return e_.size() <=> o.e_.size();
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [v, e] : e_) {
    h ^= v.key() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool divides(const Monomial& a, const Monomial& b) {
  auto ea = a.entries();
  auto eb = b.entries();
  if (ea.size() > eb.size()) return false;
  std::size_t j = 0;
  for (const auto& [v, e] : ea) {
    while (j < eb.size() && eb[j].first < v) ++j;
    if (j == eb.size() || eb[j].first != v || eb[j].second < e) return false;
    ++j;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Entry> out;
  auto ea = a.entries();
  auto eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      out.push_back(ea[i++]);
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      out.push_back(eb[j++]);
    } else {
      out.emplace_back(ea[i].first, std::max(ea[i].second, eb[j].second));
      ++i;
      ++j;
    }
  }
  return Monomial(std::move(out));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Entry> out;
  for (const auto& [v, e] : a.entries()) {
    std::uint32_t f = b.exponent(v);
    if (f > 0) out.emplace_back(v, std::min(e, f));
  }
  return Monomial(std::move(out));
}

bool coprime(const Monomial& a, const Monomial& b) {
  auto ea = a.entries();
  auto eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i].first < eb[j].first)
      ++i;
    else if (eb[j].first < ea[i].first)
      ++j;
    else
      return false;
  }
  return true;
}

}  // namespace liaison
