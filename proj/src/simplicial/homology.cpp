#include <algorithm>
#include <bit>
#include <gmpxx.h>
#include <map>
#include <unordered_map>

#include "liaison/errors.hpp"
#include "liaison/simplicial.hpp"

namespace liaison {

namespace {

using Face = SimplicialComplex::Face;

struct ModP {
  std::int64_t p;
  using T = std::int64_t;
  T from_int(int v) const { return ((v % p) + p) % p; }
  bool is_zero(T a) const { return a == 0; }
  T sub_mul(T a, T c, T b) const { return ((a - (c * b) % p) % p + p) % p; }
  T inv(T a) const {
    T r = 1, e = p - 2, b = a;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  T mul(T a, T b) const { return a * b % p; }
};

struct QOps {
  using T = mpq_class;
  T from_int(int v) const { return T(v); }
  bool is_zero(const T& a) const { return a == 0; }
  T sub_mul(const T& a, const T& c, const T& b) const { return a - c * b; }
  T inv(const T& a) const { return 1 / a; }
  T mul(const T& a, const T& b) const { return a * b; }
};

// Rank of a sparse matrix given by columns (row index, entry in {+1,-1}).
template <typename Ops>
std::size_t sparse_rank(const std::vector<std::vector<std::pair<std::size_t, int>>>& columns, const Ops& ops) {
  using T = typename Ops::T;
  using Row = std::vector<std::pair<std::size_t, T>>;
  std::map<std::size_t, Row> pivots;  // leading index -> normalized vector
  std::size_t rank = 0;
  for (const auto& col : columns) {
    Row v;
    for (const auto& [r, e] : col) v.emplace_back(r, ops.from_int(e));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!v.empty()) {
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) break;
      T c = v.front().second;
      const Row& p = it->second;
      Row w;
      w.reserve(v.size() + p.size());
      std::size_t i = 0, j = 0;
      while (i < v.size() || j < p.size()) {
        if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
          w.push_back(v[i++]);
        } else if (i == v.size() || p[j].first < v[i].first) {
          w.emplace_back(p[j].first, ops.sub_mul(ops.from_int(0), c, p[j].second));
          ++j;
        } else {
          T x = ops.sub_mul(v[i].second, c, p[j].second);
          if (!ops.is_zero(x)) w.emplace_back(v[i].first, x);
          ++i;
          ++j;
        }
      }
      v = std::move(w);
    }
    if (v.empty()) continue;
    T inv = ops.inv(v.front().second);
    for (auto& [r, x] : v) x = ops.mul(x, inv);
    pivots.emplace(v.front().first, std::move(v));
    ++rank;
  }
  return rank;
}

struct ChainData {
  std::vector<std::vector<Face>> levels;  // levels[k]: faces with k vertices
  std::vector<std::unordered_map<Face, std::size_t>> index;
};

ChainData chains(const SimplicialComplex& c) {
  ChainData d;
  int top = c.dimension() + 1;
  d.levels.resize(static_cast<std::size_t>(top + 1));
  for (Face f : c.all_faces()) d.levels[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  d.index.resize(d.levels.size());
  for (std::size_t k = 0; k < d.levels.size(); ++k)
    for (std::size_t i = 0; i < d.levels[k].size(); ++i) d.index[k][d.levels[k][i]] = i;
  return d;
}

// Boundary from k-vertex faces to (k-1)-vertex faces, as columns.
std::vector<std::vector<std::pair<std::size_t, int>>> boundary(const ChainData& d, std::size_t k) {
  std::vector<std::vector<std::pair<std::size_t, int>>> cols;
  for (Face f : d.levels[k]) {
    std::vector<std::pair<std::size_t, int>> col;
    int sign = 1;
    for (Face rest = f; rest != 0; rest &= rest - 1) {
      Face bit = rest & (~rest + 1);
      col.emplace_back(d.index[k - 1].at(f & ~bit), sign);
      sign = -sign;
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

constexpr std::int64_t kLargePrime = 2147483647;

std::size_t rank_over(const std::vector<std::vector<std::pair<std::size_t, int>>>& cols, const Field& field,
                      bool exact_rational) {
  if (field.kind == Field::Kind::Prime) return sparse_rank(cols, ModP{field.p});
  if (exact_rational) return sparse_rank(cols, QOps{});
  return sparse_rank(cols, ModP{kLargePrime});
}

// H̃_i for i = -1 .. limit. Over Q a large-prime rank is used first; it can only
// overestimate homology, so nonzero values are recomputed exactly.
std::vector<long long> homology(const SimplicialComplex& c, const Field& field, int limit) {
  if (c.is_void()) throw PreconditionError("homology of the void complex");
  ChainData d = chains(c);
  std::size_t levels = d.levels.size();
  std::vector<std::size_t> rank(levels + 1, 0);
  std::vector<bool> exact(levels + 1, field.kind == Field::Kind::Prime);
  auto compute = [&](std::size_t k, bool exact_q) {
    if (k == 0 || k >= levels) return;
    rank[k] = rank_over(boundary(d, k), field, exact_q);
    exact[k] = exact[k] || exact_q;
  };
  std::size_t top = static_cast<std::size_t>(std::min(limit + 2, static_cast<int>(levels) - 1));
  for (std::size_t k = 1; k <= top; ++k) compute(k, false);
  std::vector<long long> out;
  for (int i = -1; i <= limit; ++i) {
    std::size_t k = static_cast<std::size_t>(i + 1);
    auto value = [&] {
      long long faces = k < levels ? static_cast<long long>(d.levels[k].size()) : 0;
      return faces - static_cast<long long>(rank[k]) - static_cast<long long>(k + 1 < rank.size() ? rank[k + 1] : 0);
    };
    long long h = value();
    if (h != 0 && field.kind == Field::Kind::Rational) {
      if (!exact[k]) compute(k, true);
      if (k + 1 < levels && !exact[k + 1]) compute(k + 1, true);
      h = value();
    }
    out.push_back(h);
  }
  return out;
}

}  // namespace

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& complex, const Field& field) {
  return homology(complex, field, complex.dimension());
}

bool is_cm_reisner(const SimplicialComplex& complex, const Field& field) {
  if (complex.is_void()) throw PreconditionError("Reisner's criterion on the void complex");
  if (!complex.is_pure()) return false;
  std::unordered_map<std::string, bool> seen;
  auto faces = complex.all_faces();
  // Large faces first: their links are small and cheap.
  std::reverse(faces.begin(), faces.end());
  for (Face f : faces) {
    SimplicialComplex lk = link_of_face(complex, f);
    int dim = lk.dimension();
    if (dim <= 0) continue;
    std::string key = lk.canonical_key();
    auto it = seen.find(key);
    if (it != seen.end()) {
      if (!it->second) return false;
      continue;
    }
    auto h = homology(lk, field, dim - 1);
    bool ok = std::all_of(h.begin(), h.end(), [](long long x) { return x == 0; });
    seen.emplace(key, ok);
    if (!ok) return false;
  }
  return true;
}

}  // namespace liaison
