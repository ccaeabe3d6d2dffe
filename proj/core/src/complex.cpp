#include "wirebraid/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

namespace wb {

uint64_t default_cell_cap() {
  constexpr uint64_t fallback = 2'000'000;
  const char* env = std::getenv("WIREBRAID_CELL_CAP");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) return fallback;
  return v;
}

__extension__ using u128 = unsigned __int128;

uint64_t binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<uint64_t>(r);
}

void for_each_subset(const std::vector<VId>& pool, int k, const std::function<void(const std::vector<VId>&)>& f) {
  int m = static_cast<int>(pool.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<VId> cur(static_cast<size_t>(k));
  while (true) {
    for (int j = 0; j < k; ++j) cur[j] = pool[idx[j]];
    f(cur);
    int j = k - 1;
    while (j >= 0 && idx[j] == m - k + j) --j;
    if (j < 0) return;
    ++idx[j];
    for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

namespace {

void count_matchings(const Network& g, int n, EId from, int k, std::vector<bool>& used, std::vector<uint64_t>& counts) {
  int V = g.num_vertices();
  uint64_t c = binomial(static_cast<uint64_t>(V - 2 * k), static_cast<uint64_t>(n - k));
  counts[k] = counts[k] > UINT64_MAX - c ? UINT64_MAX : counts[k] + c;
  if (k == n) return;
  for (EId e = from; e < g.num_edges(); ++e) {
    auto [a, b] = g.edges[e].ends;
    if (used[a] || used[b]) continue;
    if (V - 2 * (k + 1) < n - (k + 1)) continue;
    used[a] = used[b] = true;
    count_matchings(g, n, e + 1, k + 1, used, counts);
    used[a] = used[b] = false;
  }
}

}  // namespace

CubeComplex::CubeComplex(const Network& graph, int n, uint64_t cap) : g_(graph), n_(n), V_(graph.num_vertices()) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "need at least one particle");
  if (n > V_)
    throw Error(ErrorKind::OutOfRange,
                std::to_string(n) + " particles do not fit on " + std::to_string(V_) + " vertices");
  std::set<std::pair<VId, VId>> seen;
  for (const Edge& e : g_.edges) {
    if (e.loop()) throw Error(ErrorKind::Parse, "configuration complex needs a simple graph (loop '" + e.id + "')");
    auto key = std::minmax(e.ends[0], e.ends[1]);
    if (!seen.insert(key).second)
      throw Error(ErrorKind::Parse, "configuration complex needs a simple graph (parallel edge '" + e.id + "')");
  }
  counts_.assign(static_cast<size_t>(n) + 1, 0);
  std::vector<bool> used(static_cast<size_t>(V_), false);
  count_matchings(g_, n, 0, 0, used, counts_);
  if (total_cells() > cap)
    throw Error(ErrorKind::SizeCap, "complex has " + std::to_string(total_cells()) + " cells, cap is " +
                                        std::to_string(cap));
}

uint64_t CubeComplex::total_cells() const {
  uint64_t t = 0;
  for (uint64_t c : counts_) t = t > UINT64_MAX - c ? UINT64_MAX : t + c;
  return t;
}

int64_t CubeComplex::euler() const {
  int64_t chi = 0;
  for (size_t k = 0; k < counts_.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<int64_t>(counts_[k]);
  return chi;
}

uint64_t CubeComplex::rank_subset(const std::vector<VId>& s) const {
  uint64_t r = 0;
  for (size_t j = 0; j < s.size(); ++j) r += binomial(static_cast<uint64_t>(s[j]), j + 1);
  return r;
}

std::vector<VId> CubeComplex::unrank_subset(uint64_t r, int k) const {
  std::vector<VId> out(static_cast<size_t>(k));
  VId x = V_;
  for (int j = k; j >= 1; --j) {
    do --x;
    while (binomial(static_cast<uint64_t>(x), static_cast<uint64_t>(j)) > r);
    out[j - 1] = x;
    r -= binomial(static_cast<uint64_t>(x), static_cast<uint64_t>(j));
  }
  return out;
}

uint64_t CubeComplex::vertex_cell(std::vector<VId> config) const {
  std::sort(config.begin(), config.end());
  return rank_subset(config);
}

std::vector<VId> CubeComplex::vertex_config(uint64_t cell) const { return unrank_subset(cell, n_); }

uint64_t CubeComplex::edge_cell(EId e, std::vector<VId> rest) const {
  auto [lo, hi] = std::minmax(g_.edges[e].ends[0], g_.edges[e].ends[1]);
  std::sort(rest.begin(), rest.end());
  for (VId& r : rest) {
    if (r == lo || r == hi) throw Error(ErrorKind::IllegalMove, "token on the moving edge");
    r -= (r > lo) + (r > hi);
  }
  return static_cast<uint64_t>(e) * binomial(static_cast<uint64_t>(V_ - 2), static_cast<uint64_t>(n_ - 1)) +
         rank_subset(rest);
}

std::pair<EId, std::vector<VId>> CubeComplex::edge_parts(uint64_t cell) const {
  uint64_t per = binomial(static_cast<uint64_t>(V_ - 2), static_cast<uint64_t>(n_ - 1));
  EId e = static_cast<EId>(cell / per);
  auto [lo, hi] = std::minmax(g_.edges[e].ends[0], g_.edges[e].ends[1]);
  std::vector<VId> rest = unrank_subset(cell % per, n_ - 1);
  for (VId& r : rest) {
    if (r >= lo) ++r;
    if (r >= hi) ++r;
  }
  return {e, rest};
}

std::pair<uint64_t, uint64_t> CubeComplex::edge_endpoints(uint64_t cell) const {
  auto [e, rest] = edge_parts(cell);
  std::vector<VId> a = rest, b = rest;
  a.push_back(g_.edges[e].ends[0]);
  b.push_back(g_.edges[e].ends[1]);
  return {vertex_cell(a), vertex_cell(b)};
}

void CubeComplex::for_each_square(const std::function<void(const Boundary&)>& f) const {
  if (n_ < 2) return;
  std::vector<VId> pool;
  for (EId e1 = 0; e1 < g_.num_edges(); ++e1)
    for (EId e2 = e1 + 1; e2 < g_.num_edges(); ++e2) {
      VId a1 = g_.edges[e1].ends[0], b1 = g_.edges[e1].ends[1];
      VId a2 = g_.edges[e2].ends[0], b2 = g_.edges[e2].ends[1];
      if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
      pool.clear();
      for (VId v = 0; v < V_; ++v)
        if (v != a1 && v != b1 && v != a2 && v != b2) pool.push_back(v);
      for_each_subset(pool, n_ - 2, [&](const std::vector<VId>& R) {
        auto with = [&](VId x) {
          std::vector<VId> s = R;
          s.push_back(x);
          return s;
        };
        f(Boundary{{{edge_cell(e1, with(a2)), 1},
                    {edge_cell(e2, with(b1)), 1},
                    {edge_cell(e1, with(b2)), -1},
                    {edge_cell(e2, with(a1)), -1}}});
      });
    }
}

SparseRow CubeComplex::boundary_row(const Boundary& b) {
  std::vector<std::pair<uint64_t, int64_t>> e;
  for (const auto& [c, s] : b) e.emplace_back(c, s);
  return make_row(std::move(e));
}

int CubeComplex::components() const {
  std::vector<uint64_t> parent(counts_[0]);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<VId> pool;
  for (EId e = 0; e < g_.num_edges(); ++e) {
    VId a = g_.edges[e].ends[0], b = g_.edges[e].ends[1];
    pool.clear();
    for (VId v = 0; v < V_; ++v)
      if (v != a && v != b) pool.push_back(v);
    for_each_subset(pool, n_ - 1, [&](const std::vector<VId>& R) {
      std::vector<VId> x = R, y = R;
      x.push_back(a);
      y.push_back(b);
      parent[find(vertex_cell(x))] = find(vertex_cell(y));
    });
  }
  int comps = 0;
  for (uint64_t i = 0; i < parent.size(); ++i)
    if (find(i) == i) ++comps;
  return comps;
}

size_t CubeComplex::boundary_rank() const {
  Lattice lat;
  for_each_square([&](const Boundary& b) { lat.add(boundary_row(b)); });
  return lat.rank();
}

int64_t CubeComplex::h1_rank() const {
  int64_t c0 = static_cast<int64_t>(counts_[0]);
  int64_t c1 = counts_.size() > 1 ? static_cast<int64_t>(counts_[1]) : 0;
  return c1 - (c0 - components()) - static_cast<int64_t>(boundary_rank());
}

}  // namespace wb
