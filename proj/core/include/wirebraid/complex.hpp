#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "wirebraid/lattice.hpp"
#include "wirebraid/network.hpp"

namespace wb {

// WIREBRAID_CELL_CAP if set and valid, else 2'000'000.
uint64_t default_cell_cap();

// C(n, k), saturating at UINT64_MAX.
uint64_t binomial(uint64_t n, uint64_t k);

// Calls f for every k-subset of pool (in lexicographic order of positions).
void for_each_subset(const std::vector<VId>& pool, int k, const std::function<void(const std::vector<VId>&)>& f);

// Unordered discrete configuration space of n tokens on a (subdivided, simple) graph.
// 0-cells are n-subsets ranked in colex order; the 1-cell (e, R) moves one token along
// e while the tokens in R (n-1 of them, disjoint from e) stay put.
class CubeComplex {
 public:
  using Boundary = std::array<std::pair<uint64_t, int>, 4>;

  CubeComplex(const Network& graph, int n, uint64_t cap = default_cell_cap());

  int particles() const { return n_; }
  const Network& graph() const { return g_; }
  // counts()[k] = number of k-cubes, k = 0..n.
  const std::vector<uint64_t>& counts() const { return counts_; }
  uint64_t total_cells() const;
  int64_t euler() const;

  uint64_t vertex_cell(std::vector<VId> config) const;
  std::vector<VId> vertex_config(uint64_t cell) const;
  uint64_t edge_cell(EId e, std::vector<VId> rest) const;
  // (edge, rest) for a 1-cell.
  std::pair<EId, std::vector<VId>> edge_parts(uint64_t cell) const;
  // 0-cells at ends[0] and ends[1] of the moving edge.
  std::pair<uint64_t, uint64_t> edge_endpoints(uint64_t cell) const;

  void for_each_square(const std::function<void(const Boundary&)>& f) const;
  static SparseRow boundary_row(const Boundary& b);

  // Connected components of the 1-skeleton.
  int components() const;
  // rank of the square boundary map over the integers.
  size_t boundary_rank() const;
  // Free rank of H_1 = c1 - (c0 - components) - rank(d2).
  int64_t h1_rank() const;

 private:
  uint64_t rank_subset(const std::vector<VId>& sorted) const;
  std::vector<VId> unrank_subset(uint64_t r, int k) const;

  Network g_;
  int n_;
  int V_;
  std::vector<uint64_t> counts_;
};

}  // namespace wb
