#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wirebraid/choreography.hpp"
#include "wirebraid/complex.hpp"
#include "wirebraid/lattice.hpp"
#include "wirebraid/tietze.hpp"
#include "wirebraid/words.hpp"

namespace wb {

struct Pi1Presentation {
  uint64_t basepoint = 0;  // 0-cell
  GroupPresentation group;  // generators = non-tree 1-cells, relators = square boundaries
  std::vector<uint64_t> generator_cells;
};

struct OracleReport {
  std::vector<uint64_t> cells;  // by dimension
  int64_t euler = 0;
  int64_t h1_rank = 0;
  int components = 1;
  std::optional<bool> free;  // empty when Tietze could not decide
  int generators = 0;        // after simplification
  size_t relators = 0;
  bool budget_exhausted = false;
};

std::string oracle_report_to_json(const OracleReport& r);

struct LoopClass {
  SparseRow chain;
  std::vector<int> permutation;  // anyon found at the home of anyon i+1
  bool closed = true;
  bool null_homologous = false;
  bool null_mod_one_particle = false;
};

// Brute-force configuration space for one (network, n) pair.
class Oracle {
 public:
  Oracle(const Network& net, int n, uint64_t cap = default_cell_cap());
  ~Oracle();

  const Choreographer& choreo() const { return *choreo_; }
  const Subdivision& sub() const { return choreo_->sub(); }
  const CubeComplex& complex() const { return *cx_; }
  int particles() const { return n_; }

  int64_t h1_rank();
  Pi1Presentation pi1() const;
  OracleReport report(size_t tietze_budget = 50'000'000);

  // Chain of 1-cells traced by the moves from the base configuration.
  SparseRow chain(const std::vector<FineMove>& moves) const;
  LoopClass classify(const std::vector<FineMove>& moves);
  LoopClass word_to_loop(const Word& w);
  bool is_boundary(const SparseRow& c);
  // Modulo single tokens running once around a bounded face, other tokens off the face.
  bool is_boundary_mod_one_particle(const SparseRow& c);

 private:
  Lattice& boundaries();
  Lattice& quotient();

  int n_;
  Network net_;
  std::unique_ptr<Choreographer> choreo_;
  std::unique_ptr<CubeComplex> cx_;
  std::unique_ptr<Lattice> bd_, quot_;
  std::optional<int64_t> h1_;
};

}  // namespace wb
