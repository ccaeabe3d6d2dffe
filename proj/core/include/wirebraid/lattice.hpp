#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace wb {

// Sparse integer vector, entries sorted by column, no zeros.
using SparseRow = std::vector<std::pair<uint64_t, int64_t>>;

SparseRow make_row(std::vector<std::pair<uint64_t, int64_t>> entries);
SparseRow row_sum(const SparseRow& a, const SparseRow& b, int64_t fb = 1);

// Integer row lattice kept in echelon form. Arithmetic runs in int64 and switches to
// arbitrary precision for good once any entry would overflow.
class Lattice {
 public:
  Lattice();
  ~Lattice();
  Lattice(Lattice&&) noexcept;
  Lattice& operator=(Lattice&&) noexcept;

  // Returns true when the rank grew.
  bool add(const SparseRow& row);
  bool contains(const SparseRow& row) const;
  size_t rank() const;
  bool wide() const;  // true once promoted to big integers

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace wb
