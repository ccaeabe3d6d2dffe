#pragma once

#include <cstddef>
#include <vector>

namespace wb {

// Letters are +-(g+1) for generator g.
using GroupWord = std::vector<int>;

struct GroupPresentation {
  int generators = 0;
  std::vector<GroupWord> relators;
};

struct TietzeResult {
  GroupPresentation presentation;
  bool exhausted = false;  // budget ran out; presentation is the best so far
  size_t eliminated = 0;
  bool free() const { return !exhausted && presentation.relators.empty(); }
};

GroupWord reduce_cyclically(const GroupWord& w);

// Removes trivial and duplicate relators and eliminates generators that occur exactly
// once in some relator (shortest relator first). `budget` bounds the letters written.
TietzeResult tietze_simplify(GroupPresentation p, size_t budget = 50'000'000);

}  // namespace wb
