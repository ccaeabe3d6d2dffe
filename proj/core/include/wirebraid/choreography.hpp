#pragma once

#include <vector>

#include "wirebraid/network.hpp"
#include "wirebraid/subdivision.hpp"
#include "wirebraid/words.hpp"

namespace wb {

// One token hop between adjacent fine vertices.
struct FineMove {
  VId from = -1, to = -1;
  bool operator==(const FineMove&) const = default;
};

std::vector<FineMove> reverse_moves(const std::vector<FineMove>& m);

// Expands generators into token hops on the subdivided network. Tokens start on the
// staging chain: anyon i sits at staging[n-i+1], the root staging[0] stays empty.
class Choreographer {
 public:
  Choreographer(const Network& net, int n);

  const Network& coarse() const { return net_; }
  const Subdivision& sub() const { return sub_; }
  const SpanningTree& tree() const { return tree_; }
  int particles() const { return n_; }
  // Fine staging chain: root first.
  const std::vector<VId>& staging() const { return stg_; }
  // Fine vertex of anyon i (1-based) in the base configuration.
  VId home(int anyon) const { return stg_[static_cast<size_t>(n_ - anyon + 1)]; }
  std::vector<VId> base() const;

  std::vector<FineMove> simple_braid(const SimpleBraid& g) const;
  std::vector<FineMove> total_braid(const std::string& lollipop_id) const;
  std::vector<FineMove> one_particle(const std::string& loop_id) const;
  std::vector<FineMove> letter(const Letter& l) const;
  std::vector<FineMove> word(const Word& w) const;

  // Fine helpers shared with the string simulator.
  std::vector<VId> tree_path(VId v) const;                 // root .. v
  std::vector<VId> branch_slots(VId v, int label) const;   // leaving v via label
  std::vector<VId> return_path(VId v, int branch) const;   // v .. root, via branch

 private:
  Network net_;
  int n_;
  Subdivision sub_;
  SpanningTree tree_;
  BranchLabelling labels_;
  std::vector<VId> stg_;
};

// Replays moves from a configuration; throws IllegalMove on collisions or non-adjacent hops.
// labels[k] is the anyon at config[k]; on return config/labels hold the final state.
void replay(const Network& fine, std::vector<VId>& config, std::vector<int>& labels,
            const std::vector<FineMove>& moves);

}  // namespace wb
