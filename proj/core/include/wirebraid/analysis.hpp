#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wirebraid/network.hpp"
#include "wirebraid/words.hpp"

namespace wb {

enum class Regime { Free, Junction, TwoConnected, ThreeConnected, Unsupported };
const char* to_string(Regime r);

// The lollipop used for delta, plus the branch where anyons park for its gamma.
struct CanonicalLollipop {
  LollipopSubgraph lollipop;
  int park = 0;
  // Under gamma = 1: delta = s_1^eps ... s_{n-1}^eps with s = sigma_1^{v0;(max,min)}.
  int eps = 1;
  int hi() const { return std::max(lollipop.branch, park); }
  int lo() const { return std::min(lollipop.branch, park); }
};

struct Analysis {
  Network net;
  SpanningTree tree;
  BranchLabelling labels;
  FaceStructure faces;
  std::vector<VId> essential;
  int connectedness = 1;
  std::optional<VId> v0;
  std::optional<CanonicalLollipop> canon;
  // class_rep[v] for essential v: representative of its transitive theta class.
  std::vector<VId> class_rep;
  Regime regime = Regime::Unsupported;
  std::string regime_note;

  const std::string& id(VId v) const { return net.vertex_ids[v]; }
  std::vector<VId> junction_classes() const;  // representatives
  std::string delta_id() const;               // canonical lollipop id, "" if none
  Letter delta(int exp = 1) const;
  // Canonical class symbol for sigma_1^{u;(a,b)} with a > b.
  SimpleBraid canonical_symbol(VId u, int a, int b) const;
  std::optional<ThetaRef> theta_for(VId u, VId w) const;
};

Analysis analyze(const Network& net);
// connectedness, essential vertices, junction classes, regime, canonical lollipop.
std::string analysis_to_json(const Analysis& a);

std::optional<CanonicalLollipop> canonical_lollipop(const Network& net, const SpanningTree& tree,
                                                    const FaceStructure& faces);

}  // namespace wb
