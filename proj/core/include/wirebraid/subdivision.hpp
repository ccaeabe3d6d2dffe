#pragma once

#include <vector>

#include "wirebraid/network.hpp"

namespace wb {

// Fine network for n particles. Fine vertex ids are the coarse ids plus "<edge>#<k>"
// (k counted from the edge's first end); fine edge ids are "<edge>/<k>".
struct Subdivision {
  Network fine;
  int n = 0;
  std::vector<VId> vertex;                 // coarse vertex -> fine vertex
  std::vector<std::vector<VId>> points;    // coarse edge -> fine vertices from ends[0] to ends[1]
  std::vector<std::vector<EId>> segments;  // coarse edge -> fine edges in the same order

  // Fine vertices met when leaving coarse vertex v through `end`, following degree-2
  // non-root vertices, up to and including the next chain break.
  std::vector<VId> slots(const Network& coarse, EdgeEnd end) const;
  // Fine vertices of an edge traversed away from `end` (excluding the start).
  std::vector<VId> along(EdgeEnd end) const;
  // Fine walk for a coarse step list, starting vertex included.
  std::vector<VId> walk(const std::vector<Step>& steps) const;
  // The fine edge joining two adjacent fine vertices (the fine graph is simple).
  EId edge_between(VId a, VId b) const;
};

// Every maximal chain between vertices of degree != 2 (the root also breaks chains)
// gets at least n+1 edges (loops at least max(n+1, 3)); extra segments go to the
// chain's first edges.
Subdivision subdivide(const Network& net, int n);

}  // namespace wb
