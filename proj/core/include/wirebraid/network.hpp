#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wirebraid/error.hpp"

namespace wb {

using VId = int;
using EId = int;

// One end of an edge. side 0 sits at edges[edge].ends[0].
struct EdgeEnd {
  EId edge = -1;
  int side = 0;
  bool operator==(const EdgeEnd&) const = default;
  EdgeEnd opposite() const { return {edge, 1 - side}; }
};

struct Edge {
  std::string id;
  std::array<VId, 2> ends{};
  bool loop() const { return ends[0] == ends[1]; }
};

// A walk step: leave `from` through `via` (an end at `from`) and arrive at `to`.
struct Step {
  VId from = -1;
  EdgeEnd via;
  VId to = -1;
};

class Network {
 public:
  // Vertex and edge indices follow lexicographic id order.
  std::vector<std::string> vertex_ids;
  std::vector<Edge> edges;
  std::vector<std::vector<EdgeEnd>> rotation;  // clockwise per vertex
  VId root = -1;
  EId staging = -1;

  int num_vertices() const { return static_cast<int>(vertex_ids.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int degree(VId v) const { return static_cast<int>(rotation[v].size()); }

  VId at(EdgeEnd e) const { return edges[e.edge].ends[e.side]; }
  VId across(EdgeEnd e) const { return edges[e.edge].ends[1 - e.side]; }
  // Position of an end inside the rotation list of its vertex.
  int position(EdgeEnd e) const { return pos_[e.edge][e.side]; }

  std::optional<VId> find_vertex(std::string_view id) const;
  std::optional<EId> find_edge(std::string_view id) const;
  VId vertex(std::string_view id) const;
  EId edge(std::string_view id) const;

  // The end of the staging edge at the root.
  EdgeEnd staging_end() const;

  // Rebuilds the position table; call after editing rotation/edges by hand.
  void reindex();

 private:
  std::vector<std::array<int, 2>> pos_;
  std::unordered_map<std::string, VId> vmap_;
  std::unordered_map<std::string, EId> emap_;
};

Network load_network(std::string_view text);
Network load_network_file(const std::string& path);
std::string network_to_json(const Network& net);
// Structural checks shared by the loader and by code that builds networks directly.
void validate_network(const Network& net);

std::vector<VId> essential_vertices(const Network& net);

int vertex_connectivity(const Network& net, VId a, VId b);
int network_connectedness(const Network& net);

struct SpanningTree {
  // parent[v] = step from v toward the root; empty for the root.
  std::vector<std::optional<Step>> parent;
  std::vector<bool> tree_edge;
  std::vector<VId> bfs_order;

  bool contains(EId e) const { return tree_edge[e]; }
  // Steps from the root to v.
  std::vector<Step> path_from_root(VId v) const;
  std::vector<VId> path_vertices(VId v) const;  // root ... v
};

SpanningTree rooted_spanning_tree(const Network& net);

struct BranchLabelling {
  // ends[v][label] for essential v; empty for other vertices.
  std::vector<std::vector<EdgeEnd>> ends;
  int label_of(VId v, EdgeEnd e) const;
  int degree(VId v) const { return static_cast<int>(ends[v].size()); }
};

BranchLabelling branch_labels(const Network& net, const SpanningTree& tree);

struct ThetaSubgraph {
  VId v = -1, w = -1;
  std::array<std::vector<Step>, 3> paths;  // each from v to w
};

std::optional<ThetaSubgraph> find_theta(const Network& net, VId v, VId w);

struct LollipopSubgraph {
  VId v = -1;
  int branch = 0;
  std::vector<Step> tail;        // v -> root along the tree
  std::vector<Step> return_path; // v -> root, leaving v through `branch`
  std::string id(const Network& net) const;
};

std::optional<LollipopSubgraph> find_lollipop(const Network& net, const SpanningTree& tree,
                                              VId v, int branch);

// First essential vertex met when walking the tree from the root.
std::optional<VId> first_junction(const Network& net, const SpanningTree& tree);

// Faces of the rotation system. Each face is a closed dart sequence; a dart is an
// end at its tail vertex. Faces are traced with the face on the left of every dart.
struct FaceStructure {
  std::vector<std::vector<EdgeEnd>> faces;
  int outer = -1;
  std::vector<std::array<int, 2>> face_of;  // face_of[edge][side]: face of the dart leaving ends[side]
};

FaceStructure trace_faces(const Network& net);

// Faces reachable from the outer face without crossing the given edges.
std::vector<bool> outside_of(const Network& net, const FaceStructure& fs,
                             const std::vector<bool>& blocked_edges);

}  // namespace wb
