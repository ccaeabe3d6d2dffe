#include "wirebraid/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace wb {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Free: return "free";
    case Regime::Junction: return "junction";
    case Regime::TwoConnected: return "2-connected";
    case Regime::ThreeConnected: return "3-connected";
    case Regime::Unsupported: return "unsupported";
  }
  return "unsupported";
}

std::optional<CanonicalLollipop> canonical_lollipop(const Network& net, const SpanningTree& tree,
                                                    const FaceStructure& faces) {
  auto v0 = first_junction(net, tree);
  if (!v0) return std::nullopt;
  BranchLabelling bl = branch_labels(net, tree);
  int d = bl.degree(*v0);
  for (int c = 1; c < d; ++c) {
    auto L = find_lollipop(net, tree, *v0, c);
    if (!L) continue;
    std::vector<bool> blocked(net.num_edges(), false);
    for (const Step& s : L->tail) blocked[s.via.edge] = true;
    for (const Step& s : L->return_path) blocked[s.via.edge] = true;
    auto outside = outside_of(net, faces, blocked);
    for (int p = 1; p < d; ++p) {
      if (p == c) continue;
      EdgeEnd e = bl.ends[*v0][p];
      if (blocked[e.edge]) continue;
      if (outside[faces.face_of[e.edge][e.side]]) return CanonicalLollipop{*L, p, c > p ? 1 : -1};
    }
  }
  return std::nullopt;
}

Analysis analyze(const Network& net) {
  Analysis a;
  a.net = net;
  a.tree = rooted_spanning_tree(net);
  a.labels = branch_labels(net, a.tree);
  a.faces = trace_faces(net);
  a.essential = essential_vertices(net);
  a.connectedness = network_connectedness(net);
  a.v0 = first_junction(net, a.tree);
  a.canon = canonical_lollipop(net, a.tree, a.faces);

  std::vector<VId> parent(net.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < a.essential.size(); ++i)
    for (size_t j = i + 1; j < a.essential.size(); ++j)
      if (find_theta(net, a.essential[i], a.essential[j])) parent[find(a.essential[i])] = find(a.essential[j]);
  a.class_rep.assign(net.num_vertices(), -1);
  for (VId v : a.essential) {
    VId root = find(v);
    VId& rep = a.class_rep[root];
    bool has_v0 = a.v0 && find(*a.v0) == root;
    if (has_v0) rep = *a.v0;
    else if (rep < 0 || v < rep) rep = v;
  }
  for (VId v : a.essential) a.class_rep[v] = a.class_rep[find(v)];
  for (VId v = 0; v < net.num_vertices(); ++v)
    if (net.degree(v) < 3) a.class_rep[v] = -1;

  bool tree_like = net.num_edges() == net.num_vertices() - 1;
  if (tree_like) {
    if (a.essential.empty()) a.regime = Regime::Free;
    else if (a.essential.size() == 1) a.regime = Regime::Junction;
    else a.regime_note = "trees with several junctions are not covered";
  } else if (a.connectedness >= 2 && a.essential.size() >= 2) {
    if (a.canon) a.regime = a.connectedness >= 3 ? Regime::ThreeConnected : Regime::TwoConnected;
    else a.regime_note = "no lollipop at the first junction with a parking branch outside its cycle";
  } else {
    a.regime_note = "cyclic network below 2-connectedness";
  }
  if (a.regime == Regime::Unsupported && a.regime_note.empty()) a.regime_note = "unsupported network shape";
  return a;
}

std::vector<VId> Analysis::junction_classes() const {
  std::vector<VId> out;
  for (VId v : essential)
    if (class_rep[v] == v) out.push_back(v);
  return out;
}

std::string Analysis::delta_id() const { return canon ? canon->lollipop.id(net) : std::string(); }

Letter Analysis::delta(int exp) const { return total(delta_id(), exp); }

SimpleBraid Analysis::canonical_symbol(VId u, int a, int b) const {
  if (regime == Regime::ThreeConnected) return SimpleBraid{id(class_rep[u]), {2, 1}};
  if (regime == Regime::TwoConnected) {
    VId rep = class_rep[u];
    if (net.degree(rep) > a) return SimpleBraid{id(rep), {a, b}};
  }
  return SimpleBraid{id(u), {a, b}};
}

std::optional<ThetaRef> Analysis::theta_for(VId u, VId w) const {
  if (!find_theta(net, u, w)) return std::nullopt;
  auto pos = [&](VId x) { return std::find(tree.bfs_order.begin(), tree.bfs_order.end(), x); };
  if (pos(w) < pos(u)) std::swap(u, w);
  return ThetaRef{id(u), id(w)};
}

std::string analysis_to_json(const Analysis& a) {
  nlohmann::ordered_json j;
  j["vertices"] = a.net.num_vertices();
  j["edges"] = a.net.num_edges();
  j["connectedness"] = a.connectedness;
  j["essential"] = nlohmann::ordered_json::array();
  for (VId v : a.essential) j["essential"].push_back({{"id", a.id(v)}, {"degree", a.net.degree(v)}});
  j["junction_classes"] = nlohmann::ordered_json::array();
  for (VId rep : a.junction_classes()) {
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (VId v : a.essential)
      if (a.class_rep[v] == rep) members.push_back(a.id(v));
    j["junction_classes"].push_back({{"representative", a.id(rep)}, {"members", members}});
  }
  j["regime"] = to_string(a.regime);
  if (!a.regime_note.empty()) j["regime_note"] = a.regime_note;
  if (a.v0) j["first_junction"] = a.id(*a.v0);
  if (a.canon) {
    j["lollipop"] = {{"id", a.delta_id()}, {"park", a.canon->park}, {"orientation", a.canon->eps}};
  }
  return j.dump(2);
}

}  // namespace wb
