#include "wirebraid/network.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace wb {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::AsymmetricAdjacency: return "asymmetric adjacency";
    case ErrorKind::Disconnected: return "disconnected graph";
    case ErrorKind::InvalidRoot: return "invalid root";
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::LabelRange: return "branch label out of range";
    case ErrorKind::RepeatedLabel: return "repeated exchange label";
    case ErrorKind::PatternMismatch: return "pattern mismatch";
    case ErrorKind::DegreeTooSmall: return "degree too small";
    case ErrorKind::MissingLollipop: return "missing lollipop";
    case ErrorKind::UnsupportedRegime: return "unsupported regime";
    case ErrorKind::SizeCap: return "size cap exceeded";
    case ErrorKind::IllegalMove: return "illegal move";
    case ErrorKind::NotClosed: return "word is not closed";
    case ErrorKind::Unassigned: return "unassigned generator";
    case ErrorKind::ClassMismatch: return "class mismatch";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::Budget: return "budget exhausted";
    case ErrorKind::SelfIntersection: return "string self-intersection";
  }
  return "error";
}

std::optional<VId> Network::find_vertex(std::string_view id) const {
  auto it = vmap_.find(std::string(id));
  if (it == vmap_.end()) return std::nullopt;
  return it->second;
}

std::optional<EId> Network::find_edge(std::string_view id) const {
  auto it = emap_.find(std::string(id));
  if (it == emap_.end()) return std::nullopt;
  return it->second;
}

VId Network::vertex(std::string_view id) const {
  auto v = find_vertex(id);
  if (!v) throw Error(ErrorKind::OutOfRange, "unknown vertex '" + std::string(id) + "'");
  return *v;
}

EId Network::edge(std::string_view id) const {
  auto e = find_edge(id);
  if (!e) throw Error(ErrorKind::OutOfRange, "unknown edge '" + std::string(id) + "'");
  return *e;
}

EdgeEnd Network::staging_end() const {
  const Edge& e = edges[staging];
  return {staging, e.ends[0] == root ? 0 : 1};
}

void Network::reindex() {
  vmap_.clear();
  emap_.clear();
  for (VId v = 0; v < num_vertices(); ++v) vmap_[vertex_ids[v]] = v;
  for (EId e = 0; e < num_edges(); ++e) emap_[edges[e].id] = e;
  pos_.assign(edges.size(), {-1, -1});
  for (VId v = 0; v < num_vertices(); ++v)
    for (int i = 0; i < degree(v); ++i) {
      EdgeEnd x = rotation[v][i];
      pos_[x.edge][x.side] = i;
    }
}

void validate_network(const Network& net) {
  if (net.num_vertices() == 0) throw Error(ErrorKind::Parse, "no vertices");
  std::vector<std::array<int, 2>> seen(net.edges.size(), {0, 0});
  for (VId v = 0; v < net.num_vertices(); ++v)
    for (EdgeEnd x : net.rotation[v]) {
      if (x.edge < 0 || x.edge >= net.num_edges() || net.at(x) != v)
        throw Error(ErrorKind::AsymmetricAdjacency,
                    "vertex '" + net.vertex_ids[v] + "' lists a foreign edge end");
      seen[x.edge][x.side]++;
    }
  for (EId e = 0; e < net.num_edges(); ++e)
    if (seen[e][0] != 1 || seen[e][1] != 1)
      throw Error(ErrorKind::AsymmetricAdjacency,
                  "edge '" + net.edges[e].id + "' must appear exactly once at each endpoint");

  std::vector<bool> reached(net.num_vertices(), false);
  std::deque<VId> q{0};
  reached[0] = true;
  while (!q.empty()) {
    VId x = q.front();
    q.pop_front();
    for (EdgeEnd end : net.rotation[x]) {
      VId y = net.across(end);
      if (!reached[y]) {
        reached[y] = true;
        q.push_back(y);
      }
    }
  }
  for (VId v = 0; v < net.num_vertices(); ++v)
    if (!reached[v]) throw Error(ErrorKind::Disconnected, "vertex '" + net.vertex_ids[v] + "' unreachable");

  if (net.root < 0 || net.root >= net.num_vertices()) throw Error(ErrorKind::InvalidRoot, "missing root");
  int rd = net.degree(net.root);
  if (rd < 1 || rd > 2) throw Error(ErrorKind::InvalidRoot, "root must have degree 1 or 2");
  if (net.staging < 0 || net.staging >= net.num_edges())
    throw Error(ErrorKind::InvalidRoot, "missing staging edge");
  const Edge& st = net.edges[net.staging];
  if (st.ends[0] != net.root && st.ends[1] != net.root)
    throw Error(ErrorKind::InvalidRoot, "staging edge is not incident to the root");
  for (const Edge& e : net.edges)
    if (e.loop() && (e.ends[0] == net.root || net.degree(e.ends[0]) > 2))
      throw Error(ErrorKind::Parse, "self-loop at root or essential vertex '" +
                                        net.vertex_ids[e.ends[0]] + "'");
}

Network load_network(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::Parse, ex.what());
  }
  try {
    Network net;
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& v : doc.at("vertices")) {
      std::string id = v.at("id").get<std::string>();
      if (adj.count(id)) throw Error(ErrorKind::Parse, "duplicate vertex id '" + id + "'");
      adj[id] = v.at("adj").get<std::vector<std::string>>();
    }
    std::map<std::string, std::array<std::string, 2>> edges;
    for (const auto& e : doc.at("edges")) {
      std::string id = e.at("id").get<std::string>();
      auto ends = e.at("ends").get<std::vector<std::string>>();
      if (ends.size() != 2) throw Error(ErrorKind::Parse, "edge '" + id + "' needs two ends");
      if (edges.count(id)) throw Error(ErrorKind::Parse, "duplicate edge id '" + id + "'");
      edges[id] = {ends[0], ends[1]};
    }
    for (const auto& [id, _] : adj) net.vertex_ids.push_back(id);
    std::map<std::string, VId> vix;
    for (VId i = 0; i < net.num_vertices(); ++i) vix[net.vertex_ids[i]] = i;
    std::map<std::string, EId> eix;
    for (const auto& [id, ends] : edges) {
      Edge e;
      e.id = id;
      for (int s = 0; s < 2; ++s) {
        auto it = vix.find(ends[s]);
        if (it == vix.end()) throw Error(ErrorKind::Parse, "edge '" + id + "' names unknown vertex '" + ends[s] + "'");
        e.ends[s] = it->second;
      }
      eix[id] = net.num_edges();
      net.edges.push_back(e);
    }
    net.rotation.resize(net.vertex_ids.size());
    for (VId v = 0; v < net.num_vertices(); ++v) {
      std::map<EId, int> loops_seen;
      for (const std::string& eid : adj[net.vertex_ids[v]]) {
        auto it = eix.find(eid);
        if (it == eix.end())
          throw Error(ErrorKind::AsymmetricAdjacency, "vertex '" + net.vertex_ids[v] + "' lists unknown edge '" + eid + "'");
        const Edge& e = net.edges[it->second];
        int side;
        if (e.loop()) {
          side = loops_seen[it->second]++;
          if (side > 1 || e.ends[0] != v)
            throw Error(ErrorKind::AsymmetricAdjacency, "loop '" + eid + "' listed inconsistently");
        } else if (e.ends[0] == v) {
          side = 0;
        } else if (e.ends[1] == v) {
          side = 1;
        } else {
          throw Error(ErrorKind::AsymmetricAdjacency,
                      "vertex '" + net.vertex_ids[v] + "' lists non-incident edge '" + eid + "'");
        }
        net.rotation[v].push_back({it->second, side});
      }
    }
    std::string root = doc.at("root").get<std::string>();
    std::string staging = doc.at("staging_edge").get<std::string>();
    if (!vix.count(root)) throw Error(ErrorKind::InvalidRoot, "unknown root '" + root + "'");
    if (!eix.count(staging)) throw Error(ErrorKind::InvalidRoot, "unknown staging edge '" + staging + "'");
    net.root = vix[root];
    net.staging = eix[staging];
    net.reindex();
    validate_network(net);
    return net;
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::Parse, ex.what());
  }
}

Network load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_network(ss.str());
}

std::string network_to_json(const Network& net) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (VId v = 0; v < net.num_vertices(); ++v) {
    nlohmann::ordered_json adj = nlohmann::ordered_json::array();
    for (EdgeEnd x : net.rotation[v]) adj.push_back(net.edges[x.edge].id);
    doc["vertices"].push_back({{"id", net.vertex_ids[v]}, {"adj", adj}});
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : net.edges)
    doc["edges"].push_back({{"id", e.id}, {"ends", {net.vertex_ids[e.ends[0]], net.vertex_ids[e.ends[1]]}}});
  doc["root"] = net.vertex_ids[net.root];
  doc["staging_edge"] = net.edges[net.staging].id;
  return doc.dump(2);
}

std::vector<VId> essential_vertices(const Network& net) {
  std::vector<VId> out;
  for (VId v = 0; v < net.num_vertices(); ++v)
    if (net.degree(v) >= 3) out.push_back(v);
  return out;
}

namespace {

// Unit-capacity max flow on the vertex-split digraph. Node 2x is x_in, 2x+1 is x_out.
struct SplitFlow {
  struct Arc {
    int to, rev, cap;
    EId edge;  // -1 for the internal in->out arc
  };
  std::vector<std::vector<Arc>> g;

  void add(int a, int b, int cap, EId e) {
    g[a].push_back({b, static_cast<int>(g[b].size()), cap, e});
    g[b].push_back({a, static_cast<int>(g[a].size()) - 1, 0, e});
  }

  SplitFlow(const Network& net, VId s, VId t) : g(2 * net.num_vertices()) {
    for (VId x = 0; x < net.num_vertices(); ++x)
      add(2 * x, 2 * x + 1, (x == s || x == t) ? 2 * net.num_edges() + 2 : 1, -1);
    // Arcs are inserted in (neighbour id, edge id) order so BFS ties break lexicographically.
    for (VId x = 0; x < net.num_vertices(); ++x) {
      std::vector<std::pair<VId, EId>> nb;
      for (EdgeEnd end : net.rotation[x])
        if (!net.edges[end.edge].loop()) nb.push_back({net.across(end), end.edge});
      std::sort(nb.begin(), nb.end());
      for (auto [y, e] : nb) add(2 * x + 1, 2 * y, 1, e);
    }
  }

  int run(int src, int dst, int limit) {
    int flow = 0;
    while (flow < limit) {
      std::vector<std::pair<int, int>> prev(g.size(), {-1, -1});
      std::deque<int> q{src};
      prev[src] = {src, -1};
      while (!q.empty() && prev[dst].first < 0) {
        int x = q.front();
        q.pop_front();
        for (int i = 0; i < static_cast<int>(g[x].size()); ++i) {
          const Arc& a = g[x][i];
          if (a.cap > 0 && prev[a.to].first < 0) {
            prev[a.to] = {x, i};
            q.push_back(a.to);
          }
        }
      }
      if (prev[dst].first < 0) break;
      for (int y = dst; y != src;) {
        auto [x, i] = prev[y];
        Arc& a = g[x][i];
        a.cap -= 1;
        g[a.to][a.rev].cap += 1;
        y = x;
      }
      ++flow;
    }
    return flow;
  }
};

}  // namespace

int vertex_connectivity(const Network& net, VId a, VId b) {
  if (a == b) throw Error(ErrorKind::OutOfRange, "vertex_connectivity needs distinct vertices");
  SplitFlow f(net, a, b);
  return f.run(2 * a + 1, 2 * b, net.num_edges() + 1);
}

int network_connectedness(const Network& net) {
  auto ess = essential_vertices(net);
  if (ess.size() <= 1) return 1;
  int best = -1;
  for (size_t i = 0; i < ess.size(); ++i)
    for (size_t j = i + 1; j < ess.size(); ++j) {
      int k = vertex_connectivity(net, ess[i], ess[j]);
      if (best < 0 || k < best) best = k;
    }
  return best;
}

std::vector<Step> SpanningTree::path_from_root(VId v) const {
  std::vector<Step> up;
  for (VId x = v; parent[x]; x = parent[x]->to) up.push_back(*parent[x]);
  std::vector<Step> out;
  for (auto it = up.rbegin(); it != up.rend(); ++it) out.push_back({it->to, it->via.opposite(), it->from});
  return out;
}

std::vector<VId> SpanningTree::path_vertices(VId v) const {
  std::vector<VId> out{v};
  for (VId x = v; parent[x]; x = parent[x]->to) out.push_back(parent[x]->to);
  std::reverse(out.begin(), out.end());
  return out;
}

SpanningTree rooted_spanning_tree(const Network& net) {
  SpanningTree t;
  t.parent.assign(net.num_vertices(), std::nullopt);
  t.tree_edge.assign(net.num_edges(), false);
  std::vector<bool> seen(net.num_vertices(), false);
  std::deque<VId> q;

  auto visit = [&](VId x, EdgeEnd end_at_x) {
    VId y = net.across(end_at_x);
    seen[y] = true;
    t.parent[y] = Step{y, end_at_x.opposite(), x};
    t.tree_edge[end_at_x.edge] = true;
    t.bfs_order.push_back(y);
    q.push_back(y);
  };
  auto drain = [&] {
    while (!q.empty()) {
      VId x = q.front();
      q.pop_front();
      std::vector<std::tuple<VId, EId, int>> nb;
      for (EdgeEnd end : net.rotation[x]) nb.push_back({net.across(end), end.edge, end.side});
      std::sort(nb.begin(), nb.end());
      for (auto [y, e, side] : nb)
        if (!seen[y]) visit(x, EdgeEnd{e, side});
    }
  };

  seen[net.root] = true;
  t.bfs_order.push_back(net.root);
  // The root is left through the staging edge first and through its other edge only
  // when something is still unreached, so base configurations never collide with tree paths.
  visit(net.root, net.staging_end());
  drain();
  for (EdgeEnd end : net.rotation[net.root])
    if (!seen[net.across(end)]) {
      visit(net.root, end);
      drain();
    }
  return t;
}

int BranchLabelling::label_of(VId v, EdgeEnd e) const {
  for (int i = 0; i < static_cast<int>(ends[v].size()); ++i)
    if (ends[v][i] == e) return i;
  return -1;
}

BranchLabelling branch_labels(const Network& net, const SpanningTree& tree) {
  BranchLabelling bl;
  bl.ends.resize(net.num_vertices());
  for (VId v : essential_vertices(net)) {
    if (!tree.parent[v]) continue;
    EdgeEnd zero = tree.parent[v]->via;
    int d = net.degree(v);
    int p = net.position(zero);
    for (int t = 0; t < d; ++t) bl.ends[v].push_back(net.rotation[v][(p + t) % d]);
  }
  return bl;
}

std::optional<ThetaSubgraph> find_theta(const Network& net, VId v, VId w) {
  if (v == w) return std::nullopt;
  SplitFlow f(net, v, w);
  if (f.run(2 * v + 1, 2 * w, 3) < 3) return std::nullopt;

  // Net flow per edge end: +1 if the edge carries flow leaving that end.
  std::map<std::pair<VId, EId>, VId> next;  // (vertex, edge) -> neighbour reached with positive flow
  std::vector<std::vector<std::pair<EId, VId>>> out(net.num_vertices());
  for (VId x = 0; x < net.num_vertices(); ++x)
    for (const auto& a : f.g[2 * x + 1]) {
      if (a.edge < 0 || a.to % 2 != 0) continue;
      VId y = a.to / 2;
      int used = 1 - a.cap;
      // An opposite arc y->x carrying flow cancels this one.
      int back = 0;
      for (const auto& b : f.g[2 * y + 1])
        if (b.edge == a.edge && b.to == 2 * x) back = 1 - b.cap;
      if (used - back > 0) out[x].push_back({a.edge, y});
    }
  std::vector<std::vector<Step>> paths;
  for (auto& o : out) std::sort(o.begin(), o.end(), [&](auto p, auto q) {
    return std::make_pair(p.second, p.first) < std::make_pair(q.second, q.first);
  });
  std::vector<size_t> cursor(net.num_vertices(), 0);
  for (int k = 0; k < 3; ++k) {
    std::vector<Step> path;
    VId x = v;
    while (x != w) {
      if (cursor[x] >= out[x].size()) return std::nullopt;
      auto [e, y] = out[x][cursor[x]++];
      const Edge& ed = net.edges[e];
      int side = ed.ends[0] == x ? 0 : 1;
      path.push_back({x, {e, side}, y});
      x = y;
      if (path.size() > static_cast<size_t>(net.num_edges())) return std::nullopt;
    }
    paths.push_back(path);
  }
  std::stable_sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  ThetaSubgraph th;
  th.v = v;
  th.w = w;
  for (int k = 0; k < 3; ++k) th.paths[k] = paths[k];
  return th;
}

std::string LollipopSubgraph::id(const Network& net) const {
  return net.vertex_ids[v] + "." + std::to_string(branch);
}

std::optional<LollipopSubgraph> find_lollipop(const Network& net, const SpanningTree& tree, VId v,
                                              int branch) {
  if (net.degree(v) < 3 || v == net.root) return std::nullopt;
  BranchLabelling bl = branch_labels(net, tree);
  if (branch < 1 || branch >= bl.degree(v)) return std::nullopt;
  std::vector<bool> on_tail(net.num_vertices(), false);
  for (VId x : tree.path_vertices(v)) on_tail[x] = true;

  LollipopSubgraph L;
  L.v = v;
  L.branch = branch;
  std::vector<Step> root_path = tree.path_from_root(v);
  for (auto it = root_path.rbegin(); it != root_path.rend(); ++it) L.tail.push_back({it->to, it->via.opposite(), it->from});

  EdgeEnd first = bl.ends[v][branch];
  VId y = net.across(first);
  L.return_path.push_back({v, first, y});
  if (y == net.root) {
    if (first.edge == net.staging) return std::nullopt;
    return L;
  }
  if (on_tail[y]) return std::nullopt;

  // BFS from y avoiding the tail, finishing through a non-staging root edge.
  std::vector<std::optional<Step>> prev(net.num_vertices());
  std::vector<bool> seen(net.num_vertices(), false);
  seen[y] = true;
  std::deque<VId> q{y};
  std::optional<Step> last;
  while (!q.empty() && !last) {
    VId x = q.front();
    q.pop_front();
    std::vector<std::tuple<VId, EId, int>> nb;
    for (EdgeEnd end : net.rotation[x]) nb.push_back({net.across(end), end.edge, end.side});
    std::sort(nb.begin(), nb.end());
    for (auto [z, e, side] : nb) {
      if (z == net.root && e != net.staging) {
        last = Step{x, {e, side}, z};
        break;
      }
      if (on_tail[z] || seen[z]) continue;
      seen[z] = true;
      prev[z] = Step{x, {e, side}, z};
      q.push_back(z);
    }
  }
  if (!last) return std::nullopt;
  std::vector<Step> mid{*last};
  for (VId x = last->from; prev[x]; x = prev[x]->from) mid.push_back(*prev[x]);
  std::reverse(mid.begin(), mid.end());
  L.return_path.insert(L.return_path.end(), mid.begin(), mid.end());
  return L;
}

std::optional<VId> first_junction(const Network& net, const SpanningTree& tree) {
  for (VId v : tree.bfs_order)
    if (net.degree(v) >= 3) return v;
  return std::nullopt;
}

}  // namespace wb
