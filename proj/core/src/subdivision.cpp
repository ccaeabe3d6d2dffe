#include "wirebraid/subdivision.hpp"

#include <algorithm>

#include "json.hpp"

namespace wb {

namespace {

bool breaks(const Network& net, VId v) { return v == net.root || net.degree(v) != 2; }

// The other end at a degree-2 vertex.
EdgeEnd continue_through(const Network& net, EdgeEnd arrived) {
  VId y = net.at(arrived);
  for (EdgeEnd x : net.rotation[y])
    if (!(x == arrived)) return x;
  return arrived;
}

}  // namespace

Subdivision subdivide(const Network& net, int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "need at least one particle");
  std::vector<int> pieces(net.num_edges(), 1);
  std::vector<bool> seen(net.num_edges(), false);
  for (VId b = 0; b < net.num_vertices(); ++b) {
    if (!breaks(net, b)) continue;
    for (EdgeEnd x : net.rotation[b]) {
      if (seen[x.edge]) continue;
      std::vector<EId> chain;
      EdgeEnd cur = x;
      VId y;
      while (true) {
        seen[cur.edge] = true;
        chain.push_back(cur.edge);
        y = net.across(cur);
        if (breaks(net, y)) break;
        cur = continue_through(net, cur.opposite());
      }
      int m = static_cast<int>(chain.size());
      int need = y == b ? std::max(n + 1, 3) : n + 1;
      int total = std::max(m, need);
      for (int k = 0; k < m; ++k) pieces[chain[k]] = total / m + (k < total % m ? 1 : 0);
    }
  }

  using nlohmann::json;
  auto point = [&](EId e, int k) -> std::string {
    const Edge& ed = net.edges[e];
    if (k == 0) return net.vertex_ids[ed.ends[0]];
    if (k == pieces[e]) return net.vertex_ids[ed.ends[1]];
    return ed.id + "#" + std::to_string(k);
  };
  auto seg = [&](EId e, int k) { return net.edges[e].id + "/" + std::to_string(k); };
  auto end_segment = [&](EdgeEnd x) { return seg(x.edge, x.side == 0 ? 1 : pieces[x.edge]); };

  json doc;
  doc["vertices"] = json::array();
  doc["edges"] = json::array();
  for (VId v = 0; v < net.num_vertices(); ++v) {
    json adj = json::array();
    for (EdgeEnd x : net.rotation[v]) adj.push_back(end_segment(x));
    doc["vertices"].push_back({{"id", net.vertex_ids[v]}, {"adj", adj}});
  }
  for (EId e = 0; e < net.num_edges(); ++e) {
    for (int k = 1; k < pieces[e]; ++k) {
      std::string id = point(e, k);
      if (net.find_vertex(id)) throw Error(ErrorKind::Parse, "vertex id '" + id + "' clashes with subdivision");
      doc["vertices"].push_back({{"id", id}, {"adj", {seg(e, k), seg(e, k + 1)}}});
    }
    for (int k = 1; k <= pieces[e]; ++k) doc["edges"].push_back({{"id", seg(e, k)}, {"ends", {point(e, k - 1), point(e, k)}}});
  }
  doc["root"] = net.vertex_ids[net.root];
  doc["staging_edge"] = end_segment(net.staging_end());

  Subdivision s;
  s.n = n;
  s.fine = load_network(doc.dump());
  for (VId v = 0; v < net.num_vertices(); ++v) s.vertex.push_back(s.fine.vertex(net.vertex_ids[v]));
  for (EId e = 0; e < net.num_edges(); ++e) {
    std::vector<VId> pts;
    std::vector<EId> segs;
    for (int k = 0; k <= pieces[e]; ++k) pts.push_back(s.fine.vertex(point(e, k)));
    for (int k = 1; k <= pieces[e]; ++k) segs.push_back(s.fine.edge(seg(e, k)));
    s.points.push_back(std::move(pts));
    s.segments.push_back(std::move(segs));
  }
  return s;
}

std::vector<VId> Subdivision::along(EdgeEnd end) const {
  const auto& pts = points[end.edge];
  if (end.side == 0) return {pts.begin() + 1, pts.end()};
  return {pts.rbegin() + 1, pts.rend()};
}

std::vector<VId> Subdivision::slots(const Network& coarse, EdgeEnd end) const {
  std::vector<VId> out = along(end);
  EdgeEnd cur = end;
  while (true) {
    VId y = coarse.across(cur);
    if (breaks(coarse, y)) break;
    cur = continue_through(coarse, cur.opposite());
    auto more = along(cur);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

std::vector<VId> Subdivision::walk(const std::vector<Step>& steps) const {
  std::vector<VId> out;
  if (steps.empty()) return out;
  out.push_back(vertex[steps.front().from]);
  for (const Step& s : steps) {
    auto more = along(s.via);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

EId Subdivision::edge_between(VId a, VId b) const {
  for (EdgeEnd x : fine.rotation[a])
    if (fine.across(x) == b) return x.edge;
  throw Error(ErrorKind::IllegalMove, "fine vertices '" + fine.vertex_ids[a] + "' and '" + fine.vertex_ids[b] +
                                          "' are not adjacent");
}

}  // namespace wb
