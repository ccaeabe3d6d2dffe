#include "wirebraid/oracle.hpp"

#include <algorithm>
#include <deque>

#include "json.hpp"

namespace wb {

std::string oracle_report_to_json(const OracleReport& r) {
  nlohmann::ordered_json j;
  j["cells"] = r.cells;
  j["euler"] = r.euler;
  j["h1_rank"] = r.h1_rank;
  j["components"] = r.components;
  if (r.free) j["free"] = *r.free;
  else j["free"] = "unknown";
  j["generators"] = r.generators;
  j["relators"] = r.relators;
  j["budget_exhausted"] = r.budget_exhausted;
  return j.dump(2);
}

Oracle::Oracle(const Network& net, int n, uint64_t cap) : n_(n), net_(net) {
  choreo_ = std::make_unique<Choreographer>(net, n);
  cx_ = std::make_unique<CubeComplex>(choreo_->sub().fine, n, cap);
}

Oracle::~Oracle() = default;

Lattice& Oracle::boundaries() {
  if (!bd_) {
    bd_ = std::make_unique<Lattice>();
    cx_->for_each_square([&](const CubeComplex::Boundary& b) { bd_->add(CubeComplex::boundary_row(b)); });
  }
  return *bd_;
}

Lattice& Oracle::quotient() {
  if (!quot_) {
    quot_ = std::make_unique<Lattice>();
    cx_->for_each_square([&](const CubeComplex::Boundary& b) { quot_->add(CubeComplex::boundary_row(b)); });
    const Subdivision& s = sub();
    const Network& fine = s.fine;
    FaceStructure fs = trace_faces(net_);
    for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
      if (f == fs.outer || fs.faces[f].empty()) continue;
      std::vector<VId> walk{s.vertex[net_.at(fs.faces[f].front())]};
      for (EdgeEnd d : fs.faces[f]) {
        auto more = s.along(d);
        walk.insert(walk.end(), more.begin(), more.end());
      }
      std::vector<bool> on(static_cast<size_t>(fine.num_vertices()), false);
      for (VId v : walk) on[v] = true;
      std::vector<VId> pool;
      for (VId v = 0; v < fine.num_vertices(); ++v)
        if (!on[v]) pool.push_back(v);
      std::vector<std::pair<EId, int>> steps;
      for (size_t k = 0; k + 1 < walk.size(); ++k) {
        EId e = s.edge_between(walk[k], walk[k + 1]);
        steps.emplace_back(e, fine.edges[e].ends[0] == walk[k] ? 1 : -1);
      }
      for_each_subset(pool, n_ - 1, [&](const std::vector<VId>& S) {
        std::vector<std::pair<uint64_t, int64_t>> row;
        for (auto [e, sign] : steps) row.emplace_back(cx_->edge_cell(e, S), sign);
        quot_->add(make_row(std::move(row)));
      });
    }
  }
  return *quot_;
}

int64_t Oracle::h1_rank() {
  if (!h1_) {
    const auto& c = cx_->counts();
    int64_t c0 = static_cast<int64_t>(c[0]);
    int64_t c1 = c.size() > 1 ? static_cast<int64_t>(c[1]) : 0;
    h1_ = c1 - (c0 - cx_->components()) - static_cast<int64_t>(boundaries().rank());
  }
  return *h1_;
}

Pi1Presentation Oracle::pi1() const {
  const CubeComplex& cx = *cx_;
  const Network& fine = sub().fine;
  Pi1Presentation p;
  p.basepoint = cx.vertex_cell(choreo_->base());
  uint64_t c0 = cx.counts()[0];
  uint64_t c1 = cx.counts().size() > 1 ? cx.counts()[1] : 0;
  std::vector<bool> seen(c0, false), tree(c1, false);
  std::deque<uint64_t> q{p.basepoint};
  seen[p.basepoint] = true;
  while (!q.empty()) {
    uint64_t cell = q.front();
    q.pop_front();
    std::vector<VId> conf = cx.vertex_config(cell);
    std::vector<bool> occ(static_cast<size_t>(fine.num_vertices()), false);
    for (VId v : conf) occ[v] = true;
    for (size_t t = 0; t < conf.size(); ++t) {
      VId x = conf[t];
      std::vector<VId> rest = conf;
      rest.erase(rest.begin() + static_cast<long>(t));
      for (EdgeEnd end : fine.rotation[x]) {
        VId y = fine.across(end);
        if (occ[y]) continue;
        std::vector<VId> next = rest;
        next.push_back(y);
        uint64_t nc = cx.vertex_cell(next);
        if (seen[nc]) continue;
        seen[nc] = true;
        tree[cx.edge_cell(end.edge, rest)] = true;
        q.push_back(nc);
      }
    }
  }
  std::vector<int> gen(c1, -1);
  for (uint64_t c = 0; c < c1; ++c) {
    if (tree[c]) continue;
    // Only cells in the basepoint component.
    if (!seen[cx.edge_endpoints(c).first]) continue;
    gen[c] = static_cast<int>(p.generator_cells.size());
    p.generator_cells.push_back(c);
  }
  p.group.generators = static_cast<int>(p.generator_cells.size());
  cx.for_each_square([&](const CubeComplex::Boundary& b) {
    if (!seen[cx.edge_endpoints(b[0].first).first]) return;
    GroupWord w;
    for (const auto& [c, s] : b)
      if (gen[c] >= 0) w.push_back(s * (gen[c] + 1));
    p.group.relators.push_back(std::move(w));
  });
  return p;
}

OracleReport Oracle::report(size_t tietze_budget) {
  OracleReport r;
  r.cells = cx_->counts();
  r.euler = cx_->euler();
  r.h1_rank = h1_rank();
  r.components = cx_->components();
  TietzeResult t = tietze_simplify(pi1().group, tietze_budget);
  r.budget_exhausted = t.exhausted;
  if (t.free()) r.free = true;
  r.generators = t.presentation.generators;
  r.relators = t.presentation.relators.size();
  return r;
}

SparseRow Oracle::chain(const std::vector<FineMove>& moves) const {
  const Network& fine = sub().fine;
  std::vector<bool> occ(static_cast<size_t>(fine.num_vertices()), false);
  std::vector<VId> conf = choreo_->base();
  for (VId v : conf) occ[v] = true;
  std::vector<std::pair<uint64_t, int64_t>> out;
  for (const FineMove& m : moves) {
    if (!occ[m.from] || occ[m.to]) throw Error(ErrorKind::IllegalMove, "collision while tracing loop");
    EId e = sub().edge_between(m.from, m.to);
    std::vector<VId> rest;
    for (VId v : conf)
      if (v != m.from) rest.push_back(v);
    out.emplace_back(cx_->edge_cell(e, rest), fine.edges[e].ends[0] == m.from ? 1 : -1);
    occ[m.from] = false;
    occ[m.to] = true;
    *std::find(conf.begin(), conf.end(), m.from) = m.to;
  }
  return make_row(std::move(out));
}

LoopClass Oracle::classify(const std::vector<FineMove>& moves) {
  LoopClass lc;
  std::vector<VId> conf = choreo_->base();
  std::vector<int> labels;
  for (int i = 1; i <= n_; ++i) labels.push_back(i);
  replay(sub().fine, conf, labels, moves);
  std::vector<VId> base = choreo_->base();
  std::sort(base.begin(), base.end());
  lc.closed = conf == base;
  lc.chain = chain(moves);
  if (lc.closed) {
    for (int i = 1; i <= n_; ++i) {
      auto it = std::find(conf.begin(), conf.end(), choreo_->home(i));
      lc.permutation.push_back(labels[static_cast<size_t>(it - conf.begin())]);
    }
    lc.null_homologous = is_boundary(lc.chain);
    lc.null_mod_one_particle = lc.null_homologous || is_boundary_mod_one_particle(lc.chain);
  }
  return lc;
}

LoopClass Oracle::word_to_loop(const Word& w) {
  LoopClass lc = classify(choreo_->word(w));
  if (!lc.closed) throw Error(ErrorKind::NotClosed, "word does not return to the base configuration");
  return lc;
}

bool Oracle::is_boundary(const SparseRow& c) { return c.empty() || boundaries().contains(c); }

bool Oracle::is_boundary_mod_one_particle(const SparseRow& c) { return c.empty() || quotient().contains(c); }

}  // namespace wb
