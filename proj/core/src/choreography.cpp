#include "wirebraid/choreography.hpp"

#include <algorithm>
#include <map>

namespace wb {

std::vector<FineMove> reverse_moves(const std::vector<FineMove>& m) {
  std::vector<FineMove> out;
  out.reserve(m.size());
  for (auto it = m.rbegin(); it != m.rend(); ++it) out.push_back({it->to, it->from});
  return out;
}

namespace {

// Python-style slice [a, b).
std::vector<VId> slice(const std::vector<VId>& v, long a, long b) {
  a = std::clamp(a, 0L, static_cast<long>(v.size()));
  b = std::clamp(b, 0L, static_cast<long>(v.size()));
  if (a >= b) return {};
  return {v.begin() + a, v.begin() + b};
}

std::vector<VId> reversed(std::vector<VId> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

std::vector<VId> cat(std::vector<VId> a, const std::vector<VId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct Recorder {
  std::vector<FineMove> moves;
  void mv(const std::vector<VId>& path) {
    for (size_t k = 0; k + 1 < path.size(); ++k) moves.push_back({path[k], path[k + 1]});
  }
};

}  // namespace

Choreographer::Choreographer(const Network& net, int n)
    : net_(net), n_(n), sub_(subdivide(net, n)), tree_(rooted_spanning_tree(net)), labels_(branch_labels(net, tree_)) {
  stg_.push_back(sub_.vertex[net_.root]);
  auto s = sub_.slots(net_, net_.staging_end());
  stg_.insert(stg_.end(), s.begin(), s.end());
  if (static_cast<int>(stg_.size()) < n_ + 1) throw Error(ErrorKind::OutOfRange, "staging chain too short");
}

std::vector<VId> Choreographer::base() const {
  std::vector<VId> b;
  for (int i = 1; i <= n_; ++i) b.push_back(home(i));
  return b;
}

std::vector<VId> Choreographer::tree_path(VId v) const { return sub_.walk(tree_.path_from_root(v)); }

std::vector<VId> Choreographer::branch_slots(VId v, int label) const {
  if (label < 0 || label >= labels_.degree(v)) throw Error(ErrorKind::LabelRange, "branch label out of range");
  return sub_.slots(net_, labels_.ends[v][label]);
}

std::vector<VId> Choreographer::return_path(VId v, int branch) const {
  auto L = find_lollipop(net_, tree_, v, branch);
  if (!L)
    throw Error(ErrorKind::MissingLollipop,
                "no lollipop at '" + net_.vertex_ids[v] + "' through branch " + std::to_string(branch));
  return sub_.walk(L->return_path);
}

namespace {

VId junction(const Network& net, const std::string& id) {
  auto v = net.find_vertex(id);
  if (!v || net.degree(*v) < 3) throw Error(ErrorKind::Syntax, "'" + id + "' is not a junction");
  return *v;
}

}  // namespace

std::vector<FineMove> Choreographer::simple_braid(const SimpleBraid& g) const {
  const int n = n_;
  const VId v = junction(net_, g.vertex);
  const int i = g.index();
  if (i < 1 || i >= n) throw Error(ErrorKind::OutOfRange, "braid index out of range for " + std::to_string(n) + " anyons");
  const std::vector<VId> tp = tree_path(v);
  const long L = static_cast<long>(tp.size()) - 1;
  if (L < n || !std::equal(stg_.begin(), stg_.begin() + n + 1, tp.begin()))
    throw Error(ErrorKind::IllegalMove, "tree path leaves the staging chain early");
  Recorder r;
  for (int j = 1; j <= n; ++j) r.mv(slice(tp, n - j + 1, L - j + 1));
  auto depth = [&](int k) { return tp[static_cast<size_t>(L - k)]; };
  const VId vf = tp.back();

  std::map<int, int> fill;
  std::map<int, std::pair<int, long>> placed;  // key -> (label, target)
  auto push = [&](int from_depth, int label, int key) {
    std::vector<VId> sl = branch_slots(v, label);
    long m = static_cast<long>(sl.size()) - 1;
    long tgt = m - fill[label] - 1;
    if (tgt < 0) throw Error(ErrorKind::IllegalMove, "branch too short to park");
    fill[label]++;
    std::vector<VId> path;
    for (int d = from_depth; d >= 1; --d) path.push_back(depth(d));
    path.push_back(vf);
    r.mv(cat(path, slice(sl, 0, tgt + 1)));
    placed[key] = {label, tgt};
  };
  auto pull = [&](int key, int to_depth) {
    auto [label, tgt] = placed.at(key);
    placed.erase(key);
    std::vector<VId> sl = branch_slots(v, label);
    fill[label]--;
    std::vector<VId> path = reversed(slice(sl, 0, tgt + 1));
    path.push_back(vf);
    for (int d = 1; d <= to_depth; ++d) path.push_back(depth(d));
    r.mv(path);
  };
  const int X = -1, Y = -2;
  for (int k = 1; k < i; ++k) push(k, g.seq[k - 1], k);
  push(i, g.seq[i - 1], X);
  push(i + 1, g.seq[i], Y);
  pull(X, i + 1);
  pull(Y, i);
  for (int k = i - 1; k >= 1; --k) pull(k, k);
  for (int j = n; j >= 1; --j) r.mv(reversed(slice(tp, n - j + 1, L - j + 1)));
  return r.moves;
}

std::vector<FineMove> Choreographer::total_braid(const std::string& id) const {
  auto ref = parse_lollipop_id(id);
  if (!ref || ref->park != 0) throw Error(ErrorKind::Syntax, "bad lollipop id '" + id + "'");
  const int n = n_;
  const VId v = junction(net_, ref->vertex);
  const std::vector<VId> tp = tree_path(v);
  const std::vector<VId> Q = return_path(v, ref->branch);
  Recorder r;
  r.mv(cat(slice(tp, n, static_cast<long>(tp.size())), slice(Q, 1, static_cast<long>(Q.size()))));
  for (int j = 2; j <= n; ++j) r.mv({stg_[n - j + 1], stg_[n - j + 2]});
  r.mv({stg_[0], stg_[1]});
  return r.moves;
}

std::vector<FineMove> Choreographer::one_particle(const std::string& id) const {
  auto ref = parse_lollipop_id(id);
  if (!ref || ref->park == 0)
    throw Error(ErrorKind::PatternMismatch, "no choreography for one-particle loop '" + id + "'");
  const int n = n_;
  const VId v = junction(net_, ref->vertex);
  const std::vector<VId> tp = tree_path(v);
  const long L = static_cast<long>(tp.size()) - 1;
  const std::vector<VId> Q = return_path(v, ref->branch);
  const VId vf = tp.back();
  Recorder r;
  for (int j = 1; j <= n; ++j) r.mv(slice(tp, n - j + 1, L - j + 1));
  std::vector<VId> sl = branch_slots(v, ref->park);
  long m = static_cast<long>(sl.size()) - 1;
  if (m - (n - 1) < 0) throw Error(ErrorKind::IllegalMove, "branch too short to park");
  for (int k = 1; k < n; ++k) {
    std::vector<VId> path;
    for (int d = k; d >= 1; --d) path.push_back(tp[static_cast<size_t>(L - d)]);
    path.push_back(vf);
    r.mv(cat(path, slice(sl, 0, m - k + 1)));
  }
  std::vector<VId> loop;
  for (int d = n; d >= 1; --d) loop.push_back(tp[static_cast<size_t>(L - d)]);
  loop = cat(cat(loop, Q), slice(tp, 1, L - n + 1));
  r.mv(loop);
  for (int k = n - 1; k >= 1; --k) {
    std::vector<VId> path = reversed(slice(sl, 0, m - k + 1));
    path.push_back(vf);
    for (int d = 1; d <= k; ++d) path.push_back(tp[static_cast<size_t>(L - d)]);
    r.mv(path);
  }
  for (int j = n; j >= 1; --j) r.mv(reversed(slice(tp, n - j + 1, L - j + 1)));
  return r.moves;
}

std::vector<FineMove> Choreographer::letter(const Letter& l) const {
  std::vector<FineMove> m;
  if (auto sb = std::get_if<SimpleBraid>(&l.gen)) m = simple_braid(*sb);
  else if (auto tb = std::get_if<TotalBraid>(&l.gen)) m = total_braid(tb->cycle);
  else if (auto op = std::get_if<OneParticle>(&l.gen)) m = one_particle(op->cycle);
  else
    throw Error(ErrorKind::PatternMismatch, "named moves are expanded by the string simulator");
  return l.exp > 0 ? m : reverse_moves(m);
}

std::vector<FineMove> Choreographer::word(const Word& w) const {
  std::vector<FineMove> out;
  for (const Letter& l : w) {
    auto m = letter(l);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

void replay(const Network& fine, std::vector<VId>& config, std::vector<int>& labels, const std::vector<FineMove>& moves) {
  std::vector<int> at(static_cast<size_t>(fine.num_vertices()), -1);
  for (size_t k = 0; k < config.size(); ++k) at[config[k]] = labels[k];
  for (const FineMove& m : moves) {
    if (at[m.from] < 0)
      throw Error(ErrorKind::IllegalMove, "no token at '" + fine.vertex_ids[m.from] + "'");
    if (at[m.to] >= 0)
      throw Error(ErrorKind::IllegalMove, "collision at '" + fine.vertex_ids[m.to] + "'");
    bool adjacent = false;
    for (EdgeEnd x : fine.rotation[m.from]) adjacent |= fine.across(x) == m.to;
    if (!adjacent) throw Error(ErrorKind::IllegalMove, "hop between non-adjacent vertices");
    at[m.to] = at[m.from];
    at[m.from] = -1;
  }
  std::vector<std::pair<VId, int>> fin;
  for (VId v = 0; v < fine.num_vertices(); ++v)
    if (at[v] >= 0) fin.emplace_back(v, at[v]);
  config.clear();
  labels.clear();
  for (auto [v, l] : fin) {
    config.push_back(v);
    labels.push_back(l);
  }
}

}  // namespace wb
