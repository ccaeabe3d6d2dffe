#include "wirebraid/strings.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

#include "json.hpp"
#include "wirebraid/analysis.hpp"
#include "wirebraid/oracle.hpp"

namespace wb {

namespace {

std::vector<VId> normalized(std::vector<VId> s) {
  if (!s.empty() && s.back() < s.front()) std::reverse(s.begin(), s.end());
  return s;
}

std::multiset<std::vector<VId>> string_set(const StringConfiguration& c) {
  std::multiset<std::vector<VId>> out;
  for (const auto& s : c.strings) out.insert(normalized(s));
  return out;
}

bool adjacent(const Network& fine, VId a, VId b) {
  for (EdgeEnd x : fine.rotation[a])
    if (fine.across(x) == b) return true;
  return false;
}

}  // namespace

bool same_configuration(const StringConfiguration& a, const StringConfiguration& b) {
  if (a.position != b.position || a.strings.size() != b.strings.size()) return false;
  for (size_t k = 0; k < a.strings.size(); ++k)
    if (normalized(a.strings[k]) != normalized(b.strings[k])) return false;
  return true;
}

StringConfiguration initial_configuration(const Choreographer& c) {
  const int n = c.particles();
  StringConfiguration cfg;
  for (int i = 1; i <= n; ++i) cfg.position.push_back(c.home(i));
  if (n % 2 == 1) cfg.position.push_back(c.staging().front());
  for (size_t k = 0; k + 1 < cfg.position.size(); k += 2) cfg.strings.push_back({cfg.position[k], cfg.position[k + 1]});
  return cfg;
}

void check_configuration(const Network& fine, const StringConfiguration& cfg) {
  std::set<VId> seen(cfg.position.begin(), cfg.position.end());
  if (seen.size() != cfg.position.size()) throw Error(ErrorKind::OutOfRange, "two anyons share a vertex");
  if (cfg.position.size() % 2 != 0 || cfg.strings.size() * 2 != cfg.position.size())
    throw Error(ErrorKind::OutOfRange, "anyons are not perfectly paired");
  for (size_t k = 0; k < cfg.strings.size(); ++k) {
    const auto& s = cfg.strings[k];
    if (s.size() < 2 || s.front() != cfg.position[2 * k] || s.back() != cfg.position[2 * k + 1])
      throw Error(ErrorKind::OutOfRange, "string " + std::to_string(k + 1) + " does not join its pair");
    if (std::set<VId>(s.begin(), s.end()).size() != s.size())
      throw Error(ErrorKind::SelfIntersection, "string " + std::to_string(k + 1) + " repeats a vertex");
    for (size_t t = 0; t + 1 < s.size(); ++t)
      if (!adjacent(fine, s[t], s[t + 1])) throw Error(ErrorKind::OutOfRange, "string is not a path");
  }
}

StringConfiguration apply_move(const Network& fine, StringConfiguration cfg, const FineMove& m) {
  auto it = std::find(cfg.position.begin(), cfg.position.end(), m.from);
  if (it == cfg.position.end()) throw Error(ErrorKind::IllegalMove, "no anyon at '" + fine.vertex_ids[m.from] + "'");
  if (std::find(cfg.position.begin(), cfg.position.end(), m.to) != cfg.position.end())
    throw Error(ErrorKind::IllegalMove, "collision at '" + fine.vertex_ids[m.to] + "'");
  if (!adjacent(fine, m.from, m.to)) throw Error(ErrorKind::IllegalMove, "hop between non-adjacent vertices");
  const size_t a = static_cast<size_t>(it - cfg.position.begin());
  std::vector<VId>& s = cfg.strings[a / 2];
  const bool front = a % 2 == 0;
  const VId next = front ? s[1] : s[s.size() - 2];
  if (m.to == next) {
    if (front) s.erase(s.begin());
    else s.pop_back();
  } else {
    if (std::find(s.begin(), s.end(), m.to) != s.end())
      throw Error(ErrorKind::SelfIntersection,
                  "string of anyon " + std::to_string(a + 1) + " would revisit '" + fine.vertex_ids[m.to] + "'");
    if (front) s.insert(s.begin(), m.to);
    else s.push_back(m.to);
  }
  *it = m.to;
  return cfg;
}

void check_string_superscript(const SimpleBraid& g) {
  const int i = g.index();
  if (i < 1) throw Error(ErrorKind::PatternMismatch, "not a simple braid");
  for (int x : g.seq)
    if (x != 1 && x != 2) throw Error(ErrorKind::PatternMismatch, format_generator(g) + ": labels must be 1 or 2");
  if (g.seq[i - 1] == g.seq[i])
    throw Error(ErrorKind::PatternMismatch, format_generator(g) + ": exchanged anyons need different branches");
  for (int k = 1; k + 1 < i; k += 2)
    if (g.seq[k - 1] != g.seq[k])
      throw Error(ErrorKind::PatternMismatch,
                  format_generator(g) + ": paired anyons " + std::to_string(k) + "," + std::to_string(k + 1) +
                      " must park in one branch");
}

MoveSequence expand_simple_braid(const Choreographer& c, const SimpleBraid& g) {
  check_string_superscript(g);
  return c.simple_braid(g);
}

MoveSequence expand_word(const Choreographer& c, const Word& w) {
  MoveSequence out;
  for (const Letter& l : w) {
    if (auto sb = std::get_if<SimpleBraid>(&l.gen)) check_string_superscript(*sb);
    auto m = c.letter(l);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

namespace {

std::set<std::pair<int, int>> touching(const StringConfiguration& c, std::vector<int>& owner) {
  std::set<std::pair<int, int>> out;
  for (int k = 0; k < static_cast<int>(c.strings.size()); ++k)
    for (VId v : c.strings[k]) {
      int o = owner[v];
      if (o >= 0 && o != k) out.insert({std::min(o, k), std::max(o, k)});
      owner[v] = k;
    }
  for (const auto& s : c.strings)
    for (VId v : s) owner[v] = -1;
  return out;
}

void write_frame(std::ostream& os, const Network& fine, const StringConfiguration& c, int anyon, const FineMove& m,
                 int crossings) {
  nlohmann::ordered_json f;
  f["anyon"] = anyon;
  f["edge"] = fine.edges[static_cast<size_t>([&] {
                for (EdgeEnd x : fine.rotation[m.from])
                  if (fine.across(x) == m.to) return x.edge;
                return 0;
              }())].id;
  f["from"] = fine.vertex_ids[m.from];
  f["to"] = fine.vertex_ids[m.to];
  f["positions"] = nlohmann::ordered_json::array();
  for (VId v : c.position) f["positions"].push_back(fine.vertex_ids[v]);
  f["strings"] = nlohmann::ordered_json::array();
  for (const auto& s : c.strings) {
    auto arr = nlohmann::ordered_json::array();
    for (VId v : s) arr.push_back(fine.vertex_ids[v]);
    f["strings"].push_back(arr);
  }
  f["crossings_so_far"] = crossings;
  os << f.dump() << '\n';
}

}  // namespace

RunResult run_sequence(const Network& fine, const StringConfiguration& start, const MoveSequence& seq,
                       std::ostream* trace) {
  RunResult r;
  r.final = start;
  std::vector<int> owner(static_cast<size_t>(fine.num_vertices()), -1);
  auto before = touching(start, owner);
  for (const FineMove& m : seq) {
    int anyon = 0;
    for (size_t k = 0; k < r.final.position.size(); ++k)
      if (r.final.position[k] == m.from) anyon = static_cast<int>(k) + 1;
    try {
      r.final = apply_move(fine, r.final, m);
    } catch (const Error& e) {
      r.ok = false;
      r.self_intersection = e.kind() == ErrorKind::SelfIntersection;
      r.diagnostics = "move " + std::to_string(r.moves_done + 1) + ": " + e.what();
      break;
    }
    ++r.moves_done;
    auto now = touching(r.final, owner);
    for (const auto& p : now)
      if (!before.count(p)) ++r.crossings;
    before = std::move(now);
    if (trace) write_frame(*trace, fine, r.final, anyon, m, r.crossings);
  }
  for (VId home : start.position) {
    auto it = std::find(r.final.position.begin(), r.final.position.end(), home);
    r.permutation.push_back(it == r.final.position.end() ? 0 : static_cast<int>(it - r.final.position.begin()) + 1);
  }
  return r;
}

const char* to_string(H1Agreement h) {
  switch (h) {
    case H1Agreement::Exact: return "exact";
    case H1Agreement::ModOneParticle: return "mod-one-particle";
    case H1Agreement::Different: return "different";
    case H1Agreement::NotClosed: return "not-closed";
  }
  return "different";
}

namespace {

H1Agreement h1_of(Oracle& o, const MoveSequence& loop) {
  LoopClass lc = o.classify(loop);
  if (!lc.closed) return H1Agreement::NotClosed;
  if (lc.null_homologous) return H1Agreement::Exact;
  if (lc.null_mod_one_particle) return H1Agreement::ModOneParticle;
  return H1Agreement::Different;
}

MoveSequence cat(MoveSequence a, const MoveSequence& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

StringRelationReport verify_string_relation(const Network& net, int n, const Word& lhs, const Word& rhs,
                                            bool allow_quotient) {
  Oracle o(net, n);
  const Choreographer& c = o.choreo();
  const Network& fine = o.sub().fine;
  StringRelationReport r;
  r.lhs = format_word(lhs);
  r.rhs = format_word(rhs);
  r.quotient_allowed = allow_quotient;
  MoveSequence lm = expand_word(c, lhs), rm = expand_word(c, rhs);
  StringConfiguration start = initial_configuration(c);
  r.lhs_run = run_sequence(fine, start, lm);
  r.rhs_run = run_sequence(fine, start, rm);
  const bool ok = r.lhs_run.ok && r.rhs_run.ok;
  r.configurations_agree = ok && same_configuration(r.lhs_run.final, r.rhs_run.final);
  r.permutations_agree = ok && r.lhs_run.permutation == r.rhs_run.permutation;
  r.h1 = h1_of(o, cat(lm, reverse_moves(rm)));
  r.pass = r.configurations_agree && r.permutations_agree &&
           (r.h1 == H1Agreement::Exact || (allow_quotient && r.h1 == H1Agreement::ModOneParticle));
  return r;
}

namespace {

struct ThetaGeometry {
  VId v = -1, w = -1;
  std::vector<VId> T, M, B, park, tp;
};

// Drops every closed detour so that no vertex repeats.
std::vector<VId> without_loops(const std::vector<VId>& p) {
  std::vector<VId> out;
  for (VId x : p) {
    auto it = std::find(out.begin(), out.end(), x);
    if (it != out.end()) out.erase(it + 1, out.end());
    else out.push_back(x);
  }
  return out;
}

void hop(MoveSequence& s, const std::vector<VId>& path) {
  for (size_t k = 0; k + 1 < path.size(); ++k) s.push_back({path[k], path[k + 1]});
}

std::vector<VId> span(const std::vector<VId>& p, size_t a, size_t b) {  // [a, b)
  return {p.begin() + static_cast<long>(a), p.begin() + static_cast<long>(b)};
}

std::vector<VId> rev(std::vector<VId> p) {
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<VId> join(std::vector<VId> a, const std::vector<VId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::optional<ThetaGeometry> theta_geometry(const Network& net, const Choreographer& c, int spectators) {
  const SpanningTree& tree = c.tree();
  const Subdivision& sub = c.sub();
  FaceStructure fs = trace_faces(net);
  std::vector<VId> ess = essential_vertices(net);
  std::stable_sort(ess.begin(), ess.end(), [&](VId a, VId b) {
    return tree.path_vertices(a).size() < tree.path_vertices(b).size();
  });
  for (size_t x = 0; x < ess.size(); ++x)
    for (size_t y = x + 1; y < ess.size(); ++y) {
      auto th = find_theta(net, ess[x], ess[y]);
      if (!th) continue;
      ThetaGeometry g;
      g.v = ess[x];
      g.w = ess[y];
      int mid = -1, best = 1 << 30;
      std::array<std::vector<VId>, 3> arc;
      for (int k = 0; k < 3; ++k) {
        arc[k] = sub.walk(th->paths[k]);
        int outer = 0;
        for (const Step& s : th->paths[k])
          for (int side : {0, 1}) outer += fs.face_of[s.via.edge][side] == fs.outer;
        if (outer < best) best = outer, mid = k;
      }
      const int d = net.degree(g.v);
      auto pos = [&](int k) { return net.position(th->paths[k].front().via); };
      int top = -1, bot = -1, gap = d + 1;
      for (int k = 0; k < 3; ++k) {
        if (k == mid) continue;
        int gk = ((pos(k) - pos(mid)) % d + d) % d;
        if (gk < gap) {
          if (top >= 0) bot = top;
          gap = gk, top = k;
        } else {
          bot = k;
        }
      }
      g.T = arc[top];
      g.M = arc[mid];
      g.B = arc[bot];
      if (g.T.size() < 3 || g.M.size() < 3 || g.B.size() < 3) continue;
      g.tp = c.tree_path(g.v);
      if (spectators > 0) {
        std::set<VId> used(g.T.begin(), g.T.end());
        used.insert(g.M.begin(), g.M.end());
        used.insert(g.B.begin(), g.B.end());
        bool clash = false;
        for (size_t k = 0; k + 1 < g.tp.size(); ++k) clash |= used.count(g.tp[k]) > 0;
        if (clash) continue;
        std::set<EId> arc_edges;
        for (const auto& p : th->paths)
          for (const Step& s : p) arc_edges.insert(s.via.edge);
        for (EdgeEnd e : net.rotation[g.w]) {
          if (arc_edges.count(e.edge)) continue;
          auto sl = sub.slots(net, e);
          if (static_cast<int>(sl.size()) - 1 - spectators < 0) continue;
          bool free = true;
          for (VId s : sl) free &= !used.count(s) && std::find(g.tp.begin(), g.tp.end(), s) == g.tp.end();
          if (free) {
            g.park = sl;
            break;
          }
        }
        if (g.park.empty()) continue;
      }
      return g;
    }
  return std::nullopt;
}

ThetaReport run_theta(Oracle& o, const ThetaGeometry& geo, int n, bool swapped, bool omit_sigma_r) {
  const Choreographer& c = o.choreo();
  const Network& fine = o.sub().fine;
  const int j = n - 1;
  ThetaReport r;
  r.v = o.choreo().coarse().vertex_ids[geo.v];
  r.w = o.choreo().coarse().vertex_ids[geo.w];
  r.n = n;
  r.j = j;
  r.swapped = swapped;
  const auto& T = swapped ? geo.B : geo.T;
  const auto& B = swapped ? geo.T : geo.B;
  const auto& M = geo.M;
  const auto& tp = geo.tp;
  const size_t L = tp.size() - 1;
  auto from_home = [&](int anyon) { return span(tp, static_cast<size_t>(n - anyon + 1), L + 1); };

  MoveSequence beta, sl, sr, gu, gd;
  const long m = static_cast<long>(geo.park.size()) - 1;
  for (int k = 1; k < j; ++k)
    hop(beta, without_loops(join(join(from_home(k), span(M, 1, M.size())),
                                 span(geo.park, 0, static_cast<size_t>(m - k) + 1))));
  hop(beta, without_loops(join(from_home(j), {T[1]})));
  hop(beta, without_loops(join(from_home(j + 1), {B[1], B[2]})));

  const size_t t = T.size() - 1, b = B.size() - 1, mm = M.size() - 1;
  hop(sl, {T[1], T[0], M[1]});
  hop(sl, {B[2], B[1], B[0], T[1]});
  hop(sl, {M[1], M[0], B[1], B[2]});
  hop(sr, join(span(B, 2, b + 1), {M[mm - 1]}));
  hop(sr, join(span(T, 1, t + 1), rev(span(B, 2, b))));
  hop(sr, join({M[mm - 1], M[mm]}, rev(span(T, 1, t))));
  hop(gu, join(join({T[1]}, M), rev(span(T, 1, t))));
  hop(gd, join(join({B[2], B[1]}, M), rev(span(B, 2, b))));

  MoveSequence right = cat(gd, gu);
  if (!omit_sigma_r) right = cat(right, sr);
  MoveSequence all = cat(cat(cat(cat(beta, sl), gu), gd), reverse_moves(right));
  all = cat(all, reverse_moves(beta));

  StringConfiguration start = initial_configuration(c);
  r.run = run_sequence(fine, start, all);
  r.self_intersections = r.run.self_intersection ? 1 : 0;
  r.configuration_preserved = r.run.ok && same_configuration(r.run.final, start);
  r.identity = r.run.ok;
  for (size_t k = 0; k < r.run.permutation.size(); ++k) r.identity &= r.run.permutation[k] == static_cast<int>(k) + 1;
  try {
    r.h1 = h1_of(o, all);
  } catch (const Error& e) {
    r.h1 = H1Agreement::NotClosed;
    r.note = e.what();
  }
  r.pass = r.run.ok && r.self_intersections == 0 && r.configuration_preserved && r.identity &&
           r.h1 == H1Agreement::Exact;
  return r;
}

}  // namespace

ThetaReport theta_composite(const Network& net, const ThetaOptions& opt) {
  if (opt.n < 2 || opt.n % 2 != 0) throw Error(ErrorKind::OutOfRange, "theta composite needs an even number of anyons");
  Oracle o(net, opt.n);
  auto geo = theta_geometry(net, o.choreo(), opt.n - 2);
  if (!geo) throw Error(ErrorKind::PatternMismatch, "no theta subgraph with room to park the spectators");
  ThetaReport first = run_theta(o, *geo, opt.n, false, opt.omit_sigma_r);
  if (first.pass) return first;
  ThetaReport second = run_theta(o, *geo, opt.n, true, opt.omit_sigma_r);
  if (second.pass) return second;
  first.note = "neither arc labelling passes; swapped: " + std::string(second.run.ok ? "legal" : second.run.diagnostics) +
               ", h1 " + to_string(second.h1);
  return first;
}

namespace {

nlohmann::ordered_json run_json(const RunResult& r) {
  nlohmann::ordered_json j;
  j["ok"] = r.ok;
  j["moves"] = r.moves_done;
  j["crossings"] = r.crossings;
  j["self_intersection"] = r.self_intersection;
  j["permutation"] = r.permutation;
  if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
  return j;
}

nlohmann::ordered_json relation_json(const StringRelationReport& r) {
  nlohmann::ordered_json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["lhs_run"] = run_json(r.lhs_run);
  j["rhs_run"] = run_json(r.rhs_run);
  j["configurations_agree"] = r.configurations_agree;
  j["permutations_agree"] = r.permutations_agree;
  j["h1"] = to_string(r.h1);
  j["quotient_allowed"] = r.quotient_allowed;
  j["pass"] = r.pass;
  return j;
}

nlohmann::ordered_json theta_json(const ThetaReport& r) {
  nlohmann::ordered_json j;
  j["v"] = r.v;
  j["w"] = r.w;
  j["n"] = r.n;
  j["j"] = r.j;
  j["swapped"] = r.swapped;
  j["run"] = run_json(r.run);
  j["configuration_preserved"] = r.configuration_preserved;
  j["identity"] = r.identity;
  j["h1"] = to_string(r.h1);
  j["self_intersections"] = r.self_intersections;
  if (!r.note.empty()) j["note"] = r.note;
  j["pass"] = r.pass;
  return j;
}

}  // namespace

std::string run_result_to_json(const RunResult& r) { return run_json(r).dump(2); }
std::string string_relation_to_json(const StringRelationReport& r) { return relation_json(r).dump(2); }
std::string theta_report_to_json(const ThetaReport& r) { return theta_json(r).dump(2); }

const std::vector<std::string>& relation_names() {
  static const std::vector<std::string> names{"simple-odd", "simple-even", "commute",     "lollipop1",
                                              "lollipop2",  "almost-braid", "theta"};
  return names;
}

namespace {

// (p, .., p, x, y) with i+1 entries.
Letter braid(const std::string& v, int i, int parked, int x, int y, int exp = 1) {
  std::vector<int> seq(static_cast<size_t>(i - 1), parked);
  seq.push_back(x);
  seq.push_back(y);
  return simple(v, std::move(seq), exp);
}

// sigma_{n-1}^{(p..p,c)} ... sigma_1^{(p,c)}
Word delta_n(const std::string& v, int n, int c, int p) {
  Word w;
  for (int i = n - 1; i >= 1; --i) w.push_back(braid(v, i, p, p, c));
  return w;
}

NamedRelation simple_case(const Network& net, const Analysis& a, const std::string& name, int n, std::ostream* trace) {
  if (!a.v0) throw Error(ErrorKind::UnsupportedRegime, "network has no junction");
  const bool odd = name == "simple-odd";
  if (n <= 0) n = odd ? 2 : 3;
  const int i = odd ? 1 : 2;
  if (n < i + 1) throw Error(ErrorKind::OutOfRange, "too few anyons for " + name);
  Letter g = odd ? simple(a.id(*a.v0), {2, 1}) : simple(a.id(*a.v0), {1, 2, 1});
  Choreographer c(net, n);
  StringConfiguration start = initial_configuration(c);
  RunResult r = run_sequence(c.sub().fine, start, expand_simple_braid(c, std::get<SimpleBraid>(g.gen)), trace);
  std::vector<int> expect;
  for (int k = 1; k <= start.anyons(); ++k) expect.push_back(k);
  std::swap(expect[static_cast<size_t>(i - 1)], expect[static_cast<size_t>(i)]);
  const bool strings_kept = r.ok && string_set(r.final) == string_set(start);
  NamedRelation out;
  out.name = name;
  out.n = n;
  out.pass = r.ok && !r.self_intersection && r.permutation == expect && (odd ? r.crossings == 0 : r.crossings >= 1);
  nlohmann::ordered_json j;
  j["relation"] = name;
  j["n"] = n;
  j["word"] = format_word({g});
  j["run"] = run_json(r);
  j["expected_permutation"] = expect;
  j["strings_preserved"] = strings_kept;
  j["pass"] = out.pass;
  out.json = j.dump(2);
  out.summary = name + ": " + std::to_string(r.crossings) + " crossing(s), " + (out.pass ? "pass" : "FAIL");
  return out;
}

}  // namespace

NamedRelation run_named_relation(const Network& net, const std::string& name, int n, std::ostream* trace) {
  if (std::find(relation_names().begin(), relation_names().end(), name) == relation_names().end())
    throw Error(ErrorKind::Syntax, "unknown relation '" + name + "'");
  Analysis a = analyze(net);
  if (name == "simple-odd" || name == "simple-even") return simple_case(net, a, name, n, trace);

  NamedRelation out;
  out.name = name;
  nlohmann::ordered_json j;
  j["relation"] = name;

  if (name == "theta") {
    out.n = n > 0 ? n : 2;
    ThetaReport r = theta_composite(net, {out.n, false});
    j["n"] = out.n;
    j["report"] = theta_json(r);
    out.pass = r.pass;
    out.json = j.dump(2);
    out.summary = "theta at " + r.v + "/" + r.w + ", j=" + std::to_string(r.j) + ": h1 " + to_string(r.h1) + ", " +
                  (r.pass ? "pass" : "FAIL");
    return out;
  }

  std::vector<std::pair<Word, Word>> cases;
  bool quotient = false;
  if (name == "commute") {
    if (!a.v0) throw Error(ErrorKind::UnsupportedRegime, "network has no junction");
    out.n = n > 0 ? n : 4;
    if (out.n < 4) throw Error(ErrorKind::OutOfRange, "commute needs at least 4 anyons");
    const std::string v = a.id(*a.v0);
    // Truncated generators: the pseudo-commutation rewrite would need sigma_1^{(a,a)},
    // so the check is plain commutation of disjoint exchanges.
    for (int parked : {2, 1}) {
      Word lhs{simple(v, {2, 1}), braid(v, 3, parked, 2, 1)};
      cases.emplace_back(lhs, Word{lhs[1], lhs[0]});
    }
  } else {
    if (!a.canon) throw Error(ErrorKind::MissingLollipop, "network has no lollipop with a parking branch");
    const std::string v = a.id(a.canon->lollipop.v);
    const int c = a.canon->lollipop.branch, p = a.canon->park;
    const std::string d = lollipop_id(v, c);
    if (name == "lollipop1") {
      out.n = n > 0 ? n : 4;
      cases.emplace_back(Word{one_particle(lollipop_loop_id(v, c, p)), total(d, -1)}, delta_n(v, out.n, c, p));
    } else if (name == "lollipop2") {
      out.n = n > 0 ? n : 4;
      for (int i = 2; i < out.n; ++i) {
        Word rhs = concat(concat(power({total(d)}, i - 1), {simple(v, {p, c})}), power({total(d, -1)}, i - 1));
        cases.emplace_back(Word{braid(v, i, c, p, c)}, rhs);
      }
    } else {  // almost-braid
      out.n = n > 0 ? n : 3;
      quotient = true;
      Word D = delta_n(v, out.n, c, p);
      cases.emplace_back(Word{braid(v, 2, c, p, c)}, concat(concat(inverse(D), {simple(v, {p, c})}), D));
    }
  }
  j["n"] = out.n;
  j["cases"] = nlohmann::ordered_json::array();
  out.pass = !cases.empty();
  int crossings = 0;
  for (const auto& [lhs, rhs] : cases) {
    StringRelationReport r = verify_string_relation(net, out.n, lhs, rhs, quotient);
    if (trace) {
      Choreographer ch(net, out.n);
      run_sequence(ch.sub().fine, initial_configuration(ch), expand_word(ch, lhs), trace);
    }
    out.pass &= r.pass;
    crossings = std::max(crossings, r.lhs_run.crossings);
    j["cases"].push_back(relation_json(r));
  }
  j["lhs_crossings"] = crossings;
  j["pass"] = out.pass;
  out.json = j.dump(2);
  out.summary += name + ": " + std::to_string(cases.size()) + " case(s), " + (out.pass ? "pass" : "FAIL");
  return out;
}

}  // namespace wb
