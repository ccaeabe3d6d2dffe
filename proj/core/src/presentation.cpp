#include "wirebraid/presentation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "json.hpp"

#include "wirebraid/garside.hpp"

namespace wb {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::Distinct: return "distinct";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

Word orient(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (auto sb = std::get_if<SimpleBraid>(&l.gen)) {
      auto& s = sb->seq;
      if (s.size() >= 2 && s[s.size() - 2] < s.back()) {
        std::swap(s[s.size() - 2], s.back());
        l.exp = -l.exp;
      }
    }
    out.push_back(std::move(l));
  }
  return out;
}

namespace {

std::string cyclic_key(const Word& w) {
  Word r = cyclic_reduce(w);
  std::string best;
  for (const Word& x : {r, inverse(r)}) {
    for (size_t k = 0; k < std::max<size_t>(x.size(), 1); ++k) {
      Word rot(x.begin() + static_cast<long>(k), x.end());
      rot.insert(rot.end(), x.begin(), x.begin() + static_cast<long>(k));
      std::string s = format_word(rot);
      if (best.empty() || s < best) best = s;
    }
  }
  return best;
}

// All label sequences of length len over 1..d-1.
void sequences(int d, int len, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> s(static_cast<size_t>(len), 1);
  if (d < 2) return;
  while (true) {
    f(s);
    int k = len - 1;
    while (k >= 0 && s[k] == d - 1) s[k--] = 1;
    if (k < 0) return;
    ++s[k];
  }
}

void emit_junction(const Analysis& a, int n, Presentation& p) {
  VId v = a.essential.front();
  const std::string& vid = a.id(v);
  int d = a.net.degree(v);
  for (int i = 1; i < n; ++i)
    sequences(d, i + 1, [&](const std::vector<int>& s) {
      if (s[i - 1] > s[i]) p.generators.push_back(SimpleBraid{vid, s});
    });

  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      sequences(d, j + 1, [&](const std::vector<int>& s) {
        if (!(s[i - 1] > s[i] && s[j - 1] > s[j])) return;
        std::vector<int> pre(s.begin(), s.begin() + i + 1), sw = s;
        std::swap(sw[i - 1], sw[i]);
        Word r{simple(vid, s), simple(vid, pre), simple(vid, sw, -1), simple(vid, pre, -1)};
        p.relators.push_back(r);
        p.relator_kinds.push_back("commute-junction");
      });

  if (d < 4) return;
  std::set<std::string> seen;
  for (int i = 1; i + 1 < n; ++i)
    sequences(d, i - 1 + 3, [&](const std::vector<int>& s) {
      int x = s[i - 1], y = s[i], z = s[i + 1];
      if (x == y || y == z || x == z) return;
      std::vector<int> P(s.begin(), s.begin() + i - 1);
      auto cat = [&](std::initializer_list<int> t) {
        std::vector<int> q = P;
        q.insert(q.end(), t);
        return q;
      };
      Word lhs{simple(vid, cat({x, y, z})), simple(vid, cat({x, z})), simple(vid, cat({z, x, y}))};
      Word rhs{simple(vid, cat({x, y})), simple(vid, cat({y, x, z})), simple(vid, cat({y, z}))};
      Word r = free_reduce(orient(concat(lhs, inverse(rhs))));
      if (r.empty() || !seen.insert(cyclic_key(r)).second) return;
      p.relators.push_back(r);
      p.relator_kinds.push_back("braid-junction");
    });
}

Word conj(const Analysis& a, int k, const Word& x) {
  return free_reduce(concat(concat(power({a.delta()}, k), x), power({a.delta()}, -k)));
}

void emit_connected(const Analysis& a, int n, Presentation& p) {
  p.generators.push_back(TotalBraid{a.delta_id()});
  std::vector<SimpleBraid> symbols;
  for (VId u : a.essential) {
    int d = a.net.degree(u);
    for (int x = 2; x < d; ++x)
      for (int y = 1; y < x; ++y) {
        SimpleBraid s{a.id(u), {x, y}};
        p.generators.push_back(s);
        SimpleBraid c = a.canonical_symbol(u, x, y);
        if (std::find(symbols.begin(), symbols.end(), c) == symbols.end()) symbols.push_back(c);
        if (!(c == s)) {
          p.relators.push_back({{s, 1}, {c, -1}});
          p.relator_kinds.push_back("ident");
        }
      }
  }
  for (const SimpleBraid& sym : symbols) {
    auto s = [&](int k, int e = 1) { return conj(a, k - 1, {{sym, e}}); };
    for (int k = 1; k + 1 < n; ++k) {
      Word r = concat(concat(s(k), s(k + 1)), s(k));
      r = concat(concat(concat(r, s(k + 1, -1)), s(k, -1)), s(k + 1, -1));
      p.relators.push_back(free_reduce(r));
      p.relator_kinds.push_back("braid");
    }
    for (int k = 1; k < n; ++k)
      for (int l = k + 2; l < n; ++l) {
        Word r = concat(concat(concat(s(k), s(l)), s(k, -1)), s(l, -1));
        p.relators.push_back(free_reduce(r));
        p.relator_kinds.push_back("commute");
      }
  }
  const CanonicalLollipop& cl = *a.canon;
  SimpleBraid s1 = a.canonical_symbol(cl.lollipop.v, cl.hi(), cl.lo());
  Word r{a.delta(-1)};
  for (int k = 1; k < n; ++k) r = concat(r, conj(a, k - 1, {{s1, cl.eps}}));
  p.relators.push_back(free_reduce(r));
  p.relator_kinds.push_back("delta");
}

}  // namespace

Presentation emit_presentation(const Analysis& a, int n) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "need at least two anyons");
  Presentation p;
  p.regime = a.regime;
  p.n = n;
  switch (a.regime) {
    case Regime::Free: break;
    case Regime::Junction: emit_junction(a, n, p); break;
    case Regime::TwoConnected:
    case Regime::ThreeConnected: emit_connected(a, n, p); break;
    case Regime::Unsupported: throw Error(ErrorKind::UnsupportedRegime, a.regime_note);
  }
  return p;
}

std::string presentation_to_json(const Presentation& p) {
  nlohmann::json j;
  j["regime"] = to_string(p.regime);
  j["n"] = p.n;
  j["generators"] = nlohmann::json::array();
  for (const Generator& g : p.generators) j["generators"].push_back(format_generator(g));
  j["relators"] = nlohmann::json::array();
  for (size_t k = 0; k < p.relators.size(); ++k)
    j["relators"].push_back({{"kind", p.relator_kinds[k]}, {"word", format_word(p.relators[k])}});
  return j.dump(2);
}

namespace {

bool connected(Regime r) { return r == Regime::TwoConnected || r == Regime::ThreeConnected; }

VId vertex_of(const Analysis& a, const std::string& id) {
  auto v = a.net.find_vertex(id);
  if (!v || a.net.degree(*v) < 3) throw Error(ErrorKind::Syntax, "'" + id + "' is not a junction");
  return *v;
}

Word canonical_simple(const Analysis& a, const SimpleBraid& sb, int exp) {
  VId u = vertex_of(a, sb.vertex);
  if (sb.index() == 1) {
    int x = sb.seq[0], y = sb.seq[1];
    if (x < y) {
      std::swap(x, y);
      exp = -exp;
    }
    return {{a.canonical_symbol(u, x, y), exp}};
  }
  if (!find_lollipop(a.net, a.tree, u, sb.seq[0]))
    throw Error(ErrorKind::MissingLollipop, "no lollipop at " + sb.vertex + " through branch " + std::to_string(sb.seq[0]));
  SimpleBraid rest{sb.vertex, {sb.seq.begin() + 1, sb.seq.end()}};
  Word out{a.delta()};
  Word mid = canonical_simple(a, rest, exp);
  out.insert(out.end(), mid.begin(), mid.end());
  out.push_back(a.delta(-1));
  return out;
}

}  // namespace

Word canonicalize(const Analysis& a, const Word& w) {
  if (!connected(a.regime)) throw Error(ErrorKind::UnsupportedRegime, "canonical form needs a 2-connected network");
  Word out;
  for (const Letter& l : w) {
    if (is_single_particle(l.gen)) continue;
    if (auto sb = std::get_if<SimpleBraid>(&l.gen)) {
      Word x = canonical_simple(a, *sb, l.exp);
      out.insert(out.end(), x.begin(), x.end());
    } else if (auto tb = std::get_if<TotalBraid>(&l.gen)) {
      auto ref = parse_lollipop_id(tb->cycle);
      if (!ref || ref->park != 0) throw Error(ErrorKind::Syntax, "bad total braid id '" + tb->cycle + "'");
      if (!find_lollipop(a.net, a.tree, vertex_of(a, ref->vertex), ref->branch))
        throw Error(ErrorKind::MissingLollipop, "no lollipop '" + tb->cycle + "'");
      out.push_back(a.delta(l.exp));
    } else if (auto nm = std::get_if<NamedMove>(&l.gen)) {
      // gamma' = d g d^-1 is trivial once one-particle loops are dropped.
      if (nm->tag != MoveTag::GammaPrime)
        throw Error(ErrorKind::PatternMismatch, std::string("'") + to_string(nm->tag) + "' has no algebraic form");
    }
  }
  return free_reduce(out);
}

std::vector<int> planar_image(const Analysis& a, int n, const Word& canonical) {
  if (!a.canon) throw Error(ErrorKind::UnsupportedRegime, "no canonical lollipop");
  const int eps = a.canon->eps;
  std::vector<int> out;
  for (const Letter& l : canonical) {
    if (std::holds_alternative<TotalBraid>(l.gen)) {
      if (l.exp > 0)
        for (int i = 1; i < n; ++i) out.push_back(i);
      else
        for (int i = n - 1; i >= 1; --i) out.push_back(-i);
    } else if (std::holds_alternative<SimpleBraid>(l.gen)) {
      if (n >= 2) out.push_back(eps * l.exp);
    } else {
      throw Error(ErrorKind::PatternMismatch, "word is not canonical");
    }
  }
  return out;
}

namespace {

struct Move {
  std::string rule;
  Word word;
};

class Rewriter {
 public:
  Rewriter(const Analysis& a, int n, size_t max_len) : a_(a), n_(n), max_len_(max_len) {
    for (VId u : a.essential) {
      for (int c = 1; c < a.net.degree(u); ++c)
        if (auto L = find_lollipop(a.net, a.tree, u, c)) lollipops_.push_back(*L);
      for (VId w : a.essential)
        if (u < w)
          if (auto t = a.theta_for(u, w)) thetas_.push_back(*t);
    }
  }

  std::vector<Move> neighbours(const Word& w) const {
    std::vector<Move> out;
    auto add = [&](std::string rule, Word x) {
      x = free_reduce(x);
      if (x.size() <= max_len_) out.push_back({std::move(rule), std::move(x)});
    };
    for (size_t pos = 0; pos < w.size(); ++pos) {
      windowed(w, pos, 2, [&](const Word& x) { return apply_pseudo_commutative(x, 0, Direction::Forward); },
               "pseudo-commute", add);
      windowed(w, pos, 2, [&](const Word& x) { return apply_pseudo_commutative(x, 0, Direction::Backward); },
               "pseudo-commute^-1", add);
      windowed(w, pos, 3, [&](const Word& x) { return apply_pseudo_braid(a_.net, x, 0, Direction::Forward); },
               "pseudo-braid", add);
      windowed(w, pos, 3, [&](const Word& x) { return apply_pseudo_braid(a_.net, x, 0, Direction::Backward); },
               "pseudo-braid^-1", add);
      for (const LollipopSubgraph& L : lollipops_) {
        using R = LollipopRule;
        auto lol = [&](R rule, Direction dir, size_t len, const char* name) {
          windowed(w, pos, len,
                   [&](const Word& x) { return apply_lollipop(a_.net, a_.tree, x, 0, rule, L, dir, n_); }, name,
                   add);
        };
        lol(R::Shift, Direction::Forward, 1, "lollipop-shift");
        lol(R::Shift, Direction::Backward, 3, "lollipop-shift^-1");
        lol(R::Loop, Direction::Forward, 1, "lollipop-loop");
        lol(R::Loop, Direction::Backward, static_cast<size_t>(n_), "lollipop-loop^-1");
        lol(R::Conjugate, Direction::Forward, 1, "lollipop-conjugate");
        for (size_t k = 3; k <= std::min(w.size() - pos, static_cast<size_t>(2 * n_ + 1)); k += 2)
          lol(R::Conjugate, Direction::Backward, k, "lollipop-conjugate^-1");
      }
    }
    for (const ThetaRef& t : thetas_) {
      std::set<std::string> deltas{a_.delta_id()};
      for (const Letter& l : w)
        if (auto tb = std::get_if<TotalBraid>(&l.gen)) deltas.insert(tb->cycle);
      for (const std::string& d : deltas) {
        if (d.empty()) continue;
        auto [lhs, rhs] = theta_relation(ThetaRule::Delta, t, total(d));
        substitute(w, concat(lhs, inverse(rhs)), "theta-delta", add);
      }
      auto [lhs, rhs] = theta_relation(ThetaRule::Swap, t, total(""));
      substitute(w, concat(lhs, inverse(rhs)), "theta-swap", add);
    }
    if (std::any_of(w.begin(), w.end(), [](const Letter& l) { return is_single_particle(l.gen); }))
      add("quotient", quotient_one_particle(w));
    if (connected(a_.regime)) {
      Word x = w;
      bool changed = false;
      for (Letter& l : x)
        if (auto tb = std::get_if<TotalBraid>(&l.gen); tb && tb->cycle != a_.delta_id()) {
          tb->cycle = a_.delta_id();
          changed = true;
        }
      if (changed) add("delta-ident", x);
    }
    return out;
  }

 private:
  template <class F, class Add>
  void windowed(const Word& w, size_t pos, size_t len, F&& f, const char* rule, Add& add) const {
    if (len == 0 || pos + len > w.size()) return;
    Word sub(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos + len));
    auto emit = [&](const Word& repl) {
      Word x(w.begin(), w.begin() + static_cast<long>(pos));
      x.insert(x.end(), repl.begin(), repl.end());
      x.insert(x.end(), w.begin() + static_cast<long>(pos + len), w.end());
      add(rule, x);
    };
    try {
      emit(f(sub));
    } catch (const Error&) {
    }
    // The same rule read on the inverse window.
    try {
      emit(inverse(f(inverse(sub))));
    } catch (const Error&) {
    }
  }

  // Replaces a subword equal to a prefix of a cyclic rotation of r or r^-1.
  template <class Add>
  void substitute(const Word& w, const Word& r, const char* rule, Add& add) const {
    for (const Word& x : {r, inverse(r)}) {
      size_t L = x.size();
      for (size_t rot = 0; rot < L; ++rot) {
        Word c(x.begin() + static_cast<long>(rot), x.end());
        c.insert(c.end(), x.begin(), x.begin() + static_cast<long>(rot));
        for (size_t pos = 0; pos < w.size(); ++pos)
          for (size_t k = 1; k <= L && pos + k <= w.size(); ++k) {
            if (!(w[pos + k - 1] == c[k - 1])) break;
            Word repl = inverse(Word(c.begin() + static_cast<long>(k), c.end()));
            Word y(w.begin(), w.begin() + static_cast<long>(pos));
            y.insert(y.end(), repl.begin(), repl.end());
            y.insert(y.end(), w.begin() + static_cast<long>(pos + k), w.end());
            add(rule, y);
          }
      }
    }
  }

  const Analysis& a_;
  int n_;
  size_t max_len_;
  std::vector<LollipopSubgraph> lollipops_;
  std::vector<ThetaRef> thetas_;
};

struct Node {
  std::string parent;
  std::string rule;
  Word word;
  int depth = 0;
};

std::vector<ProofStep> chain_to(const std::unordered_map<std::string, Node>& m, const std::string& key) {
  std::vector<ProofStep> out;
  for (std::string k = key;;) {
    const Node& nd = m.at(k);
    if (nd.rule.empty()) break;
    out.push_back({nd.rule, nd.word});
    k = nd.parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

EquivResult rewrite_search(const Analysis& a, int n, const Word& u, const Word& v, const EquivOptions& opt) {
  EquivResult res;
  res.method = "rewrite-search";
  res.bound = opt.depth;
  size_t max_len = std::max(u.size(), v.size()) + static_cast<size_t>(n) + 6;
  Rewriter rw(a, n, max_len);

  std::unordered_map<std::string, Node> side[2];
  std::deque<std::string> frontier[2];
  const Word start[2] = {u, v};
  for (int s = 0; s < 2; ++s) {
    Word r = free_reduce(start[s]);
    std::string key = format_word(r);
    Node root{"", "", r, 0};
    if (!(r == start[s])) {
      // Record the initial reduction as a step of its own.
      side[s][key + "#raw"] = Node{"", "", start[s], 0};
      root = Node{key + "#raw", "free-reduce", r, 0};
    }
    side[s][key] = root;
    frontier[s].push_back(key);
  }
  auto finish = [&](const std::string& key) {
    res.verdict = Verdict::Equal;
    res.lhs_chain = chain_to(side[0], key);
    res.rhs_chain = chain_to(side[1], key);
    res.depth_used = side[0].at(key).depth + side[1].at(key).depth;
    return res;
  };
  if (side[1].count(frontier[0].front())) return finish(frontier[0].front());

  int level[2] = {0, 0};
  while (level[0] + level[1] < opt.depth && (!frontier[0].empty() || !frontier[1].empty())) {
    int s = frontier[0].empty() ? 1 : frontier[1].empty() ? 0 : (frontier[0].size() <= frontier[1].size() ? 0 : 1);
    std::deque<std::string> next;
    for (const std::string& key : frontier[s]) {
      Word w = side[s].at(key).word;
      for (Move& m : rw.neighbours(w)) {
        std::string k = format_word(m.word);
        if (side[s].count(k)) continue;
        side[s][k] = Node{key, m.rule, std::move(m.word), level[s] + 1};
        if (side[1 - s].count(k)) return finish(k);
        next.push_back(k);
        if (side[0].size() + side[1].size() > opt.node_limit) {
          res.depth_used = level[0] + level[1] + 1;
          return res;
        }
      }
    }
    frontier[s] = std::move(next);
    ++level[s];
  }
  res.depth_used = level[0] + level[1];
  return res;
}

EquivResult equivalent(const Analysis& a, int n, const Word& u, const Word& v, const EquivOptions& opt) {
  EquivResult res;
  res.bound = opt.depth;
  Word ru = free_reduce(u), rv = free_reduce(v);
  switch (a.regime) {
    case Regime::Free:
      if (!ru.empty() || !rv.empty()) throw Error(ErrorKind::Syntax, "the free regime has no generators");
      res.verdict = Verdict::Equal;
      res.method = "free-reduction";
      return res;
    case Regime::Junction: {
      Presentation p = emit_presentation(a, n);
      Word ou = free_reduce(orient(ru)), ov = free_reduce(orient(rv));
      if (ou == ov) {
        res.verdict = Verdict::Equal;
        res.method = "free-reduction";
        if (!(ru == rv)) {
          res.lhs_chain = {{"orient", ou}};
          res.rhs_chain = {{"orient", ov}};
        }
        return res;
      }
      if (p.relators.empty()) {
        res.verdict = Verdict::Distinct;
        res.method = "free-reduction";
        return res;
      }
      return rewrite_search(a, n, u, v, opt);
    }
    case Regime::ThreeConnected: {
      Word cu = canonicalize(a, u), cv = canonicalize(a, v);
      bool eq = garside::equal(n, planar_image(a, n, cu), planar_image(a, n, cv));
      if (!eq) {
        res.verdict = Verdict::Distinct;
        res.method = "garside";
        return res;
      }
      if (opt.proof) {
        EquivOptions quick = opt;
        quick.node_limit = std::min<size_t>(opt.node_limit, 20000);
        EquivResult proof = rewrite_search(a, n, u, v, quick);
        if (proof.verdict == Verdict::Equal) return proof;
      }
      res.verdict = Verdict::Equal;
      res.method = "garside";
      res.lhs_chain = {{"canonicalize", cu}};
      res.rhs_chain = {{"canonicalize", cv}};
      return res;
    }
    case Regime::TwoConnected: {
      Word cu = canonicalize(a, u), cv = canonicalize(a, v);
      if (cu == cv) {
        if (opt.proof) {
          EquivOptions quick = opt;
          quick.node_limit = std::min<size_t>(opt.node_limit, 20000);
          EquivResult proof = rewrite_search(a, n, u, v, quick);
          if (proof.verdict == Verdict::Equal) return proof;
        }
        res.verdict = Verdict::Equal;
        res.method = "canonical";
        res.lhs_chain = {{"canonicalize", cu}};
        res.rhs_chain = {{"canonicalize", cv}};
        return res;
      }
      return rewrite_search(a, n, u, v, opt);
    }
    case Regime::Unsupported: return rewrite_search(a, n, u, v, opt);
  }
  return res;
}

}  // namespace wb
