#include <algorithm>

#include "wirebraid/words.hpp"

namespace wb {

namespace {

[[noreturn]] void mismatch(const std::string& why) { throw Error(ErrorKind::PatternMismatch, why); }

const SimpleBraid& simple_at(const Word& w, size_t pos, int exp = 1) {
  if (pos >= w.size()) mismatch("position " + std::to_string(pos) + " past end of word");
  auto sb = std::get_if<SimpleBraid>(&w[pos].gen);
  if (!sb) mismatch("letter " + std::to_string(pos) + " is not a simple braid");
  if (w[pos].exp != exp) mismatch("letter " + std::to_string(pos) + " has the wrong exponent");
  return *sb;
}

std::vector<int> prefix(const std::vector<int>& a, size_t k) { return {a.begin(), a.begin() + static_cast<long>(k)}; }

Word splice(const Word& w, size_t pos, size_t len, const Word& repl) {
  Word out(w.begin(), w.begin() + static_cast<long>(pos));
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + static_cast<long>(pos + len), w.end());
  return out;
}

// a_1..a_{j+1} with a_i, a_{i+1} swapped (1-based i).
std::vector<int> swap_at(std::vector<int> a, int i) {
  std::swap(a[i - 1], a[i]);
  return a;
}

}  // namespace

Word apply_pseudo_commutative(const Word& w, size_t pos, Direction dir) {
  const SimpleBraid& x = simple_at(w, pos);
  const SimpleBraid& y = simple_at(w, pos + 1);
  if (x.vertex != y.vertex) mismatch("letters sit at different vertices");
  if (dir == Direction::Forward) {
    // sigma_j^{a} sigma_i^{a_1..a_{i+1}}
    int j = x.index(), i = y.index();
    if (j - i < 2) mismatch("needs j - i >= 2");
    if (prefix(x.seq, i + 1) != y.seq) mismatch("superscripts do not share the prefix");
    Word repl{w[pos + 1], simple(x.vertex, swap_at(x.seq, i))};
    return splice(w, pos, 2, repl);
  }
  // sigma_i^{b} sigma_j^{c} with c = b_1..b_{i-1} b_{i+1} b_i c_{i+2}..
  int i = x.index(), j = y.index();
  if (j - i < 2) mismatch("needs j - i >= 2");
  if (prefix(y.seq, i + 1) != swap_at(x.seq, i)) mismatch("superscripts do not match the right-hand side");
  Word repl{simple(y.vertex, swap_at(y.seq, i)), w[pos]};
  return splice(w, pos, 2, repl);
}

Word apply_pseudo_braid(const Network& net, const Word& w, size_t pos, Direction dir) {
  const SimpleBraid& x = simple_at(w, pos);
  const SimpleBraid& y = simple_at(w, pos + 1);
  const SimpleBraid& z = simple_at(w, pos + 2);
  if (x.vertex != y.vertex || y.vertex != z.vertex) mismatch("letters sit at different vertices");
  auto v = net.find_vertex(x.vertex);
  if (!v) mismatch("unknown vertex '" + x.vertex + "'");
  if (net.degree(*v) < 4) throw Error(ErrorKind::DegreeTooSmall, "pseudo-braid relation needs degree >= 4");
  int i = y.index();
  if (i < 1) mismatch("bad middle index");
  if (dir == Direction::Forward) {
    // sigma_{i+1}^{P a b c} sigma_i^{P a c} sigma_{i+1}^{P c a b}
    if (x.index() != i + 1 || z.index() != i + 1) mismatch("indices must read i+1, i, i+1");
    std::vector<int> P = prefix(x.seq, i - 1);
    int a = x.seq[i - 1], b = x.seq[i], c = x.seq[i + 1];
    auto cat = [&](std::initializer_list<int> tail) {
      std::vector<int> s = P;
      s.insert(s.end(), tail);
      return s;
    };
    if (y.seq != cat({a, c}) || z.seq != cat({c, a, b})) mismatch("superscripts do not match the left-hand side");
    Word repl{simple(x.vertex, cat({a, b})), simple(x.vertex, cat({b, a, c})), simple(x.vertex, cat({b, c}))};
    return splice(w, pos, 3, repl);
  }
  // sigma_i^{P a b} sigma_{i+1}^{P b a c} sigma_i^{P b c}
  i = x.index();
  if (y.index() != i + 1 || z.index() != i) mismatch("indices must read i, i+1, i");
  std::vector<int> P = prefix(x.seq, i - 1);
  int a = x.seq[i - 1], b = x.seq[i], c = y.seq[i + 1];
  auto cat = [&](std::initializer_list<int> tail) {
    std::vector<int> s = P;
    s.insert(s.end(), tail);
    return s;
  };
  if (y.seq != cat({b, a, c}) || z.seq != cat({b, c})) mismatch("superscripts do not match the right-hand side");
  Word repl{simple(x.vertex, cat({a, b, c})), simple(x.vertex, cat({a, c})), simple(x.vertex, cat({c, a, b}))};
  return splice(w, pos, 3, repl);
}

namespace {

// sigma_{n-1}^{(p,..,p,c)} ... sigma_1^{(p,c)} d
Word loop_product(const std::string& v, int c, int p, int n, const std::string& delta) {
  Word out;
  for (int i = n - 1; i >= 1; --i) {
    std::vector<int> seq(static_cast<size_t>(i), p);
    seq.push_back(c);
    out.push_back(simple(v, seq));
  }
  out.push_back(total(delta));
  return out;
}

}  // namespace

Word apply_lollipop(const Network& net, const SpanningTree& tree, const Word& w, size_t pos, LollipopRule rule,
                    const LollipopSubgraph& lollipop, Direction dir, int n) {
  const std::string v = net.vertex_ids[lollipop.v];
  const int c = lollipop.branch;
  const std::string did = lollipop.id(net);
  if (pos >= w.size()) mismatch("position past end of word");

  switch (rule) {
    case LollipopRule::Conjugate: {
      if (dir == Direction::Forward) {
        // sigma_i^{v;(c,..,c,p,c)} -> d^{i-1} sigma_1^{v;(p,c)} d^{1-i}
        const Letter& l = w[pos];
        auto sb = std::get_if<SimpleBraid>(&l.gen);
        if (!sb || sb->vertex != v) mismatch("expected a simple braid at the lollipop vertex");
        int i = sb->index();
        for (int k = 0; k <= i; ++k)
          if ((k == i - 1) == (sb->seq[k] == c)) mismatch("superscript is not (c,..,c,p,c)");
        if (sb->seq[i] != c) mismatch("superscript is not (c,..,c,p,c)");
        Word mid{{SimpleBraid{v, {sb->seq[i - 1], c}}, l.exp}};
        Word repl = concat(concat(power({total(did)}, i - 1), mid), power({total(did)}, 1 - i));
        return splice(w, pos, 1, repl);
      }
      // match d^{k} sigma_1^{(p,c)} d^{-k}
      size_t k = 0;
      while (pos + k < w.size() && w[pos + k] == total(did)) ++k;
      if (pos + 2 * k + 1 > w.size()) mismatch("word too short for the lollipop pattern");
      const Letter& mid = w[pos + k];
      auto sb = std::get_if<SimpleBraid>(&mid.gen);
      if (!sb || sb->vertex != v || sb->index() != 1 || sb->seq[1] != c) mismatch("expected sigma_1^{(p,c)}");
      for (size_t t = 0; t < k; ++t)
        if (!(w[pos + k + 1 + t] == total(did, -1))) mismatch("missing trailing inverse total braids");
      std::vector<int> seq(k, c);
      seq.push_back(sb->seq[0]);
      seq.push_back(c);
      return splice(w, pos, 2 * k + 1, {{SimpleBraid{v, seq}, mid.exp}});
    }
    case LollipopRule::Loop: {
      if (n < 2) mismatch("the loop rule needs n >= 2");
      if (dir == Direction::Forward) {
        auto op = std::get_if<OneParticle>(&w[pos].gen);
        if (!op) mismatch("expected a one-particle loop");
        auto ref = parse_lollipop_id(op->cycle);
        if (!ref || ref->vertex != v || ref->branch != c || ref->park == 0)
          mismatch("loop id does not belong to this lollipop");
        Word rhs = loop_product(v, c, ref->park, n, did);
        return splice(w, pos, 1, w[pos].exp > 0 ? rhs : inverse(rhs));
      }
      if (pos + static_cast<size_t>(n) > w.size()) mismatch("word too short for the loop rule");
      auto first = std::get_if<SimpleBraid>(&w[pos].gen);
      if (!first || first->seq.empty()) mismatch("expected sigma_{n-1}");
      int p = first->seq[0];
      Word rhs = loop_product(v, c, p, n, did);
      if (!std::equal(rhs.begin(), rhs.end(), w.begin() + static_cast<long>(pos)))
        mismatch("letters do not spell the loop product");
      return splice(w, pos, rhs.size(), {one_particle(lollipop_loop_id(v, c, p))});
    }
    case LollipopRule::Shift: {
      if (dir == Direction::Forward) {
        const Letter& l = w[pos];
        auto sb = std::get_if<SimpleBraid>(&l.gen);
        if (!sb || sb->vertex != v) mismatch("expected a simple braid at the lollipop vertex");
        if (sb->index() < 2) mismatch("the shift rule needs i >= 2");
        if (sb->seq[0] != c) mismatch("lollipop branch differs from a_1");
        if (!find_lollipop(net, tree, lollipop.v, c)) throw Error(ErrorKind::MissingLollipop, did);
        Word repl{total(did), {SimpleBraid{v, {sb->seq.begin() + 1, sb->seq.end()}}, l.exp}, total(did, -1)};
        return splice(w, pos, 1, repl);
      }
      if (pos + 3 > w.size()) mismatch("word too short for the shift rule");
      if (!(w[pos] == total(did)) || !(w[pos + 2] == total(did, -1))) mismatch("expected d sigma d^-1");
      auto sb = std::get_if<SimpleBraid>(&w[pos + 1].gen);
      if (!sb || sb->vertex != v) mismatch("expected a simple braid at the lollipop vertex");
      std::vector<int> seq{c};
      seq.insert(seq.end(), sb->seq.begin(), sb->seq.end());
      return splice(w, pos, 3, {{SimpleBraid{v, seq}, w[pos + 1].exp}});
    }
  }
  mismatch("unknown rule");
}

std::pair<Word, Word> theta_relation(ThetaRule rule, const ThetaRef& th, const Letter& delta) {
  Letter g = one_particle(theta_loop_id(th.v, th.w));
  Letter gp = named(MoveTag::GammaPrime);
  if (rule == ThetaRule::Delta) return {{delta, g}, {gp, delta}};
  return {{simple(th.w, {2, 1}), g}, {gp, simple(th.v, {2, 1})}};
}

Word apply_theta(const Word& w, size_t pos, ThetaRule rule, const ThetaRef& theta, Direction dir) {
  if (pos + 2 > w.size()) mismatch("word too short for the theta relation");
  Letter delta = total("");
  if (rule == ThetaRule::Delta) {
    size_t at = dir == Direction::Forward ? pos : pos + 1;
    if (!std::holds_alternative<TotalBraid>(w[at].gen) || w[at].exp != 1) mismatch("expected a total braid");
    delta = w[at];
  }
  auto [lhs, rhs] = theta_relation(rule, theta, delta);
  const Word& from = dir == Direction::Forward ? lhs : rhs;
  const Word& to = dir == Direction::Forward ? rhs : lhs;
  if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<long>(pos)))
    mismatch("letters do not match the theta relation");
  return splice(w, pos, from.size(), to);
}

}  // namespace wb
