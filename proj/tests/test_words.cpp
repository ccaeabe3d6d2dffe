#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "wirebraid/words.hpp"

namespace {

using wbtest::fixture;

wb::ErrorKind parse_error(const std::string& text, const wb::Network* net = nullptr) {
  try {
    wb::parse_word(text, net);
  } catch (const wb::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return wb::ErrorKind::Budget;
}

// Random words over a few simple braids at a degree-3 junction.
wb::Word random_word(std::mt19937& rng, int len) {
  static const std::vector<wb::Letter> alphabet = {wb::simple("v", {2, 1}), wb::simple("v", {1, 2}),
                                                   wb::simple("v", {2, 2, 1}), wb::simple("v", {1, 2, 1}),
                                                   wb::total("v.1"), wb::one_particle("v.1.2")};
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  wb::Word w;
  for (int k = 0; k < len; ++k) {
    wb::Letter l = alphabet[pick(rng)];
    if (sign(rng)) l = l.inverse();
    w.push_back(l);
  }
  return w;
}

TEST(Words, ParseFormatRoundTrip) {
  for (const char* text : {"s[v;2,1]", "s[v;1,2,1]^-1 s[w;2,1]", "d[v.1] g[v.1.2]^-1", "m[gamma']", "g[v|w]",
                           "m[beta] m[sigma_L]^-1", ""}) {
    wb::Word w = wb::parse_word(text);
    EXPECT_EQ(wb::format_word(w), text);
    EXPECT_EQ(wb::parse_word(wb::format_word(w)), w);
  }
}

TEST(Words, RandomRoundTrip) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    wb::Word w = random_word(rng, t % 9);
    EXPECT_EQ(wb::parse_word(wb::format_word(w)), w);
  }
}

TEST(Words, ParseErrors) {
  EXPECT_EQ(parse_error("s[v;2,1"), wb::ErrorKind::Syntax);
  EXPECT_EQ(parse_error("x[v]"), wb::ErrorKind::Syntax);
  EXPECT_EQ(parse_error("s[v;2,2]"), wb::ErrorKind::RepeatedLabel);
  wb::Network tri = fixture("trijunction");
  EXPECT_EQ(parse_error("s[v;3,1]", &tri), wb::ErrorKind::LabelRange);
  EXPECT_NO_THROW(wb::parse_word("s[v;2,1]", &tri));
  EXPECT_THROW(wb::parse_word("s[a;2,1]", &tri), wb::Error);
}

TEST(Words, FreeReductionProperties) {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    wb::Word w = random_word(rng, t % 13);
    wb::Word r = wb::free_reduce(w);
    EXPECT_EQ(wb::free_reduce(r), r);
    for (size_t k = 0; k + 1 < r.size(); ++k) EXPECT_NE(r[k], r[k + 1].inverse());
    EXPECT_TRUE(wb::free_reduce(wb::concat(w, wb::inverse(w))).empty());
    EXPECT_EQ(wb::inverse(wb::inverse(w)), w);
    wb::Word c = wb::cyclic_reduce(w);
    EXPECT_EQ(wb::cyclic_reduce(c), c);
    if (!c.empty()) EXPECT_NE(c.front(), c.back().inverse());
  }
}

TEST(Words, PowerAndConcat) {
  wb::Word s = wb::parse_word("s[v;2,1]");
  EXPECT_EQ(wb::power(s, 3).size(), 3u);
  EXPECT_EQ(wb::power(s, -2), wb::parse_word("s[v;2,1]^-1 s[v;2,1]^-1"));
  EXPECT_TRUE(wb::power(s, 0).empty());
}

TEST(Words, OneParticleQuotient) {
  wb::Word w = wb::parse_word("g[v.1.2] s[v;2,1] m[gamma'] d[v.1] g[v|w]^-1");
  // gamma' stays: it is only removed through the theta relations.
  EXPECT_EQ(wb::format_word(wb::quotient_one_particle(w)), "s[v;2,1] m[gamma'] d[v.1]");
  EXPECT_TRUE(wb::is_single_particle(wb::one_particle("v.1.2").gen));
  EXPECT_FALSE(wb::is_single_particle(wb::total("v.1").gen));
}

TEST(Words, PseudoCommutationIsInvertible) {
  wb::Word w = wb::parse_word("s[v;2,1,2,1] s[v;2,1]");
  wb::Word f = wb::apply_pseudo_commutative(w, 0, wb::Direction::Forward);
  EXPECT_NE(f, w);
  EXPECT_EQ(wb::apply_pseudo_commutative(f, 0, wb::Direction::Backward), w);
  // Adjacent indices do not commute.
  EXPECT_THROW(wb::apply_pseudo_commutative(wb::parse_word("s[v;1,2,1] s[v;2,1]"), 0, wb::Direction::Forward),
               wb::Error);
}

TEST(Words, PseudoBraidIsInvertible) {
  wb::Network dj = fixture("djunction4");
  wb::Word w = wb::parse_word("s[v;1,2,3] s[v;1,3] s[v;3,1,2]", &dj);
  wb::Word f = wb::apply_pseudo_braid(dj, w, 0, wb::Direction::Forward);
  EXPECT_EQ(wb::apply_pseudo_braid(dj, f, 0, wb::Direction::Backward), w);
  // Needs a vertex of degree at least four.
  wb::Network tri = fixture("trijunction");
  EXPECT_THROW(wb::apply_pseudo_braid(tri, wb::parse_word("s[v;1,2,1] s[v;1,2] s[v;2,1,2]"), 0,
                                      wb::Direction::Forward),
               wb::Error);
}

TEST(Words, ThetaRelations) {
  wb::ThetaRef th{"v", "w"};
  auto [l1, r1] = wb::theta_relation(wb::ThetaRule::Delta, th, wb::total("v.1"));
  auto [l2, r2] = wb::theta_relation(wb::ThetaRule::Swap, th, wb::total("v.1"));
  EXPECT_NE(l1, r1);
  EXPECT_NE(l2, r2);
  wb::Word applied = wb::apply_theta(l2, 0, wb::ThetaRule::Swap, th, wb::Direction::Forward);
  EXPECT_EQ(applied, r2);
  EXPECT_EQ(wb::apply_theta(applied, 0, wb::ThetaRule::Swap, th, wb::Direction::Backward), l2);
}

TEST(Words, LollipopIds) {
  EXPECT_EQ(wb::lollipop_id("v", 1), "v.1");
  EXPECT_EQ(wb::lollipop_loop_id("v", 1, 2), "v.1.2");
  auto r = wb::parse_lollipop_id("v.1.2");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->vertex, "v");
  EXPECT_EQ(r->branch, 1);
  EXPECT_EQ(r->park, 2);
  EXPECT_FALSE(wb::parse_lollipop_id("nonsense"));
}

TEST(Words, LollipopRulesAreInvertible) {
  wb::Network net = fixture("lollipop");
  wb::SpanningTree tree = wb::rooted_spanning_tree(net);
  auto lol = wb::find_lollipop(net, tree, net.vertex("v"), 1);
  ASSERT_TRUE(lol);
  wb::Word w = wb::parse_word("s[v;1,1,2,1]", &net);
  wb::Word c = wb::apply_lollipop(net, tree, w, 0, wb::LollipopRule::Conjugate, *lol, wb::Direction::Forward, 4);
  EXPECT_EQ(wb::free_reduce(wb::apply_lollipop(net, tree, c, 0, wb::LollipopRule::Conjugate, *lol,
                                               wb::Direction::Backward, 4)),
            w);
}

}  // namespace
