#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "wirebraid/oracle.hpp"
#include "wirebraid/presentation.hpp"

namespace {

using wbtest::fixture;

struct Shape {
  const char* name;
  int n;
  size_t generators, relators;
};

TEST(Presentation, Shapes) {
  for (const Shape& s : {Shape{"path", 3, 0, 0}, Shape{"trijunction", 2, 1, 0}, Shape{"trijunction", 3, 3, 0},
                         Shape{"djunction4", 2, 3, 0}, Shape{"djunction4", 3, 12, 1}, Shape{"theta", 2, 3, 2},
                         Shape{"theta", 4, 3, 5}, Shape{"fig5a", 3, 5, 5}, Shape{"fig5b", 3, 7, 7}}) {
    wb::Presentation p = wb::emit_presentation(wb::analyze(fixture(s.name)), s.n);
    EXPECT_EQ(p.generators.size(), s.generators) << s.name << " n=" << s.n;
    EXPECT_EQ(p.relators.size(), s.relators) << s.name << " n=" << s.n;
    EXPECT_EQ(p.relators.size(), p.relator_kinds.size());
  }
}

// Junction generators match the free rank of the oracle's H1.
TEST(Presentation, JunctionRankMatchesOracle) {
  for (const char* name : {"trijunction", "djunction4"})
    for (int n : {2, 3}) {
      wb::Network net = fixture(name);
      wb::Presentation p = wb::emit_presentation(wb::analyze(net), n);
      wb::Oracle o(net, n);
      EXPECT_EQ(static_cast<int64_t>(p.generators.size()) - static_cast<int64_t>(p.relators.size()), o.h1_rank())
          << name << " n=" << n;
    }
}

TEST(Presentation, UnsupportedRegimeThrows) {
  try {
    wb::emit_presentation(wb::analyze(fixture("lollipop")), 2);
    FAIL() << "no error";
  } catch (const wb::Error& e) {
    EXPECT_EQ(e.kind(), wb::ErrorKind::UnsupportedRegime);
  }
}

TEST(Presentation, RelatorsAreTrivialWords) {
  for (const char* name : {"theta", "fig5b"}) {
    wb::Analysis a = wb::analyze(fixture(name));
    wb::Presentation p = wb::emit_presentation(a, 3);
    wb::EquivOptions fast;
    fast.proof = false;
    for (const wb::Word& r : p.relators)
      EXPECT_EQ(wb::equivalent(a, 3, r, {}, fast).verdict, wb::Verdict::Equal) << name << ": " << wb::format_word(r);
  }
}

TEST(Equivalent, ThetaIdentificationHasProof) {
  wb::Network net = fixture("theta");
  wb::Analysis a = wb::analyze(net);
  wb::EquivResult e =
      wb::equivalent(a, 2, wb::parse_word("s[v;2,1]", &net), wb::parse_word("s[w;2,1]", &net));
  ASSERT_EQ(e.verdict, wb::Verdict::Equal);
  EXPECT_LE(e.depth_used, 10);
  // Both chains end at the same word.
  wb::Word l = e.lhs_chain.empty() ? wb::parse_word("s[v;2,1]") : e.lhs_chain.back().result;
  wb::Word r = e.rhs_chain.empty() ? wb::parse_word("s[w;2,1]") : e.rhs_chain.back().result;
  EXPECT_EQ(wb::free_reduce(l), wb::free_reduce(r));
}

TEST(Equivalent, ModulesStayApartOnTwoConnected) {
  wb::Network net = fixture("fig5a");
  wb::Analysis a = wb::analyze(net);
  wb::EquivOptions small;
  small.node_limit = 2000;
  EXPECT_EQ(wb::equivalent(a, 3, wb::parse_word("s[v;2,1]", &net), wb::parse_word("s[vp;2,1]", &net), small).verdict,
            wb::Verdict::Equal);
  // No decision procedure separates the modules; the bounded search must not claim equality.
  EXPECT_EQ(wb::equivalent(a, 3, wb::parse_word("s[v;2,1]", &net), wb::parse_word("s[w;2,1]", &net), small).verdict,
            wb::Verdict::Unknown);
}

TEST(Equivalent, JunctionWordsAreFree) {
  wb::Network net = fixture("trijunction");
  wb::Analysis a = wb::analyze(net);
  wb::Word s = wb::parse_word("s[v;2,1]", &net);
  EXPECT_EQ(wb::equivalent(a, 2, s, wb::parse_word("s[v;1,2]^-1", &net)).verdict, wb::Verdict::Equal);
  EXPECT_EQ(wb::equivalent(a, 2, s, wb::inverse(s)).verdict, wb::Verdict::Distinct);
  EXPECT_EQ(wb::equivalent(a, 2, wb::power(s, 2), {}).verdict, wb::Verdict::Distinct);
}

TEST(Equivalent, PlanarLiftMatchesGarside) {
  wb::Analysis a = wb::analyze(fixture("fig5b"));
  wb::EquivOptions fast;
  fast.proof = false;
  std::mt19937 rng(23);
  for (int t = 0; t < 200; ++t) {
    auto u = wbtest::random_planar(rng, 3, 6), v = wbtest::random_planar(rng, 3, 6);
    bool same = wb::garside::equal(3, u, v);
    wb::Verdict got = wb::equivalent(a, 3, wbtest::lift_planar(a, u), wbtest::lift_planar(a, v), fast).verdict;
    EXPECT_EQ(got, same ? wb::Verdict::Equal : wb::Verdict::Distinct);
  }
}

TEST(Canonicalize, ClassSymbols) {
  wb::Network net = fixture("fig5b");
  wb::Analysis a = wb::analyze(net);
  wb::Word c = wb::canonicalize(a, wb::parse_word("s[y;2,1] s[v;2,1]^-1", &net));
  EXPECT_TRUE(wb::free_reduce(c).empty()) << wb::format_word(c);
  EXPECT_THROW(wb::canonicalize(wb::analyze(fixture("trijunction")), wb::parse_word("s[v;2,1]")), wb::Error);
}

TEST(Canonicalize, OrientFlipsDescendingPairs) {
  wb::Word o = wb::orient(wb::parse_word("s[v;1,2]"));
  EXPECT_EQ(wb::format_word(o), "s[v;2,1]^-1");
}

}  // namespace
