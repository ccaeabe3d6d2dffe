#include <gtest/gtest.h>

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "support.hpp"
#include "wirebraid/garside.hpp"

namespace {

namespace g = wb::garside;
using cd = std::complex<double>;

// Unreduced Burau matrix of a planar word at parameter t.
Eigen::MatrixXcd burau(int n, const g::PlanarWord& w, cd t) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
  for (int x : w) {
    int i = std::abs(x) - 1;
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Identity(n, n);
    b(i, i) = 1.0 - t;
    b(i, i + 1) = t;
    b(i + 1, i) = 1.0;
    b(i + 1, i + 1) = 0.0;
    m = m * (x > 0 ? b : Eigen::MatrixXcd(b.inverse()));
  }
  return m;
}

const cd kT = std::polar(1.0, 0.7319);

bool burau_equal(int n, const g::PlanarWord& u, const g::PlanarWord& v) {
  return (burau(n, u, kT) - burau(n, v, kT)).norm() < 1e-8;
}

TEST(Garside, BraidRelation) {
  EXPECT_EQ(g::normal_form(3, {1, 2, 1}), g::normal_form(3, {2, 1, 2}));
  EXPECT_TRUE(g::equal(4, {1, 3}, {3, 1}));
  EXPECT_FALSE(g::equal(3, {1}, {2}));
  EXPECT_FALSE(g::equal(3, {1, 2}, {2, 1}));
  EXPECT_TRUE(g::equal(3, {1, -1}, {}));
}

TEST(Garside, DeltaSquaredIsCentral) {
  for (int n : {3, 4, 5}) {
    g::PlanarWord delta;
    for (int k = n - 1; k >= 1; --k)
      for (int i = 1; i <= k; ++i) delta.push_back(i);
    g::PlanarWord d2 = delta;
    d2.insert(d2.end(), delta.begin(), delta.end());
    EXPECT_EQ(g::normal_form(n, delta).delta_power, 1);
    EXPECT_TRUE(g::normal_form(n, delta).factors.empty());
    for (int i = 1; i < n; ++i) {
      g::PlanarWord a = d2, b{i};
      a.push_back(i);
      b.insert(b.end(), d2.begin(), d2.end());
      EXPECT_TRUE(g::equal(n, a, b));
    }
  }
}

TEST(Garside, NormalFormRoundTrip) {
  std::mt19937 rng(3);
  for (int t = 0; t < 300; ++t) {
    g::PlanarWord w = wbtest::random_planar(rng, 5, 15);
    g::NormalForm nf = g::normal_form(5, w);
    EXPECT_EQ(g::normal_form(5, g::to_word(nf)), nf);
    EXPECT_TRUE(burau_equal(5, w, g::to_word(nf)));
  }
}

TEST(Garside, MultiplyMatchesConcatenation) {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    g::PlanarWord a = wbtest::random_planar(rng, 4, 10), b = wbtest::random_planar(rng, 4, 10);
    g::PlanarWord ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    EXPECT_EQ(g::multiply(g::normal_form(4, a), g::normal_form(4, b)), g::normal_form(4, ab));
  }
}

TEST(Garside, ScrambledWordsAgreeWithBurau) {
  std::mt19937 rng(9);
  for (int t = 0; t < 500; ++t) {
    g::PlanarWord w = wbtest::random_planar(rng, 4, 12);
    g::PlanarWord r = wbtest::scramble(rng, 4, w, 8);
    EXPECT_TRUE(g::equal(4, w, r));
    EXPECT_TRUE(burau_equal(4, w, r));
  }
}

// Burau is faithful on B_3, so the two must agree exactly there; on B_4 a Burau
// difference still proves the braids differ.
TEST(Garside, RandomPairsAgreeWithBurau) {
  std::mt19937 rng(13);
  for (int n : {3, 4})
    for (int t = 0; t < 500; ++t) {
      g::PlanarWord u = wbtest::random_planar(rng, n, 6), v = wbtest::random_planar(rng, n, 6);
      bool gs = g::equal(n, u, v), bu = burau_equal(n, u, v);
      if (n == 3) EXPECT_EQ(gs, bu);
      if (!bu) EXPECT_FALSE(gs);
      if (gs) EXPECT_TRUE(bu);
    }
}

TEST(Garside, SimpleWords) {
  g::Perm delta{3, 2, 1, 0};
  g::PlanarWord w = g::simple_word(delta);
  EXPECT_EQ(w.size(), 6u);
  for (int x : w) EXPECT_GT(x, 0);
  EXPECT_EQ(g::normal_form(4, w).delta_power, 1);
}

}  // namespace
