#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "support.hpp"
#include "wirebraid/representations.hpp"

namespace {

using wbtest::fixture;
using cd = std::complex<double>;

wb::Matrix random_unitary(std::mt19937& rng, int d) {
  std::normal_distribution<double> g;
  wb::Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = cd(g(rng), g(rng));
  Eigen::HouseholderQR<wb::Matrix> qr(m);
  return qr.householderQ();
}

wb::ErrorKind gate_error(const std::string& text, const std::string& net, int n) {
  try {
    wb::Analysis a = wb::analyze(fixture(net));
    wb::modular_assignment(a, n, wb::load_gate_families(text, a, n));
  } catch (const wb::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << text;
  return wb::ErrorKind::Budget;
}

TEST(Majorana, Anticommutation) {
  for (int m = 1; m <= 4; ++m) {
    wb::MajoranaAlgebra alg = wb::majorana_algebra(m);
    ASSERT_EQ(alg.gamma.size(), static_cast<size_t>(2 * m));
    wb::Matrix I = wb::Matrix::Identity(alg.dimension(), alg.dimension());
    for (size_t i = 0; i < alg.gamma.size(); ++i) {
      EXPECT_LT((alg.gamma[i].adjoint() - alg.gamma[i]).norm(), 1e-14);
      for (size_t j = 0; j < alg.gamma.size(); ++j) {
        wb::Matrix ac = alg.gamma[i] * alg.gamma[j] + alg.gamma[j] * alg.gamma[i];
        EXPECT_LT((ac - (i == j ? 2.0 : 0.0) * I).norm(), 1e-12);
      }
    }
  }
  EXPECT_THROW(wb::majorana_algebra(0), wb::Error);
  EXPECT_THROW(wb::majorana_algebra(7), wb::Error);
}

TEST(Majorana, GatesHaveOrderEight) {
  wb::MajoranaAlgebra alg = wb::majorana_algebra(3);
  wb::Matrix I = wb::Matrix::Identity(alg.dimension(), alg.dimension());
  for (int i = 1; i <= 5; ++i) {
    wb::Matrix U = wb::majorana_gate(alg, i), P = I;
    for (int k = 1; k <= 8; ++k) {
      P = P * U;
      if (k == 4) EXPECT_LT((P + I).norm(), 1e-12);
    }
    EXPECT_LT((P - I).norm(), 1e-12);
  }
  EXPECT_THROW(wb::majorana_gate(alg, 6), wb::Error);
}

TEST(Majorana, ModesFor) {
  EXPECT_EQ(wb::modes_for(2), 1);
  EXPECT_EQ(wb::modes_for(3), 2);
  EXPECT_EQ(wb::modes_for(4), 2);
  EXPECT_EQ(wb::modes_for(5), 3);
}

TEST(PhaseResidual, IgnoresGlobalPhase) {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> angle(-3.14, 3.14);
  for (int t = 0; t < 50; ++t) {
    wb::Matrix U = random_unitary(rng, 4);
    double r = wb::phase_residual(U);
    EXPECT_NEAR(wb::phase_residual(std::polar(1.0, angle(rng)) * U), r, 1e-9);
    EXPECT_NEAR(wb::phase_residual(std::polar(1.0, angle(rng)) * wb::Matrix::Identity(4, 4)), 0, 1e-12);
  }
  // diag(1, -1) is pi away from any scalar in one direction: residual sqrt(2).
  wb::Matrix Z = wb::Matrix::Identity(2, 2);
  Z(1, 1) = -1;
  EXPECT_NEAR(wb::phase_residual(Z), std::sqrt(2.0), 1e-12);
}

TEST(Assignment, EvaluateAndInverseOrientation) {
  wb::Analysis a = wb::analyze(fixture("trijunction"));
  wb::UnitaryAssignment u = wb::majorana_assignment(a, 3);
  wb::Matrix s = wb::evaluate(u, wb::parse_word("s[v;2,1]"));
  wb::Matrix si = wb::evaluate(u, wb::parse_word("s[v;1,2]"));
  EXPECT_LT((s * si - wb::Matrix::Identity(4, 4)).norm(), 1e-12);
  EXPECT_THROW(wb::evaluate(u, wb::parse_word("d[v.1]")), wb::Error);
  wb::UnitaryAssignment q = wb::one_particle_convention(u);
  EXPECT_LT((wb::evaluate(q, wb::parse_word("g[v.1.2]")) - wb::Matrix::Identity(4, 4)).norm(), 1e-15);
}

TEST(Assignment, RejectsNonUnitary) {
  wb::UnitaryAssignment u;
  u.dimension = 2;
  wb::Matrix m = wb::Matrix::Identity(2, 2) * 2.0;
  EXPECT_THROW(u.set(wb::simple("v", {2, 1}).gen, m), wb::Error);
  EXPECT_NO_THROW(u.set(wb::simple("v", {2, 1}).gen, wb::Matrix::Identity(2, 2)));
}

TEST(Assignment, MajoranaSatisfiesConnectedPresentations) {
  for (const char* name : {"theta", "fig5a", "fig5b"})
    for (int n : {2, 3, 4}) {
      wb::Analysis a = wb::analyze(fixture(name));
      wb::VerifyReport r = wb::verify_presentation(wb::majorana_assignment(a, n), wb::emit_presentation(a, n));
      EXPECT_TRUE(r.pass) << name << " n=" << n << " max " << r.max_residual;
      EXPECT_LE(r.max_residual, 1e-12);
    }
}

TEST(Assignment, BraidRelatorCatchesGenericGates) {
  wb::Analysis a = wb::analyze(fixture("theta"));
  std::mt19937 rng(31);
  std::vector<wb::Matrix> fam{random_unitary(rng, 4), random_unitary(rng, 4)};
  wb::UnitaryAssignment u = wb::modular_assignment(a, 3, {{"v", fam}, {"w", fam}});
  wb::VerifyReport r = wb::verify_presentation(u, wb::emit_presentation(a, 3));
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.max_residual, 0.1);
}

TEST(GateFile, Shortcuts) {
  wb::Analysis a = wb::analyze(fixture("fig5a"));
  auto all = wb::load_gate_families(R"({"majorana": true})", a, 3);
  EXPECT_EQ(all.size(), 4u);
  auto mixed = wb::load_gate_families(R"({"gates": {"v": "majorana", "w": "majorana^-1"}})", a, 3);
  ASSERT_EQ(mixed.size(), 2u);
  EXPECT_LT((mixed["v"][0] - mixed["w"][0].adjoint()).norm(), 1e-15);
  wb::UnitaryAssignment u = wb::modular_assignment(a, 3, mixed);
  EXPECT_EQ(u.vertex_family.size(), 4u);  // vp and wp inherit their class family
  EXPECT_TRUE(wb::verify_presentation(u, wb::emit_presentation(a, 3)).pass);
}

TEST(GateFile, ExplicitMatrices) {
  wb::Analysis a = wb::analyze(fixture("fig5a"));
  const char* text = R"({"dimension": 2, "gates": {
      "v": [[1,0],[0,0],[0,0],[1,0]],
      "w": [[0,0],[1,0],[1,0],[0,0]]}})";
  auto g = wb::load_gate_families(text, a, 2);
  EXPECT_EQ(g["w"][0](0, 1), cd(1, 0));
  EXPECT_NO_THROW(wb::modular_assignment(a, 2, g));
}

TEST(GateFile, Errors) {
  EXPECT_EQ(gate_error("{", "fig5a", 2), wb::ErrorKind::Parse);
  EXPECT_EQ(gate_error(R"({"gates": {"v": "hadamard"}})", "fig5a", 2), wb::ErrorKind::Parse);
  EXPECT_EQ(gate_error(R"({"gates": {"v": [[1,0],[0,0],[0,0],[1,0]]}})", "fig5a", 2), wb::ErrorKind::Parse);
  EXPECT_EQ(gate_error(R"({"dimension": 2, "gates": {"v": [[2,0],[0,0],[0,0],[1,0]], "w": "majorana"}})", "fig5a", 2),
            wb::ErrorKind::OutOfRange);
  EXPECT_EQ(gate_error(R"({"gates": {"v": "majorana"}})", "fig5a", 2), wb::ErrorKind::ClassMismatch);
  EXPECT_EQ(gate_error(R"({"gates": {"r": "majorana", "v": "majorana", "w": "majorana"}})", "fig5a", 2),
            wb::ErrorKind::ClassMismatch);
}

}  // namespace
