#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wirebraid/analysis.hpp"
#include "wirebraid/presentation.hpp"
#include "wirebraid/words.hpp"

namespace wb {

using Matrix = Eigen::MatrixXcd;

struct MajoranaAlgebra {
  int modes = 0;
  std::vector<Matrix> gamma;  // gamma[0] is gamma_1
  int dimension() const { return 1 << modes; }
};

// Jordan-Wigner construction, 1 <= m <= 6.
MajoranaAlgebra majorana_algebra(int m);
// U_i = exp(pi/4 gamma_i gamma_{i+1}) = (I + gamma_i gamma_{i+1}) / sqrt(2), 1 <= i <= 2m-1.
Matrix majorana_gate(const MajoranaAlgebra& alg, int i);
// Fewest modes carrying U_1..U_{n-1}.
int modes_for(int n);

struct UnitaryAssignment {
  int dimension = 0;
  double tolerance = 1e-10;
  // Keyed by format_generator.
  std::map<std::string, Matrix> gates;
  // sigma_i^{u;a} -> G_i, or G_i^dagger when a_i < a_{i+1}, for families keyed by vertex id.
  std::map<std::string, std::vector<Matrix>> vertex_family;
  // Image of every total braid.
  std::optional<Matrix> delta;
  bool one_particle_identity = false;

  void set(const Generator& g, const Matrix& m);
  // Missing simple braids fall back to the inverse of the opposite orientation.
  std::optional<Matrix> lookup(const Generator& g) const;
};

UnitaryAssignment one_particle_convention(UnitaryAssignment a);

// Left-to-right product of letter images; throws Unassigned.
Matrix evaluate(const UnitaryAssignment& a, const Word& w);
// min over theta of the operator norm of M - e^{i theta} I.
double phase_residual(const Matrix& m);
double relation_residual(const UnitaryAssignment& a, const Word& relator);

struct RelatorCheck {
  std::string kind;
  Word relator;
  double residual = 0;
};

struct VerifyReport {
  bool pass = true;
  double max_residual = 0;
  std::vector<RelatorCheck> checks;
};

VerifyReport verify_presentation(const UnitaryAssignment& a, const Presentation& p);
std::string verify_report_to_json(const VerifyReport& r, double tolerance);

// One gate family G_1..G_{n-1} per key; keys are vertex ids or junction-class
// representatives. Simple braids at u take u's family (or its class family);
// delta maps to G_1^eps ... G_{n-1}^eps of the first junction's family.
using GateFamilies = std::map<std::string, std::vector<Matrix>>;
UnitaryAssignment modular_assignment(const Analysis& a, int n, const GateFamilies& gates);

// Majorana gates U_1..U_{n-1} on every junction.
UnitaryAssignment majorana_assignment(const Analysis& a, int n);

// Gates file: {"dimension": d, "gates": {key: matrix | [matrix, ...] | "majorana" | "majorana^-1"}}
// with a matrix given row-major as [[re, im], ...]. {"majorana": true} assigns Majorana
// gates to every junction.
GateFamilies load_gate_families(const std::string& text, const Analysis& a, int n);

}  // namespace wb
