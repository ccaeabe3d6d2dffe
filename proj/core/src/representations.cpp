#include "wirebraid/representations.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "json.hpp"

namespace wb {

namespace {

using cd = std::complex<double>;

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

bool unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).norm() <= tol * std::max<double>(1, m.rows());
}

}  // namespace

MajoranaAlgebra majorana_algebra(int m) {
  if (m < 1 || m > 6) throw Error(ErrorKind::OutOfRange, "Majorana modes must be in 1..6");
  Matrix I = Matrix::Identity(2, 2), X(2, 2), Y(2, 2), Z(2, 2);
  X << 0, 1, 1, 0;
  Y << 0, cd(0, -1), cd(0, 1), 0;
  Z << 1, 0, 0, -1;
  MajoranaAlgebra alg;
  alg.modes = m;
  for (int k = 0; k < m; ++k)
    for (const Matrix* P : {&X, &Y}) {
      Matrix g = Matrix::Identity(1, 1);
      for (int t = 0; t < m; ++t) g = kron(g, t < k ? Z : t == k ? *P : I);
      alg.gamma.push_back(g);
    }
  return alg;
}

Matrix majorana_gate(const MajoranaAlgebra& alg, int i) {
  if (i < 1 || i > 2 * alg.modes - 1) throw Error(ErrorKind::OutOfRange, "gate index out of range");
  Matrix id = Matrix::Identity(alg.dimension(), alg.dimension());
  return (id + alg.gamma[i - 1] * alg.gamma[i]) / std::sqrt(2.0);
}

int modes_for(int n) { return std::max(1, (n + 1) / 2); }

void UnitaryAssignment::set(const Generator& g, const Matrix& m) {
  if (m.rows() != dimension || m.cols() != dimension) throw Error(ErrorKind::OutOfRange, "gate dimension mismatch");
  if (!unitary(m, tolerance)) throw Error(ErrorKind::OutOfRange, "gate for " + format_generator(g) + " is not unitary");
  gates[format_generator(g)] = m;
}

std::optional<Matrix> UnitaryAssignment::lookup(const Generator& g) const {
  if (auto it = gates.find(format_generator(g)); it != gates.end()) return it->second;
  if (auto sb = std::get_if<SimpleBraid>(&g)) {
    SimpleBraid flip = *sb;
    std::swap(flip.seq[flip.seq.size() - 2], flip.seq.back());
    if (auto it = gates.find(format_generator(flip)); it != gates.end()) return Matrix(it->second.adjoint());
    if (auto it = vertex_family.find(sb->vertex); it != vertex_family.end()) {
      size_t i = static_cast<size_t>(sb->index());
      if (i >= 1 && i <= it->second.size()) {
        const Matrix& G = it->second[i - 1];
        return sb->seq[i - 1] > sb->seq[i] ? G : Matrix(G.adjoint());
      }
    }
    return std::nullopt;
  }
  if (std::holds_alternative<TotalBraid>(g) && delta) return *delta;
  if (one_particle_identity) {
    auto nm = std::get_if<NamedMove>(&g);
    if (is_single_particle(g) || (nm && nm->tag == MoveTag::GammaPrime)) return Matrix::Identity(dimension, dimension);
  }
  return std::nullopt;
}

UnitaryAssignment one_particle_convention(UnitaryAssignment a) {
  a.one_particle_identity = true;
  return a;
}

Matrix evaluate(const UnitaryAssignment& a, const Word& w) {
  Matrix m = Matrix::Identity(a.dimension, a.dimension);
  for (const Letter& l : w) {
    auto g = a.lookup(l.gen);
    if (!g) throw Error(ErrorKind::Unassigned, "no matrix for " + format_generator(l.gen));
    m = m * (l.exp > 0 ? *g : Matrix(g->adjoint()));
  }
  return m;
}

double phase_residual(const Matrix& m) {
  if (m.rows() == 0) return 0;
  Eigen::ComplexEigenSolver<Matrix> es(m, false);
  std::vector<double> ph;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) ph.push_back(std::arg(es.eigenvalues()[k]));
  std::sort(ph.begin(), ph.end());
  // Centre of the shortest arc holding every eigenphase.
  double gap = ph.front() + 2 * std::numbers::pi - ph.back();
  double centre = ph.back() + gap / 2 + std::numbers::pi;
  for (size_t k = 1; k < ph.size(); ++k)
    if (ph[k] - ph[k - 1] > gap) {
      gap = ph[k] - ph[k - 1];
      centre = ph[k - 1] + gap / 2 + std::numbers::pi;
    }
  Matrix d = m - std::polar(1.0, centre) * Matrix::Identity(m.rows(), m.cols());
  Eigen::JacobiSVD<Matrix> svd(d);
  return svd.singularValues()(0);
}

double relation_residual(const UnitaryAssignment& a, const Word& relator) {
  if (relator.empty()) return 0;
  return phase_residual(evaluate(a, relator));
}

VerifyReport verify_presentation(const UnitaryAssignment& a, const Presentation& p) {
  VerifyReport r;
  for (size_t k = 0; k < p.relators.size(); ++k) {
    RelatorCheck c{p.relator_kinds[k], p.relators[k], relation_residual(a, p.relators[k])};
    r.max_residual = std::max(r.max_residual, c.residual);
    if (c.residual > a.tolerance) r.pass = false;
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string verify_report_to_json(const VerifyReport& r, double tolerance) {
  nlohmann::ordered_json j;
  j["pass"] = r.pass;
  j["tolerance"] = tolerance;
  j["max_residual"] = r.max_residual;
  j["relators"] = nlohmann::ordered_json::array();
  for (const RelatorCheck& c : r.checks)
    j["relators"].push_back({{"kind", c.kind}, {"word", format_word(c.relator)}, {"residual", c.residual}});
  return j.dump(2);
}

UnitaryAssignment modular_assignment(const Analysis& a, int n, const GateFamilies& gates) {
  UnitaryAssignment out;
  for (const auto& [key, fam] : gates) {
    auto v = a.net.find_vertex(key);
    if (!v || a.net.degree(*v) < 3) throw Error(ErrorKind::ClassMismatch, "gate key '" + key + "' is not a junction");
    if (static_cast<int>(fam.size()) < n - 1)
      throw Error(ErrorKind::OutOfRange, "gate family '" + key + "' needs " + std::to_string(n - 1) + " matrices");
    for (const Matrix& m : fam) {
      if (out.dimension == 0) out.dimension = static_cast<int>(m.rows());
      if (m.rows() != out.dimension || m.cols() != out.dimension)
        throw Error(ErrorKind::OutOfRange, "gate dimension mismatch in family '" + key + "'");
      if (!unitary(m, out.tolerance)) throw Error(ErrorKind::OutOfRange, "family '" + key + "' has a non-unitary gate");
    }
  }
  for (VId u : a.essential) {
    auto it = gates.find(a.id(u));
    if (it == gates.end() && a.class_rep[u] >= 0) it = gates.find(a.id(a.class_rep[u]));
    if (it == gates.end()) throw Error(ErrorKind::ClassMismatch, "no gate family for junction '" + a.id(u) + "'");
    out.vertex_family[a.id(u)] = it->second;
  }
  if (a.canon) {
    const auto& fam = out.vertex_family.at(a.id(a.canon->lollipop.v));
    Matrix D = Matrix::Identity(out.dimension, out.dimension);
    for (int k = 0; k < n - 1; ++k) D = D * (a.canon->eps > 0 ? fam[k] : Matrix(fam[k].adjoint()));
    out.delta = D;
  }
  return out;
}

namespace {

std::vector<Matrix> majorana_family(int n, bool dagger) {
  MajoranaAlgebra alg = majorana_algebra(modes_for(n));
  std::vector<Matrix> fam;
  for (int i = 1; i <= std::max(1, n - 1); ++i) {
    Matrix U = majorana_gate(alg, i);
    fam.push_back(dagger ? Matrix(U.adjoint()) : U);
  }
  return fam;
}

Matrix parse_matrix(const nlohmann::json& j, int d) {
  if (!j.is_array() || static_cast<int>(j.size()) != d * d)
    throw Error(ErrorKind::Parse, "matrix needs " + std::to_string(d * d) + " [re, im] entries");
  Matrix m(d, d);
  for (int k = 0; k < d * d; ++k) {
    const auto& e = j[static_cast<size_t>(k)];
    if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, "matrix entries are [re, im] pairs");
    m(k / d, k % d) = cd(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

}  // namespace

UnitaryAssignment majorana_assignment(const Analysis& a, int n) {
  GateFamilies g;
  for (VId u : a.essential) g[a.id(u)] = majorana_family(n, false);
  UnitaryAssignment out = modular_assignment(a, n, g);
  if (out.dimension == 0) out.dimension = 1 << modes_for(n);
  return out;
}

GateFamilies load_gate_families(const std::string& text, const Analysis& a, int n) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::Parse, ex.what());
  }
  GateFamilies out;
  try {
    if (doc.value("majorana", false)) {
      for (VId u : a.essential) out[a.id(u)] = majorana_family(n, false);
      return out;
    }
    int d = doc.contains("dimension") ? doc.at("dimension").get<int>() : 0;
    for (const auto& [key, val] : doc.at("gates").items()) {
      if (val.is_string()) {
        std::string s = val.get<std::string>();
        if (s != "majorana" && s != "majorana^-1") throw Error(ErrorKind::Parse, "unknown gate shortcut '" + s + "'");
        out[key] = majorana_family(n, s == "majorana^-1");
        continue;
      }
      if (d <= 0) throw Error(ErrorKind::Parse, "explicit matrices need a positive \"dimension\"");
      bool list = val.is_array() && !val.empty() && val[0].is_array() && !val[0].empty() && val[0][0].is_array();
      if (list)
        for (const auto& m : val) out[key].push_back(parse_matrix(m, d));
      else
        out[key].push_back(parse_matrix(val, d));
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::Parse, ex.what());
  }
  return out;
}

}  // namespace wb
