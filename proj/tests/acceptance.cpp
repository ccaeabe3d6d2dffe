// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "wirebraid/analysis.hpp"
#include "wirebraid/garside.hpp"
#include "wirebraid/oracle.hpp"
#include "wirebraid/presentation.hpp"
#include "wirebraid/representations.hpp"
#include "wirebraid/strings.hpp"
#include "wirebraid/subdivision.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using wbtest::fixture;

constexpr double kResidualTol = 1e-12;
constexpr double kDiscriminationFloor = 0.1;

// Collects failed checks for one criterion.
struct Criterion {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(double x) {
  std::ostringstream ss;
  ss << x;
  return ss.str();
}

// Runs one criterion with an optional time limit (seconds, 0 = none).
bool run(int id, const char* title, double limit, const std::function<void(Criterion&)>& body) {
  Criterion c;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  double secs = seconds_since(t0);
  if (limit > 0 && secs >= limit) c.failures.push_back("runtime " + fmt(secs) + " s >= " + fmt(limit) + " s");
  bool ok = c.failures.empty();
  std::printf("%s %2d %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, title, secs);
  for (const auto& n : c.notes) std::printf("        %s\n", n.c_str());
  for (const auto& f : c.failures) std::printf("        failed: %s\n", f.c_str());
  std::fflush(stdout);
  return ok;
}

void oracle_counts(Criterion& c, const std::string& name, int n, int64_t h1, std::optional<int64_t> euler) {
  wb::Oracle o(fixture(name), n);
  wb::OracleReport r = o.report();
  c.check(r.h1_rank == h1, name + " n=" + std::to_string(n) + " h1_rank " + std::to_string(r.h1_rank));
  if (euler) c.check(r.euler == *euler, name + " n=" + std::to_string(n) + " euler " + std::to_string(r.euler));
  c.note(name + " n=" + std::to_string(n) + ": h1_rank " + std::to_string(r.h1_rank) + ", euler " +
         std::to_string(r.euler));
}

void presentation_shape(Criterion& c, const std::string& name, int n, size_t gens, size_t rels) {
  wb::Presentation p = wb::emit_presentation(wb::analyze(fixture(name)), n);
  c.check(p.generators.size() == gens && p.relators.size() == rels,
          "presentation has " + std::to_string(p.generators.size()) + " generators / " +
              std::to_string(p.relators.size()) + " relators");
}

void criterion1(Criterion& c) {
  wb::Oracle o(fixture("trijunction"), 3);
  wb::OracleReport r = o.report();
  c.check(r.h1_rank == 3, "h1_rank " + std::to_string(r.h1_rank));
  c.check(r.euler == -2, "euler " + std::to_string(r.euler));
  c.check(r.free.value_or(false) && r.generators == 3, "tietze did not certify free on 3 generators");
  c.note("h1_rank " + std::to_string(r.h1_rank) + ", euler " + std::to_string(r.euler) + ", free on " +
         std::to_string(r.generators));
  presentation_shape(c, "trijunction", 3, 3, 0);
}

void criterion2(Criterion& c) {
  oracle_counts(c, "trijunction", 2, 1, 0);
  presentation_shape(c, "trijunction", 2, 1, 0);
  // Same values after three extra subdivision rounds.
  wb::Network net = fixture("trijunction");
  for (int level : {2, 5}) {
    wb::CubeComplex cx(wb::subdivide(net, level).fine, 2);
    c.check(cx.h1_rank() == 1 && cx.euler() == 0,
            "subdivision level " + std::to_string(level) + ": h1 " + std::to_string(cx.h1_rank()) + ", euler " +
                std::to_string(cx.euler()));
  }
}

void criterion3(Criterion& c) { oracle_counts(c, "path", 3, 0, std::nullopt); }

void relation_null(Criterion& c, const std::string& name, int n, const wb::Word& lhs, const wb::Word& rhs) {
  wb::Oracle o(fixture(name), n);
  wb::LoopClass lc = o.word_to_loop(wb::concat(lhs, wb::inverse(rhs)));
  c.check(lc.closed && lc.null_homologous,
          name + ": " + wb::format_word(lhs) + " vs " + wb::format_word(rhs) + " not null-homologous");
  c.note(name + " n=" + std::to_string(n) + ": " + wb::format_word(lhs) + " = " + wb::format_word(rhs));
}

void criterion4(Criterion& c) {
  wb::Network tri = fixture("trijunction");
  wb::Word lhs1 = wb::parse_word("s[v;2,1,2,1] s[v;2,1]", &tri);
  relation_null(c, "trijunction", 4, lhs1, wb::apply_pseudo_commutative(lhs1, 0, wb::Direction::Forward));

  wb::Network dj = fixture("djunction4");
  wb::Word lhs2 = wb::parse_word("s[v;1,2,3] s[v;1,3] s[v;3,1,2]", &dj);
  relation_null(c, "djunction4", 3, lhs2, wb::apply_pseudo_braid(dj, lhs2, 0, wb::Direction::Forward));
}

void criterion5(Criterion& c) {
  wb::Network net = fixture("theta");
  wb::Analysis a = wb::analyze(net);
  wb::Word u = wb::parse_word("s[v;2,1]", &net), v = wb::parse_word("s[w;2,1]", &net);
  wb::EquivOptions opt;
  opt.depth = 10;
  wb::EquivResult e = wb::rewrite_search(a, 2, u, v, opt);
  c.check(e.verdict == wb::Verdict::Equal, std::string("verdict ") + wb::to_string(e.verdict));
  c.check(e.depth_used <= 10, "depth " + std::to_string(e.depth_used));
  bool theta = false, quotient = false;
  std::string rules;
  for (const auto* chain : {&e.lhs_chain, &e.rhs_chain})
    for (const wb::ProofStep& s : *chain) {
      theta |= s.rule.rfind("theta-", 0) == 0;
      quotient |= s.rule == "quotient";
      rules += (rules.empty() ? "" : ", ") + s.rule;
    }
  c.check(theta && quotient, "proof does not use a theta relation and the quotient: " + rules);
  c.note("depth " + std::to_string(e.depth_used) + ": " + rules);
}

void criterion6(Criterion& c) {
  for (int m : {2, 3}) {
    wb::MajoranaAlgebra alg = wb::majorana_algebra(m);
    const int d = alg.dimension(), k = 2 * m;
    wb::Matrix I = wb::Matrix::Identity(d, d);
    double worst = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        wb::Matrix ac = alg.gamma[i] * alg.gamma[j] + alg.gamma[j] * alg.gamma[i] - (i == j ? 2.0 : 0.0) * I;
        worst = std::max(worst, ac.norm());
      }
    c.check(worst <= kResidualTol, "m=" + std::to_string(m) + " anticommutation " + fmt(worst));
    std::vector<wb::Matrix> U;
    for (int i = 1; i < k; ++i) U.push_back(wb::majorana_gate(alg, i));
    double order = 0, braid = 0, comm = 0;
    for (size_t i = 0; i < U.size(); ++i) {
      wb::Matrix p = I;
      for (int t = 0; t < 8; ++t) p = p * U[i];
      order = std::max(order, (p - I).norm());
      if (i + 1 < U.size()) {
        wb::Matrix r = U[i] * U[i + 1] * U[i] * (U[i + 1] * U[i] * U[i + 1]).adjoint();
        braid = std::max(braid, wb::phase_residual(r));
      }
      for (size_t j = i + 2; j < U.size(); ++j)
        comm = std::max(comm, wb::phase_residual(U[i] * U[j] * U[i].adjoint() * U[j].adjoint()));
    }
    c.check(order <= kResidualTol, "m=" + std::to_string(m) + " U^8 residual " + fmt(order));
    c.check(braid <= kResidualTol, "m=" + std::to_string(m) + " braid residual " + fmt(braid));
    c.check(comm <= kResidualTol, "m=" + std::to_string(m) + " commutation residual " + fmt(comm));

    // 3-connected presentation with n = 2m - 1 anyons, which needs m modes.
    const int n = 2 * m - 1;
    wb::Analysis a = wb::analyze(fixture("theta"));
    wb::Presentation pres = wb::emit_presentation(a, n);
    wb::UnitaryAssignment ua = wb::majorana_assignment(a, n);
    ua.tolerance = kResidualTol;
    wb::VerifyReport rep = wb::verify_presentation(ua, pres);
    c.check(rep.pass, "m=" + std::to_string(m) + " verify_presentation on theta n=" + std::to_string(n) +
                          " max residual " + fmt(rep.max_residual));
    c.note("m=" + std::to_string(m) + ": anticommutation " + fmt(worst) + ", U^8 " + fmt(order) + ", braid " +
           fmt(braid) + ", commute " + fmt(comm) + ", theta n=" + std::to_string(n) + " max " +
           fmt(rep.max_residual));
  }
}

// U (Majorana) on the v module and `V` on the w module.
wb::VerifyReport modular_check(const std::string& name, int n, const std::vector<wb::Matrix>& V,
                               const std::vector<std::string>& v_keys, const std::vector<std::string>& w_keys) {
  wb::Analysis a = wb::analyze(fixture(name));
  wb::MajoranaAlgebra alg = wb::majorana_algebra(wb::modes_for(n));
  std::vector<wb::Matrix> U;
  for (int i = 1; i < n; ++i) U.push_back(wb::majorana_gate(alg, i));
  wb::GateFamilies g;
  for (const auto& k : v_keys) g[k] = U;
  for (const auto& k : w_keys) g[k] = V;
  wb::UnitaryAssignment ua = wb::modular_assignment(a, n, g);
  ua.tolerance = kResidualTol;
  return wb::verify_presentation(ua, wb::emit_presentation(a, n));
}

double ident_residual(const wb::VerifyReport& r) {
  double worst = 0;
  for (const auto& c : r.checks)
    if (c.kind == "ident") worst = std::max(worst, c.residual);
  return worst;
}

void discrimination(Criterion& c, int n, const std::vector<wb::Matrix>& V, const std::string& label) {
  wb::VerifyReport a = modular_check("fig5a", n, V, {"v", "vp"}, {"w", "wp"});
  wb::VerifyReport b = modular_check("fig5b", n, V, {"v", "vp", "x"}, {"w", "wp", "y"});
  double ident = ident_residual(b);
  c.check(a.pass, label + ": fig5a fails, max residual " + fmt(a.max_residual));
  c.check(!b.pass, label + ": fig5b passes");
  c.check(ident >= kDiscriminationFloor, label + ": fig5b ident residual " + fmt(ident));
  c.note(label + ": fig5a max " + fmt(a.max_residual) + ", fig5b ident residual " + fmt(ident));
}

void criterion7(Criterion& c) {
  // Mirror Majorana gates on the second module.
  for (int n : {2, 3}) {
    wb::MajoranaAlgebra alg = wb::majorana_algebra(wb::modes_for(n));
    std::vector<wb::Matrix> V;
    for (int i = 1; i < n; ++i) V.push_back(wb::majorana_gate(alg, i).adjoint());
    discrimination(c, n, V, "n=" + std::to_string(n) + " V=U^dagger");
  }
  // A Hadamard-like gate; at n=2 no braid relator constrains it.
  wb::Matrix H(2, 2);
  const double r = 1 / std::sqrt(2.0);
  H << r, r, r, -r;
  discrimination(c, 2, {H}, "n=2 V=Hadamard");
}

void criterion8(Criterion& c) {
  namespace g = wb::garside;
  c.check(g::normal_form(3, {1, 2, 1}) == g::normal_form(3, {2, 1, 2}), "nf(s1 s2 s1) != nf(s2 s1 s2)");
  c.check(!g::equal(4, {1}, {2}), "garside: s1 = s2");

  wb::Analysis a = wb::analyze(fixture("theta"));
  wb::EquivOptions fast;
  fast.proof = false;
  std::mt19937 rng(20240611);
  int bad_nf = 0, bad_net = 0;
  for (int t = 0; t < 1000; ++t) {
    g::PlanarWord w = wbtest::random_planar(rng, 4, 12);
    g::PlanarWord r = wbtest::scramble(rng, 4, w, 6);
    if (!g::equal(4, w, r)) ++bad_nf;
    if (wb::equivalent(a, 4, wbtest::lift_planar(a, w), wbtest::lift_planar(a, r), fast).verdict != wb::Verdict::Equal)
      ++bad_net;
  }
  c.check(bad_nf == 0, std::to_string(bad_nf) + " random words differ under garside");
  c.check(bad_net == 0, std::to_string(bad_net) + " random words not equal on theta n=4");
  wb::EquivResult d = wb::equivalent(a, 4, wbtest::lift_planar(a, {1}), wbtest::lift_planar(a, {2}), fast);
  c.check(d.verdict == wb::Verdict::Distinct, std::string("theta s1 vs s2: ") + wb::to_string(d.verdict));
  c.note("1000 random words (B_4 and theta n=4), s1 vs s2 " + std::string(wb::to_string(d.verdict)));
}

void criterion9(Criterion& c) {
  wb::Network tri = fixture("trijunction");
  struct Case {
    int n;
    wb::SimpleBraid g;
    bool crossing;
    std::vector<int> perm;
  };
  for (const Case& k : {Case{2, {"v", {2, 1}}, false, {2, 1}}, Case{3, {"v", {1, 2, 1}}, true, {1, 3, 2, 4}}}) {
    wb::Choreographer ch(tri, k.n);
    wb::RunResult r =
        wb::run_sequence(ch.sub().fine, wb::initial_configuration(ch), wb::expand_simple_braid(ch, k.g));
    std::string w = wb::format_generator(k.g);
    c.check(r.ok, w + ": " + r.diagnostics);
    c.check(!r.self_intersection, w + ": self-intersection");
    c.check(k.crossing ? r.crossings >= 1 : r.crossings == 0, w + ": crossings " + std::to_string(r.crossings));
    c.check(r.permutation == k.perm, w + ": wrong permutation");
    c.note(w + ": " + std::to_string(r.crossings) + " crossing(s)");
  }

  wb::Network lol = fixture("lollipop");
  wb::StringRelationReport l = wb::verify_string_relation(
      lol, 4, wb::parse_word("g[v.1.2] d[v.1]^-1", &lol), wb::parse_word("s[v;2,2,2,1] s[v;2,2,1] s[v;2,1]", &lol),
      false);
  c.check(l.configurations_agree && l.permutations_agree && l.h1 == wb::H1Agreement::Exact,
          std::string("lollipop1 n=4: h1 ") + wb::to_string(l.h1));
  c.check(!l.lhs_run.self_intersection && !l.rhs_run.self_intersection, "lollipop1 self-intersection");

  wb::ThetaReport t = wb::theta_composite(fixture("theta"), {});
  c.check(t.pass && t.identity && t.configuration_preserved && t.self_intersections == 0,
          "theta composite: " + t.note);
  c.note("lollipop1 h1 " + std::string(wb::to_string(l.h1)) + ", theta composite h1 " + wb::to_string(t.h1));
}

void criterion10(Criterion& c) {
  const std::vector<std::pair<std::string, std::vector<int>>> corpus = {
      {"trijunction", {2, 3}}, {"djunction4", {2, 3}}, {"theta", {2, 3, 4}}, {"fig5a", {2, 3}}, {"fig5b", {2, 3}}};
  size_t total = 0, quotient = 0;
  for (const auto& [name, ns] : corpus)
    for (int n : ns) {
      wb::Network net = fixture(name);
      wb::Analysis a = wb::analyze(net);
      wb::Presentation p = wb::emit_presentation(a, n);
      wb::UnitaryAssignment ua = wb::majorana_assignment(a, n);
      wb::Oracle o(net, n);
      for (size_t k = 0; k < p.relators.size(); ++k) {
        const std::string where = name + " n=" + std::to_string(n) + " " + wb::format_word(p.relators[k]);
        double res = wb::relation_residual(ua, p.relators[k]);
        c.check(res <= kResidualTol, where + ": Majorana residual " + fmt(res));
        wb::LoopClass lc = o.word_to_loop(p.relators[k]);
        // The delta relation holds with one-particle loops set to the identity.
        bool zero = p.relator_kinds[k] == "delta" ? lc.null_mod_one_particle : lc.null_homologous;
        c.check(lc.closed && zero, where + ": H1 class nonzero");
        quotient += p.relator_kinds[k] == "delta";
        ++total;
      }
    }
  c.note(std::to_string(total) + " relators, " + std::to_string(quotient) + " delta relators checked modulo one-particle loops");
}

}  // namespace

int main() {
  int failed = 0;
  failed += !run(1, "trijunction n=3: free on 3, h1 3, euler -2", 60, criterion1);
  failed += !run(2, "trijunction n=2: h1 1, euler 0, one generator", 5, criterion2);
  failed += !run(3, "path n=3: contractible", 0, criterion3);
  failed += !run(4, "pseudo-commutative and pseudo-braid relations are null-homologous", 0, criterion4);
  failed += !run(5, "theta identification by rewriting within depth 10", 0, criterion5);
  failed += !run(6, "Majorana gates and the 3-connected presentation", 5, criterion6);
  failed += !run(7, "modular discrimination fig5a vs fig5b", 0, criterion7);
  failed += !run(8, "Garside normal form and randomized equivalence", 30, criterion8);
  failed += !run(9, "string simulator expansions, lollipop and theta composites", 10, criterion9);
  failed += !run(10, "corpus relators: Majorana residual and H1", 0, criterion10);
  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
