#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wirebraid/analysis.hpp"
#include "wirebraid/words.hpp"

namespace wb {

struct Presentation {
  Regime regime = Regime::Free;
  int n = 0;
  std::vector<Generator> generators;
  std::vector<Word> relators;
  std::vector<std::string> relator_kinds;  // "commute-junction", "braid-junction", "ident", "braid", "commute", "delta"
};

Presentation emit_presentation(const Analysis& a, int n);
// Throws UnsupportedRegime when the network is outside the covered regimes.
std::string presentation_to_json(const Presentation& p);

// Oriented form for junction regimes: sigma^{..,b,a} with b < a becomes (sigma^{..,a,b})^-1.
Word orient(const Word& w);

// Rewrites onto {delta, canonical class symbols}; needs connectedness >= 2.
Word canonicalize(const Analysis& a, const Word& w);

enum class Verdict { Equal, Distinct, Unknown };
const char* to_string(Verdict v);

struct ProofStep {
  std::string rule;
  Word result;
};

struct EquivOptions {
  int depth = 10;
  size_t node_limit = 200000;
  // Look for a rewrite proof when a decision procedure already says equal.
  bool proof = true;
};

struct EquivResult {
  Verdict verdict = Verdict::Unknown;
  std::string method;
  // Rewrites from each side to a common word; both chains end at the same word.
  std::vector<ProofStep> lhs_chain, rhs_chain;
  int depth_used = 0;
  int bound = 0;
};

EquivResult equivalent(const Analysis& a, int n, const Word& u, const Word& v, const EquivOptions& opt = {});

// Bounded search only; returns Equal with a proof or Unknown.
EquivResult rewrite_search(const Analysis& a, int n, const Word& u, const Word& v, const EquivOptions& opt);

// Planar image used by the 3-connected regime: s -> sigma_1^eps, delta -> sigma_1...sigma_{n-1}.
std::vector<int> planar_image(const Analysis& a, int n, const Word& canonical);

}  // namespace wb
