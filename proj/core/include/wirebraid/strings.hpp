#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wirebraid/choreography.hpp"
#include "wirebraid/network.hpp"
#include "wirebraid/words.hpp"

namespace wb {

// Anyons 2k+1 and 2k+2 are paired; strings[k] runs from the odd anyon to the even one.
struct StringConfiguration {
  std::vector<VId> position;  // position[a-1]
  std::vector<std::vector<VId>> strings;

  int anyons() const { return static_cast<int>(position.size()); }
  bool operator==(const StringConfiguration&) const = default;
};

// Same occupied vertices per anyon and the same string paths up to orientation.
bool same_configuration(const StringConfiguration& a, const StringConfiguration& b);

// Base configuration of the choreographer. For odd n an extra spectator (anyon n+1)
// sits at the root so that every anyon has a partner.
StringConfiguration initial_configuration(const Choreographer& c);

// Throws OutOfRange when a string is not a simple path between its pair.
void check_configuration(const Network& fine, const StringConfiguration& cfg);

// The token at m.from hops to m.to. Its string retracts when m.to is the next vertex
// along it and extends otherwise. Throws IllegalMove (collision, no token, not
// adjacent) or SelfIntersection.
StringConfiguration apply_move(const Network& fine, StringConfiguration cfg, const FineMove& m);

// A move sequence is a list of hops; the moving anyon is whichever sits at `from`.
using MoveSequence = std::vector<FineMove>;

// Throws PatternMismatch unless every label is 1 or 2, a_i != a_{i+1}, and
// a_k = a_{k+1} for every pair (k, k+1) parked before the exchange (k odd, k+1 < i).
void check_string_superscript(const SimpleBraid& g);
MoveSequence expand_simple_braid(const Choreographer& c, const SimpleBraid& g);
MoveSequence expand_word(const Choreographer& c, const Word& w);

struct RunResult {
  StringConfiguration final;
  std::vector<int> permutation;  // anyon found at the start position of anyon i+1, 0 if empty
  int crossings = 0;
  int moves_done = 0;
  bool ok = true;
  bool self_intersection = false;
  std::string diagnostics;
};

// Frames are written to `trace` as JSON lines when given.
RunResult run_sequence(const Network& fine, const StringConfiguration& start, const MoveSequence& seq,
                       std::ostream* trace = nullptr);

enum class H1Agreement { Exact, ModOneParticle, Different, NotClosed };
const char* to_string(H1Agreement h);

struct StringRelationReport {
  std::string lhs, rhs;
  RunResult lhs_run, rhs_run;
  bool configurations_agree = false;
  bool permutations_agree = false;
  H1Agreement h1 = H1Agreement::Different;
  bool quotient_allowed = false;
  bool pass = false;
};

// Expands both words from the base configuration of `n` anyons and compares the
// results; H1 classes come from the configuration-space oracle of lhs rhs^-1.
StringRelationReport verify_string_relation(const Network& net, int n, const Word& lhs, const Word& rhs,
                                            bool allow_quotient);

struct ThetaReport {
  std::string v, w;
  int n = 0, j = 0;
  bool swapped = false;  // top and bottom arcs exchanged
  RunResult run;
  bool configuration_preserved = false;
  bool identity = false;
  H1Agreement h1 = H1Agreement::Different;
  int self_intersections = 0;
  bool pass = false;
  std::string note;
};

struct ThetaOptions {
  int n = 2;
  bool omit_sigma_r = false;
};

// beta sigma_L gamma_u gamma_d (gamma_d gamma_u sigma_R)^-1 beta^-1 on the first theta
// subgraph with room to park anyons 1..j-1 beyond w; j = n-1, n even.
ThetaReport theta_composite(const Network& net, const ThetaOptions& opt);

std::string run_result_to_json(const RunResult& r);
std::string string_relation_to_json(const StringRelationReport& r);
std::string theta_report_to_json(const ThetaReport& r);

struct NamedRelation {
  std::string name;
  int n = 0;
  bool pass = false;
  std::string json;
  std::string summary;
};

// simple-odd, simple-even, commute, lollipop1, lollipop2, almost-braid, theta.
// n <= 0 picks the relation's default particle count.
NamedRelation run_named_relation(const Network& net, const std::string& name, int n = 0,
                                 std::ostream* trace = nullptr);
const std::vector<std::string>& relation_names();

}  // namespace wb
