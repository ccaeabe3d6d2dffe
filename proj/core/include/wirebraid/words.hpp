#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wirebraid/network.hpp"

namespace wb {

struct SimpleBraid {
  std::string vertex;
  std::vector<int> seq;  // (a_1, ..., a_{i+1})
  int index() const { return static_cast<int>(seq.size()) - 1; }
  bool operator==(const SimpleBraid&) const = default;
};

struct TotalBraid {
  std::string cycle;
  bool operator==(const TotalBraid&) const = default;
};

struct OneParticle {
  std::string cycle;
  bool operator==(const OneParticle&) const = default;
};

enum class MoveTag { GammaPrime, Beta, GammaU, GammaD, SigmaL, SigmaR };

struct NamedMove {
  MoveTag tag{};
  bool operator==(const NamedMove&) const = default;
};

using Generator = std::variant<SimpleBraid, TotalBraid, OneParticle, NamedMove>;

struct Letter {
  Generator gen;
  int exp = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
  Letter inverse() const { return {gen, -exp}; }
};

using Word = std::vector<Letter>;

const char* to_string(MoveTag t);
std::optional<MoveTag> move_tag(std::string_view name);

// Letters built by hand throw the same errors as the parser.
Letter simple(std::string vertex, std::vector<int> seq, int exp = 1);
Letter total(std::string cycle, int exp = 1);
Letter one_particle(std::string cycle, int exp = 1);
Letter named(MoveTag tag, int exp = 1);

// Syntax only unless `net` is given, in which case vertices must be essential and
// labels must lie in 1..d-1.
Word parse_word(std::string_view text, const Network* net = nullptr);
std::string format_generator(const Generator& g);
std::string format_word(const Word& w);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int k);
Word free_reduce(const Word& w);
// Cyclically and freely reduced form, used to deduplicate relators.
Word cyclic_reduce(const Word& w);

bool is_single_particle(const Generator& g);
Word quotient_one_particle(const Word& w);

enum class Direction { Forward, Backward };

// Pseudo-commutation rewrite at letters pos, pos+1.
Word apply_pseudo_commutative(const Word& w, size_t pos, Direction dir);
// Pseudo-braid rewrite at letters pos..pos+2; the vertex needs degree >= 4.
Word apply_pseudo_braid(const Network& net, const Word& w, size_t pos, Direction dir);

// Conjugate: sigma_i^{(c,..,c,p,c)} = d^{i-1} sigma_1^{(p,c)} d^{1-i}.
// Loop: g[v.c.p] = sigma_{n-1}^{(p..p,c)} ... sigma_1^{(p,c)} d.
// Shift: sigma_i^{(c,a_2..)} = d sigma_{i-1}^{(a_2..)} d^-1.
enum class LollipopRule { Conjugate, Loop, Shift };

// Lollipop ids are "<vertex>.<branch>"; one-particle lollipop loops are
// "<vertex>.<loop branch>.<parking branch>".
std::string lollipop_id(const std::string& vertex, int branch);
std::string lollipop_loop_id(const std::string& vertex, int branch, int park);
struct LollipopRef {
  std::string vertex;
  int branch = 0;
  int park = 0;  // 0 when absent
};
std::optional<LollipopRef> parse_lollipop_id(std::string_view id);

// n is the particle count (used by the loop rule only).
Word apply_lollipop(const Network& net, const SpanningTree& tree, const Word& w, size_t pos,
                    LollipopRule rule, const LollipopSubgraph& lollipop, Direction dir, int n);

// Theta relations: d gamma = gamma' d and s[w;2,1] gamma = gamma' s[v;2,1].
enum class ThetaRule { Delta, Swap };
std::string theta_loop_id(const std::string& v, const std::string& w);
struct ThetaRef {
  std::string v, w;
};
Word apply_theta(const Word& w, size_t pos, ThetaRule rule, const ThetaRef& theta, Direction dir);
// The two relations as (lhs, rhs) pairs, with `delta` as the total braid letter.
std::pair<Word, Word> theta_relation(ThetaRule rule, const ThetaRef& theta, const Letter& delta);

}  // namespace wb
