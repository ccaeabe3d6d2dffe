#include "wirebraid/words.hpp"

#include <cctype>
#include <charconv>

namespace wb {

namespace {

const char* kTags[] = {"gamma'", "beta", "gamma_u", "gamma_d", "sigma_L", "sigma_R"};

void check_seq(const std::vector<int>& seq) {
  if (seq.size() < 2) throw Error(ErrorKind::Syntax, "simple braid needs at least two labels");
  for (int a : seq)
    if (a < 1) throw Error(ErrorKind::LabelRange, "labels start at 1, got " + std::to_string(a));
  if (seq[seq.size() - 2] == seq.back())
    throw Error(ErrorKind::RepeatedLabel, "exchanging branches must differ");
}

bool id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '-' ||
         c == ':' || c == '#' || c == '|';
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Word run() {
    Word w;
    skip_ws();
    while (i_ < s_.size()) {
      Generator g = gen();
      int k = 1;
      if (peek() == '^') {
        ++i_;
        k = integer();
      }
      int sign = k < 0 ? -1 : 1;
      for (int j = 0; j < k * sign; ++j) w.push_back({g, sign});
      if (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])))
        fail("expected whitespace between terms");
      skip_ws();
    }
    return w;
  }

 private:
  std::string_view s_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Syntax, why + " at offset " + std::to_string(i_));
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  std::string ident(char stop) {
    size_t b = i_;
    while (i_ < s_.size() && s_[i_] != stop && id_char(s_[i_])) ++i_;
    if (i_ == b) fail("expected identifier");
    return std::string(s_.substr(b, i_ - b));
  }
  int integer() {
    size_t b = i_;
    if (b >= s_.size()) fail("expected integer");
    if (peek() == '-' || peek() == '+') ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    int v = 0;
    const char* first = s_.data() + b + (s_[b] == '+' ? 1 : 0);
    auto [p, ec] = std::from_chars(first, s_.data() + i_, v);
    if (ec != std::errc() || p != s_.data() + i_) fail("expected integer");
    return v;
  }
  Generator gen() {
    char kind = peek();
    ++i_;
    expect('[');
    Generator g;
    switch (kind) {
      case 's': {
        SimpleBraid sb;
        sb.vertex = ident(';');
        expect(';');
        sb.seq.push_back(integer());
        while (peek() == ',') {
          ++i_;
          sb.seq.push_back(integer());
        }
        check_seq(sb.seq);
        g = sb;
        break;
      }
      case 'd': g = TotalBraid{ident(']')}; break;
      case 'g': g = OneParticle{ident(']')}; break;
      case 'm': {
        std::string name = ident(']');
        auto t = move_tag(name);
        if (!t) fail("unknown move tag '" + name + "'");
        g = NamedMove{*t};
        break;
      }
      default: --i_; fail("expected s[, d[, g[ or m[");
    }
    expect(']');
    return g;
  }
};

}  // namespace

const char* to_string(MoveTag t) { return kTags[static_cast<int>(t)]; }

std::optional<MoveTag> move_tag(std::string_view name) {
  for (int i = 0; i < 6; ++i)
    if (name == kTags[i]) return static_cast<MoveTag>(i);
  return std::nullopt;
}

Letter simple(std::string vertex, std::vector<int> seq, int exp) {
  check_seq(seq);
  return {SimpleBraid{std::move(vertex), std::move(seq)}, exp};
}
Letter total(std::string cycle, int exp) { return {TotalBraid{std::move(cycle)}, exp}; }
Letter one_particle(std::string cycle, int exp) { return {OneParticle{std::move(cycle)}, exp}; }
Letter named(MoveTag tag, int exp) { return {NamedMove{tag}, exp}; }

Word parse_word(std::string_view text, const Network* net) {
  Word w = Parser(text).run();
  if (net) {
    for (const Letter& l : w) {
      if (auto sb = std::get_if<SimpleBraid>(&l.gen)) {
        auto v = net->find_vertex(sb->vertex);
        if (!v) throw Error(ErrorKind::Syntax, "unknown vertex '" + sb->vertex + "'");
        int d = net->degree(*v);
        if (d < 3) throw Error(ErrorKind::Syntax, "vertex '" + sb->vertex + "' is not essential");
        for (int a : sb->seq)
          if (a >= d)
            throw Error(ErrorKind::LabelRange, "label " + std::to_string(a) + " at degree-" + std::to_string(d) +
                                                   " vertex '" + sb->vertex + "'");
      }
    }
  }
  return w;
}

std::string format_generator(const Generator& g) {
  if (auto sb = std::get_if<SimpleBraid>(&g)) {
    std::string out = "s[" + sb->vertex + ";";
    for (size_t k = 0; k < sb->seq.size(); ++k) out += (k ? "," : "") + std::to_string(sb->seq[k]);
    return out + "]";
  }
  if (auto d = std::get_if<TotalBraid>(&g)) return "d[" + d->cycle + "]";
  if (auto o = std::get_if<OneParticle>(&g)) return "g[" + o->cycle + "]";
  return std::string("m[") + to_string(std::get<NamedMove>(g).tag) + "]";
}

std::string format_word(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size();) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int k = static_cast<int>(j - i) * w[i].exp;
    if (!out.empty()) out += ' ';
    out += format_generator(w[i].gen);
    if (k != 1) out += "^" + std::to_string(k);
    i = j;
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word power(const Word& w, int k) {
  Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  size_t b = 0, e = r.size();
  while (e - b >= 2 && r[b].gen == r[e - 1].gen && r[b].exp == -r[e - 1].exp) {
    ++b;
    --e;
  }
  return Word(r.begin() + static_cast<long>(b), r.begin() + static_cast<long>(e));
}

bool is_single_particle(const Generator& g) {
  if (std::holds_alternative<OneParticle>(g)) return true;
  if (auto m = std::get_if<NamedMove>(&g)) return m->tag == MoveTag::GammaU || m->tag == MoveTag::GammaD;
  return false;
}

Word quotient_one_particle(const Word& w) {
  Word out;
  for (const Letter& l : w)
    if (!is_single_particle(l.gen)) out.push_back(l);
  return free_reduce(out);
}

std::string lollipop_id(const std::string& vertex, int branch) { return vertex + "." + std::to_string(branch); }

std::string lollipop_loop_id(const std::string& vertex, int branch, int park) {
  return lollipop_id(vertex, branch) + "." + std::to_string(park);
}

std::optional<LollipopRef> parse_lollipop_id(std::string_view id) {
  auto num = [](std::string_view s) -> std::optional<int> {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 1) return std::nullopt;
    return v;
  };
  auto dot = id.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  auto last = num(id.substr(dot + 1));
  if (!last) return std::nullopt;
  std::string_view head = id.substr(0, dot);
  auto dot2 = head.rfind('.');
  if (dot2 != std::string_view::npos) {
    if (auto mid = num(head.substr(dot2 + 1)))
      return LollipopRef{std::string(head.substr(0, dot2)), *mid, *last};
  }
  if (head.empty()) return std::nullopt;
  return LollipopRef{std::string(head), *last, 0};
}

std::string theta_loop_id(const std::string& v, const std::string& w) { return v + "|" + w; }

}  // namespace wb
