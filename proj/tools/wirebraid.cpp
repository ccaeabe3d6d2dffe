// wirebraid: command-line front end. JSON reports go to stdout, one-line summaries
// to stderr. Exit codes: 0 ok, 1 a mathematical check failed, 2 usage or input error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wirebraid/analysis.hpp"
#include "wirebraid/oracle.hpp"
#include "wirebraid/presentation.hpp"
#include "wirebraid/representations.hpp"
#include "wirebraid/strings.hpp"

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kSchema = 1;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wb::Error(wb::ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// FNV-1a, enough to tell inputs apart in a report.
std::string digest(const std::string& text) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

struct Report {
  explicit Report(std::string c) : command(std::move(c)) {}

  std::string command;
  json inputs = json::object();
  json result;
  bool pass = true;
  Clock::time_point start = Clock::now();

  void input(const std::string& name, const std::string& path, const std::string& text) {
    inputs[name] = {{"path", path}, {"fnv1a64", digest(text)}};
  }
  int emit(const std::string& summary) const {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = result;
    j["pass"] = pass;
    j["timing_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    std::cout << j.dump(2) << '\n';
    std::cerr << command << ": " << summary << '\n';
    return pass ? 0 : 1;
  }
};

json parsed(const std::string& text) { return json::parse(text); }

// Largest simple-braid index plus one, at least 2.
int particles_for(const wb::Word& w) {
  int n = 2;
  for (const wb::Letter& l : w)
    if (auto sb = std::get_if<wb::SimpleBraid>(&l.gen)) n = std::max(n, sb->index() + 1);
  return n;
}

json chain_json(const std::vector<wb::ProofStep>& chain) {
  json out = json::array();
  for (const auto& s : chain) out.push_back({{"rule", s.rule}, {"word", wb::format_word(s.result)}});
  return out;
}

struct Opts {
  std::string net, word, w1, w2, gates, relation, trace;
  int n = 0, depth = 10;
  uint64_t cap = 0;
  double tol = 1e-10;
};

int cmd_analyze(const Opts& o) {
  Report r{"analyze"};
  std::string text = slurp(o.net);
  r.input("network", o.net, text);
  wb::Analysis a = wb::analyze(wb::load_network(text));
  r.result = parsed(wb::analysis_to_json(a));
  return r.emit("connectedness " + std::to_string(a.connectedness) + ", regime " + wb::to_string(a.regime));
}

int cmd_presentation(const Opts& o) {
  Report r{"presentation"};
  std::string text = slurp(o.net);
  r.input("network", o.net, text);
  wb::Analysis a = wb::analyze(wb::load_network(text));
  wb::Presentation p = wb::emit_presentation(a, o.n);
  r.result = parsed(wb::presentation_to_json(p));
  return r.emit(std::to_string(p.generators.size()) + " generators, " + std::to_string(p.relators.size()) +
                " relators");
}

int cmd_reduce(const Opts& o) {
  Report r{"reduce"};
  std::string text = slurp(o.net);
  r.input("network", o.net, text);
  wb::Network net = wb::load_network(text);
  wb::Analysis a = wb::analyze(net);
  wb::Word w = wb::parse_word(o.word, &net);
  const int n = o.n > 0 ? o.n : particles_for(w);
  json res;
  res["n"] = n;
  res["input"] = wb::format_word(w);
  res["free_reduced"] = wb::format_word(wb::free_reduce(w));
  res["one_particle_quotient"] = wb::format_word(wb::quotient_one_particle(w));
  if (a.regime == wb::Regime::TwoConnected || a.regime == wb::Regime::ThreeConnected)
    res["canonical"] = wb::format_word(wb::canonicalize(a, w));
  wb::EquivResult e = wb::equivalent(a, n, w, {}, {o.depth});
  res["trivial"] = wb::to_string(e.verdict);
  res["method"] = e.method;
  if (e.verdict == wb::Verdict::Equal) res["proof"] = chain_json(e.lhs_chain);
  r.result = res;
  return r.emit(res["free_reduced"].get<std::string>() + " (trivial: " + wb::to_string(e.verdict) + ")");
}

int cmd_equiv(const Opts& o) {
  Report r{"equiv"};
  std::string text = slurp(o.net);
  r.input("network", o.net, text);
  wb::Network net = wb::load_network(text);
  wb::Analysis a = wb::analyze(net);
  wb::Word u = wb::parse_word(o.w1, &net), v = wb::parse_word(o.w2, &net);
  const int n = o.n > 0 ? o.n : std::max(particles_for(u), particles_for(v));
  wb::EquivResult e = wb::equivalent(a, n, u, v, {o.depth});
  json res;
  res["n"] = n;
  res["w1"] = wb::format_word(u);
  res["w2"] = wb::format_word(v);
  res["verdict"] = wb::to_string(e.verdict);
  res["method"] = e.method;
  res["depth_used"] = e.depth_used;
  res["bound"] = e.bound;
  res["w1_chain"] = chain_json(e.lhs_chain);
  res["w2_chain"] = chain_json(e.rhs_chain);
  r.result = res;
  r.pass = e.verdict == wb::Verdict::Equal;
  return r.emit(std::string(wb::to_string(e.verdict)) + " via " + e.method);
}

int cmd_oracle(const Opts& o) {
  Report r{"oracle"};
  std::string text = slurp(o.net);
  r.input("network", o.net, text);
  wb::Oracle oracle(wb::load_network(text), o.n, o.cap > 0 ? o.cap : wb::default_cell_cap());
  wb::OracleReport rep = oracle.report();
  r.result = parsed(wb::oracle_report_to_json(rep));
  std::string freeness = rep.free ? "free" : "freeness unknown";
  return r.emit("h1_rank " + std::to_string(rep.h1_rank) + ", euler " + std::to_string(rep.euler) + ", " + freeness +
                " on " + std::to_string(rep.generators));
}

int cmd_repcheck(const Opts& o) {
  Report r{"repcheck"};
  std::string text = slurp(o.net), gtext = slurp(o.gates);
  r.input("network", o.net, text);
  r.input("gates", o.gates, gtext);
  wb::Analysis a = wb::analyze(wb::load_network(text));
  wb::Presentation p = wb::emit_presentation(a, o.n);
  wb::UnitaryAssignment u = wb::modular_assignment(a, o.n, wb::load_gate_families(gtext, a, o.n));
  u.tolerance = o.tol;
  wb::VerifyReport rep = wb::verify_presentation(u, p);
  r.result = parsed(wb::verify_report_to_json(rep, o.tol));
  r.pass = rep.pass;
  std::ostringstream ss;
  ss << p.relators.size() << " relators, max residual " << rep.max_residual;
  return r.emit(ss.str());
}

int cmd_strings(const Opts& o) {
  Report r{"strings"};
  std::string text = slurp(o.net);
  r.input("network", o.net, text);
  std::ofstream trace;
  if (!o.trace.empty()) {
    trace.open(o.trace);
    if (!trace) throw wb::Error(wb::ErrorKind::Parse, "cannot write '" + o.trace + "'");
  }
  wb::NamedRelation nr = wb::run_named_relation(wb::load_network(text), o.relation, o.n, o.trace.empty() ? nullptr : &trace);
  r.result = parsed(nr.json);
  r.pass = nr.pass;
  return r.emit(nr.summary);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid groups of anyons on planar networks", "wirebraid"};
  app.require_subcommand(1);
  Opts o;
  auto net = [&](CLI::App* c) { c->add_option("network", o.net, "network JSON file")->required(); };

  auto* analyze = app.add_subcommand("analyze", "connectedness, essential vertices, junction classes");
  net(analyze);

  auto* pres = app.add_subcommand("presentation", "emit the braid group presentation");
  net(pres);
  pres->add_option("-n", o.n, "number of anyons")->required()->check(CLI::Range(1, 64));

  auto* reduce = app.add_subcommand("reduce", "reduce a word and test it against the identity");
  net(reduce);
  reduce->add_option("-w,--word", o.word, "braid word")->required();
  reduce->add_option("-n", o.n, "number of anyons (default: from the word)");
  reduce->add_option("--depth", o.depth, "rewrite depth")->check(CLI::Range(0, 64));

  auto* equiv = app.add_subcommand("equiv", "decide whether two words are equal");
  net(equiv);
  equiv->add_option("--w1,-1", o.w1, "first word")->required();
  equiv->add_option("--w2,-2", o.w2, "second word")->required();
  equiv->add_option("-n", o.n, "number of anyons (default: from the words)");
  equiv->add_option("--depth", o.depth, "rewrite depth")->check(CLI::Range(0, 64));

  auto* oracle = app.add_subcommand("oracle", "brute-force configuration space");
  net(oracle);
  oracle->add_option("-n", o.n, "number of anyons")->required()->check(CLI::Range(1, 16));
  oracle->add_option("--cap", o.cap, "cell cap (default: $WIREBRAID_CELL_CAP or 2000000)");

  auto* rep = app.add_subcommand("repcheck", "check a unitary assignment against the presentation");
  net(rep);
  rep->add_option("-n", o.n, "number of anyons")->required()->check(CLI::Range(2, 13));
  rep->add_option("--gates", o.gates, "gate file")->required();
  rep->add_option("--tol", o.tol, "residual tolerance");

  auto* strings = app.add_subcommand("strings", "Majorana string simulations");
  net(strings);
  std::string names;
  for (const auto& s : wb::relation_names()) names += (names.empty() ? "" : ", ") + s;
  strings->add_option("--relation", o.relation, names)->required()->check(CLI::IsMember(wb::relation_names()));
  strings->add_option("-n", o.n, "number of anyons (default per relation)");
  strings->add_option("--trace", o.trace, "write frames as JSON lines");

  // "-w1"/"-w2" are single-dash long flags, which CLI11 does not parse.
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string s = argv[i];
    if (s == "-w1") s = "--w1";
    else if (s == "-w2") s = "--w2";
    args.push_back(s);
  }
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*pres) return cmd_presentation(o);
    if (*reduce) return cmd_reduce(o);
    if (*equiv) return cmd_equiv(o);
    if (*oracle) return cmd_oracle(o);
    if (*rep) return cmd_repcheck(o);
    if (*strings) return cmd_strings(o);
  } catch (const wb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
