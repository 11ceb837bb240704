#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process with captured streams.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "mpt/mpt.hpp"

namespace mpt::cli {

using nlohmann::json;

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

inline std::string approx_str(const Rational& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "≈%.6g", approx(v));
  return buf;
}

inline json to_json(const HypothesisVerdict& v) {
  return {{"name", v.name},          {"holds", v.holds},   {"lhs", to_string(v.lhs)},
          {"rhs", to_string(v.rhs)}, {"margin", to_string(v.margin)},
          {"strict", v.strict},      {"out_of_range", v.out_of_range}};
}

inline json to_json(const SearchOutcome& s) {
  json j{{"found", s.found}, {"mode", to_string(s.mode)}, {"nodes_explored", s.nodes_explored}};
  j["witness"] = s.witness ? json(s.witness->selection) : json(nullptr);
  j["witness_min_degree"] = s.witness_min_degree ? json(*s.witness_min_degree) : json(nullptr);
  j["is_strong"] = s.is_strong ? json(*s.is_strong) : json(nullptr);
  return j;
}

inline json to_json(const Thm5Report& rep) {
  json cases = json::array();
  for (const CaseVerdict& cv : rep.cases)
    cases.push_back({{"case", cv.label},
                     {"alpha", cv.alpha},
                     {"irregularity_ok", cv.irregularity_ok},
                     {"order_ok", cv.order_ok},
                     {"applies", cv.applies}});
  return {{"q", rep.q},
          {"delta_hypothesis", to_json(rep.delta_hypothesis)},
          {"cases", cases},
          {"min_alpha", to_string(rep.min_alpha)},
          {"min_alpha_f", rep.min_alpha_f ? json(to_string(*rep.min_alpha_f)) : json(nullptr)},
          {"min_alpha_passes", rep.min_alpha_passes},
          {"guarantees_witness", rep.guarantees_witness}};
}

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

class App {
 public:
  App(Streams s) : io_(s) {}

  int run(const std::vector<std::string>& args);

 private:
  struct Input {
    std::string path;
    std::string digest;
    Tournament tournament;
  };

  Input read_input(const std::string& path) const {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    return {path, sha256_hex(text), load(text)};
  }

  json record(const std::string& command, const json& input, const json& result) const {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_);
    json j{{"tool", "mpt"}, {"version", kVersion}, {"command", command}, {"argv", args_}};
    j["input"] = input;
    j["result"] = result;
    j["elapsed_ms"] = elapsed.count();
    return j;
  }

  static json input_json(const Input& in) { return {{"path", in.path}, {"sha256", in.digest}}; }

  void emit(const json& j) const { io_.out << j.dump() << '\n'; }

  int cmd_generate();
  int cmd_metrics();
  int cmd_count();
  int cmd_bounds();
  int cmd_threshold();
  int cmd_ratio();
  int cmd_search();
  int cmd_verify();

  Streams io_;
  std::vector<std::string> args_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

  // Parsed options, shared across subcommands.
  std::string file_;
  std::string output_;
  std::string kind_ = "random";
  std::string dir_ = "out";
  std::string mode_ = "exhaustive";
  std::string alpha_text_ = "1";
  int c_ = 0;
  int r_ = 0;
  int vertex_ = 0;
  int q_ = 0;
  int from_ = 0;
  int to_ = 0;
  int min_degree_ = -1;
  int repair_ig_ = -1;
  int workers_ = 1;
  std::uint64_t seed_ = 0;
  std::uint64_t budget_ = 0;
  std::uint64_t max_enum_ = kDefaultEnumerationCap;
  bool json_ = false;
  bool all_vertices_ = false;
};

inline int App::cmd_generate() {
  Tournament t = [&] {
    if (kind_ == "regular") return generate_regular(c_, r_);
    return generate_random(c_, r_, seed_);
  }();
  json result{{"kind", kind_}, {"c", c_}, {"r", r_}, {"seed", seed_}};
  if (repair_ig_ >= 0) {
    RepairResult rep = repair_to_irregularity(t, repair_ig_, budget_, seed_);
    result["repair"] = {{"target_ig", repair_ig_},
                        {"budget", budget_},
                        {"initial_ig", rep.initial_ig},
                        {"achieved_ig", rep.achieved_ig},
                        {"moves", rep.moves},
                        {"reached_target", rep.reached_target}};
    t = std::move(rep.tournament);
  }
  const std::string text = save(t);
  {
    std::ofstream out(output_, std::ios::binary);
    if (!out) throw Error("cannot write output file '" + output_ + "'");
    out << text;
  }
  result["output"] = output_;
  result["sha256"] = sha256_hex(text);
  result["global_irregularity"] = global_irregularity(t);
  result["local_partite_irregularity"] = local_partite_irregularity(t);
  if (json_) {
    emit(record("generate", nullptr, result));
  } else {
    io_.out << "wrote " << output_ << "  c=" << c_ << " r=" << r_ << " i_g=" << global_irregularity(t)
            << " mu=" << local_partite_irregularity(t);
    if (result.contains("repair"))
      io_.out << "  (repair: " << result["repair"]["moves"] << " moves, target "
              << (result["repair"]["reached_target"].get<bool>() ? "reached" : "not reached") << ")";
    io_.out << '\n';
  }
  return 0;
}

inline int App::cmd_metrics() {
  const Input in = read_input(file_);
  const Tournament& t = in.tournament;
  const Metrics m = metrics(t);
  const Rational beta(m.global_irregularity, m.r * (m.c - 1));
  const Thm5Report rep = thm5_applicable(t);
  if (json_) {
    json result{{"c", m.c},
                {"r", m.r},
                {"order", m.order},
                {"arcs", m.arcs},
                {"min_degree", m.min_degree},
                {"max_degree", m.max_degree},
                {"global_irregularity", m.global_irregularity},
                {"local_partite_irregularity", m.local_partite_irregularity},
                {"beta", to_string(beta)},
                {"existence", to_json(rep)}};
    emit(record("metrics", input_json(in), result));
    return 0;
  }
  auto row = [&](const std::string& k, const std::string& v) {
    io_.out << std::left << std::setw(28) << k << v << '\n';
  };
  row("c", std::to_string(m.c));
  row("r", std::to_string(m.r));
  row("order", std::to_string(m.order));
  row("arcs", std::to_string(m.arcs));
  row("min degree (delta)", std::to_string(m.min_degree));
  row("max degree (Delta)", std::to_string(m.max_degree));
  row("global irregularity i_g", std::to_string(m.global_irregularity));
  row("local partite irregularity", std::to_string(m.local_partite_irregularity));
  row("beta", to_string(beta) + "  " + approx_str(beta));
  row("existence q", std::to_string(rep.q));
  row("delta hypothesis", std::string(rep.delta_hypothesis.holds ? "holds" : "fails") +
                              (rep.delta_hypothesis.out_of_range ? " (out of range)" : ""));
  for (const CaseVerdict& cv : rep.cases) row("case " + cv.label, cv.applies ? "applies" : "-");
  row("minimal alpha (" + to_string(rep.min_alpha) + ")",
      rep.min_alpha_f ? std::string(rep.min_alpha_passes ? "passes " : "fails ") + approx_str(*rep.min_alpha_f)
                   : std::string("inapplicable"));
  row("witness guaranteed", rep.guarantees_witness ? "yes" : "no");
  return 0;
}

inline int App::cmd_count() {
  const Input in = read_input(file_);
  const Tournament& t = in.tournament;
  const Direction dir = dir_ == "in" ? Direction::in : Direction::out;
  std::vector<Vertex> vertices;
  if (all_vertices_) {
    for (Vertex x = 0; x < t.order(); ++x) vertices.push_back(x);
  } else {
    if (!t.contains(vertex_)) throw Error("vertex " + std::to_string(vertex_) + " out of range");
    vertices.push_back(vertex_);
  }
  json rows = json::array();
  for (Vertex x : vertices) {
    const CountVector cv = count_by_degree(t, x, dir);
    json counts = json::array();
    for (const BigInt& v : cv.counts) counts.push_back(to_string(v));
    const BigInt tq = t_q(t, x, q_, dir);
    rows.push_back({{"vertex", x}, {"counts", counts}, {"t_q", to_string(tq)}});
    if (!json_) {
      if (all_vertices_) {
        io_.out << std::setw(6) << x << "  " << std::setw(12) << to_string(tq) << "  [";
        for (std::size_t k = 0; k < cv.counts.size(); ++k) io_.out << (k ? " " : "") << to_string(cv.counts[k]);
        io_.out << "]\n";
      } else {
        io_.out << to_string(tq) << '\n';
      }
    }
  }
  if (json_) emit(record("count", input_json(in), {{"q", q_}, {"dir", dir_}, {"rows", rows}}));
  return 0;
}

inline int App::cmd_bounds() {
  const Input in = read_input(file_);
  const Tournament& t = in.tournament;
  const HypothesisVerdict h3 = thm3_hypothesis(t, q_);
  const Thm4Result t4 = thm4_bound(t, q_);
  json rows = json::array();
  bool violated = false;
  if (!json_) {
    io_.out << "thm3 hypothesis: " << (h3.holds ? "holds" : "fails") << (h3.out_of_range ? " (out of range)" : "")
            << "  delta=" << to_string(h3.lhs) << " rhs=" << to_string(h3.rhs) << " " << approx_str(h3.rhs) << '\n';
    io_.out << "beta = " << to_string(t4.beta) << "  condition beta < " << to_string(t4.beta_condition.lhs) << ": "
            << (t4.beta_condition.holds ? "holds" : "fails") << '\n';
    io_.out << "thm4 bound: " << (t4.bound ? to_string(*t4.bound) + "  " + approx_str(*t4.bound) : "absent") << "\n\n";
    io_.out << std::setw(6) << "vertex" << std::setw(5) << "dir" << std::setw(14) << "exact" << std::setw(16)
            << "thm3 bound" << std::setw(6) << "ok" << std::setw(6) << "thm4" << '\n';
  }
  for (Vertex x = 0; x < t.order(); ++x)
    for (Direction d : {Direction::out, Direction::in}) {
      const BoundReport rep = bound_report(t, x, q_, d);
      if (h3.holds && !h3.out_of_range && !rep.thm3_satisfied) violated = true;
      if (h3.holds && t4.beta_condition.holds && rep.thm4_satisfied && !*rep.thm4_satisfied) violated = true;
      json hyps = json::array();
      for (const auto& h : rep.hypotheses) hyps.push_back(to_json(h));
      rows.push_back({{"vertex", x},
                      {"dir", to_string(d)},
                      {"exact", to_string(rep.exact)},
                      {"thm3_bound", to_string(rep.thm3_bound)},
                      {"thm3_satisfied", rep.thm3_satisfied},
                      {"thm4_bound", rep.thm4_bound ? json(to_string(*rep.thm4_bound)) : json(nullptr)},
                      {"thm4_satisfied", rep.thm4_satisfied ? json(*rep.thm4_satisfied) : json(nullptr)},
                      {"hypotheses", hyps}});
      if (!json_) {
        io_.out << std::setw(6) << x << std::setw(5) << to_string(d) << std::setw(14) << to_string(rep.exact)
                << std::setw(16) << approx_str(rep.thm3_bound) << std::setw(6) << (rep.thm3_satisfied ? "yes" : "no")
                << std::setw(6) << (rep.thm4_satisfied ? (*rep.thm4_satisfied ? "yes" : "no") : "-") << '\n';
      }
    }
  if (json_) {
    json result{{"q", q_},
                {"thm3_hypothesis", to_json(h3)},
                {"beta", to_string(t4.beta)},
                {"beta_condition", to_json(t4.beta_condition)},
                {"thm4_bound", t4.bound ? json(to_string(*t4.bound)) : json(nullptr)},
                {"rows", rows},
                {"violations", violated}};
    emit(record("bounds", input_json(in), result));
  }
  return violated ? 1 : 0;
}

inline int App::cmd_threshold() {
  const Rational alpha = parse_rational(alpha_text_);
  const auto rows = threshold_table(alpha, from_, to_);
  if (json_) {
    json out = json::array();
    for (const ThresholdRow& row : rows)
      out.push_back({{"c", row.c},
                     {"q", row.q},
                     {"f_alpha", row.f_alpha ? json(to_string(*row.f_alpha)) : json(nullptr)},
                     {"g", to_string(row.g)},
                     {"passes", row.passes},
                     {"applicable", row.f_alpha.has_value()}});
    emit(record("threshold", nullptr, {{"alpha", to_string(alpha)}, {"rows", out}}));
    return 0;
  }
  io_.out << std::setw(5) << "c" << std::setw(4) << "q" << std::setw(16) << "f_alpha(c)" << std::setw(16)
          << "2^(c-2)" << std::setw(8) << "passes" << '\n';
  for (const ThresholdRow& row : rows) {
    io_.out << std::setw(5) << row.c << std::setw(4) << row.q << std::setw(16)
            << (row.f_alpha ? approx_str(*row.f_alpha) : std::string("inapplicable")) << std::setw(16)
            << to_string(row.g) << std::setw(8) << (row.passes ? "yes" : "no") << '\n';
  }
  return 0;
}

inline int App::cmd_ratio() {
  const Rational alpha = parse_rational(alpha_text_);
  if (from_ < 13 || from_ > to_) throw Error("ratio: need 13 <= --from <= --to");
  json out = json::array();
  bool all_ok = true;
  if (!json_)
    io_.out << std::setw(5) << "c" << std::setw(16) << "ratio" << std::setw(6) << "ok" << '\n';
  for (int c = from_; c <= to_; ++c) {
    try {
      const RatioCheck rc = ratio_check(alpha, c);
      all_ok = all_ok && rc.ok;
      out.push_back({{"c", c}, {"ratio", to_string(rc.ratio)}, {"ok", rc.ok}, {"applicable", true}});
      if (!json_)
        io_.out << std::setw(5) << c << std::setw(16) << approx_str(rc.ratio) << std::setw(6)
                << (rc.ok ? "yes" : "no") << '\n';
    } catch (const Error&) {
      out.push_back({{"c", c}, {"ratio", nullptr}, {"ok", nullptr}, {"applicable", false}});
      if (!json_) io_.out << std::setw(5) << c << std::setw(16) << "inapplicable" << std::setw(6) << "-" << '\n';
    }
  }
  if (json_) emit(record("ratio", nullptr, {{"alpha", to_string(alpha)}, {"rows", out}, {"all_ok", all_ok}}));
  return 0;
}

inline int App::cmd_search() {
  const Input in = read_input(file_);
  const Tournament& t = in.tournament;
  const int d = min_degree_ >= 0 ? min_degree_ : moon_threshold(t.parts());
  SearchOutcome s;
  if (mode_ == "heuristic") {
    s = heuristic_search(t, d, budget_ == 0 ? 1000 : budget_, seed_);
  } else {
    s = exhaustive_search(t, d, {.cap = max_enum_, .prune = true, .workers = workers_});
  }
  if (json_) {
    json result = to_json(s);
    result["min_degree"] = d;
    result["seed"] = seed_;
    emit(record("search", input_json(in), result));
    return 0;
  }
  io_.out << "mode " << to_string(s.mode) << ", target min degree " << d << ": "
          << (s.found ? "found" : (s.mode == SearchMode::heuristic ? "not found (inconclusive)" : "none exists"))
          << '\n';
  if (s.found) {
    io_.out << "witness";
    for (Vertex v : s.witness->selection) io_.out << ' ' << v;
    io_.out << "\nwitness min degree " << *s.witness_min_degree << ", strong " << (*s.is_strong ? "yes" : "no")
            << '\n';
  }
  io_.out << "nodes explored " << s.nodes_explored << '\n';
  return 0;
}

inline int App::cmd_verify() {
  const Input in = read_input(file_);
  const auto checks = verify_all(in.tournament, max_enum_);
  bool failed = false;
  json rows = json::array();
  for (const CheckResult& chk : checks) {
    failed = failed || chk.status == CheckStatus::fail;
    rows.push_back({{"name", chk.name}, {"status", to_string(chk.status)}, {"cases", chk.cases}, {"detail", chk.detail}});
    if (!json_)
      io_.out << std::left << std::setw(26) << chk.name << std::setw(9) << to_string(chk.status) << std::right
              << std::setw(10) << chk.cases << (chk.detail.empty() ? "" : "  " + chk.detail) << '\n';
  }
  if (json_) emit(record("verify", input_json(in), {{"checks", rows}, {"ok", !failed}}));
  return failed ? 1 : 0;
}

inline int App::run(const std::vector<std::string>& args) {
  args_ = args;
  CLI::App app{"Balanced multipartite tournaments: exact subtournament counts, bound certification and search", "mpt"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json_, "Emit one line of JSON instead of a table"); };
  auto add_file = [&](CLI::App* sub) { sub->add_option("FILE", file_, "Tournament in MPT format")->required(); };

  auto* gen = app.add_subcommand("generate", "Generate a balanced c-partite tournament");
  gen->add_option("--c", c_, "Number of parts")->required()->check(CLI::Range(2, 4096));
  gen->add_option("--r", r_, "Part size")->required()->check(CLI::Range(1, 4096));
  gen->add_option("--kind", kind_, "regular | random")->required()->check(CLI::IsMember({"regular", "random"}));
  gen->add_option("--seed", seed_, "Seed for random generation and repair (default 0)");
  auto* rig = gen->add_option("--repair-ig", repair_ig_, "Repair toward global irregularity <= T")->check(CLI::NonNegativeNumber);
  gen->add_option("--budget", budget_, "Repair move budget")->needs(rig);
  gen->add_option("-o,--output", output_, "Output file")->required();
  add_json(gen);

  auto* met = app.add_subcommand("metrics", "Degrees, irregularities and existence-regime report");
  add_file(met);
  add_json(met);

  auto* cnt = app.add_subcommand("count", "Count maximal subtournaments by degree of a vertex");
  add_file(cnt);
  auto* vopt = cnt->add_option("--vertex", vertex_, "Vertex id");
  cnt->add_option("--q", q_, "Degree bound q")->required()->check(CLI::NonNegativeNumber);
  cnt->add_option("--dir", dir_, "out | in")->required()->check(CLI::IsMember({"out", "in"}));
  auto* allv = cnt->add_flag("--all-vertices", all_vertices_, "Report every vertex");
  vopt->excludes(allv);
  add_json(cnt);

  auto* bnd = app.add_subcommand("bounds", "Compare exact counts against the binomial and uniform bounds");
  add_file(bnd);
  bnd->add_option("--q", q_, "Degree bound q")->required()->check(CLI::NonNegativeNumber);
  add_json(bnd);

  auto* thr = app.add_subcommand("threshold", "Tabulate f_alpha(c) against 2^(c-2)");
  thr->add_option("--alpha", alpha_text_, "Non-negative rational, e.g. 1, 3/2, 2.5")->required();
  thr->add_option("--from", from_, "First c (>= 5)")->required();
  thr->add_option("--to", to_, "Last c")->required();
  add_json(thr);

  auto* rat = app.add_subcommand("ratio", "Check f_alpha(c+4)/f_alpha(c) < 16");
  rat->add_option("--alpha", alpha_text_, "Non-negative rational")->required();
  rat->add_option("--from", from_, "First c (>= 13)")->required();
  rat->add_option("--to", to_, "Last c")->required();
  add_json(rat);

  auto* sea = app.add_subcommand("search", "Find a transversal subtournament with minimum degree >= D");
  add_file(sea);
  sea->add_option("--min-degree", min_degree_, "Target D (default floor((c-2)/4)+1)")->check(CLI::NonNegativeNumber);
  sea->add_option("--mode", mode_, "exhaustive | heuristic")->check(CLI::IsMember({"exhaustive", "heuristic"}));
  sea->add_option("--budget", budget_, "Heuristic restarts (default 1000)");
  sea->add_option("--seed", seed_, "Heuristic seed (default 0)");
  sea->add_option("--workers", workers_, "Exhaustive worker threads (default 1)")->check(CLI::Range(1, 256));
  sea->add_option("--max-enum", max_enum_, "Enumeration cap (default 10000000)");
  add_json(sea);

  auto* ver = app.add_subcommand("verify", "Run every applicable invariant suite");
  add_file(ver);
  ver->add_option("--max-enum", max_enum_, "Enumeration cap (default 10000000)");
  add_json(ver);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io_.out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    io_.out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    io_.out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    io_.err << "mpt: " << e.what() << '\n';
    return 2;
  }

  if (cnt->parsed() && !all_vertices_ && vopt->count() == 0) {
    io_.err << "mpt: count requires --vertex or --all-vertices\n";
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_generate();
    if (met->parsed()) return cmd_metrics();
    if (cnt->parsed()) return cmd_count();
    if (bnd->parsed()) return cmd_bounds();
    if (thr->parsed()) return cmd_threshold();
    if (rat->parsed()) return cmd_ratio();
    if (sea->parsed()) return cmd_search();
    if (ver->parsed()) return cmd_verify();
  } catch (const Error& e) {
    io_.err << "mpt: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

inline int run(int argc, char** argv, Streams io = {std::cout, std::cerr}) {
  std::vector<std::string> args(argv + 1, argv + argc);
  App app(io);
  return app.run(args);
}

}  // namespace mpt::cli
