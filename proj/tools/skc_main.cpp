// skc: exact and greedy Dodgson solvers, junta-distribution checkers, and
// Monte Carlo bound verification behind one reproducible command line.
//
// Exit status: 0 all checks pass, 1 any failed check or guard error,
// 2 usage/config/parse error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "skc/benign.hpp"
#include "skc/dodgson.hpp"
#include "skc/elections.hpp"
#include "skc/junta.hpp"
#include "skc/mc.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr double kConfidenceLevel = 0.99;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw skc::ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << content;
}

struct GridPoint {
  int m = 0;
  int n = 0;
};

std::vector<GridPoint> parse_grid(const std::string& text) {
  std::vector<GridPoint> grid;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto x = item.find('x');
    if (x == std::string::npos)
      throw CLI::ValidationError("--grid", "expected MxN items, got '" + item + "'");
    try {
      GridPoint p{std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1))};
      if (p.m < 2 || p.n < 1)
        throw CLI::ValidationError("--grid", "need m >= 2 and n >= 1 in '" + item + "'");
      grid.push_back(p);
    } catch (const std::invalid_argument&) {
      throw CLI::ValidationError("--grid", "non-integer sizes in '" + item + "'");
    }
  }
  if (grid.empty()) throw CLI::ValidationError("--grid", "grid is empty");
  return grid;
}

skc::LengthRange parse_lengths(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    skc::LengthRange r{std::stoi(text.substr(0, dots)),
                       std::stoi(text.substr(dots + 2))};
    if (r.hi < r.lo)
      throw CLI::ValidationError("--lengths", "empty range '" + text + "'");
    return r;
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--lengths", "expected LO..HI, got '" + text + "'");
  }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
  if (flag_seed) return *flag_seed;
  if (const char* env = std::getenv("SKC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("SKC_SEED", std::string("not an integer: ") + env);
    }
  }
  return 1;
}

// ---- score -----------------------------------------------------------------

int cmd_score(const std::string& input, const std::string& format,
              const std::string& out_path) {
  const std::string text = read_file(input);
  skc::Election election;
  std::vector<std::string> names;
  if (text.find("NUMBER ALTERNATIVES") != std::string::npos) {
    skc::NamedElection named = skc::parse_preflib(text);
    election = std::move(named.election);
    names = std::move(named.names);
  } else {
    election = skc::parse_election(text);
  }

  struct Row {
    skc::CandidateId candidate;
    skc::Score exact;
    skc::SkcOutput<skc::Score> greedy;
  };
  std::vector<Row> rows;
  for (skc::CandidateId c = 0; c < election.m; ++c)
    rows.push_back({c, skc::exact_score_lift({election, c}),
                    skc::greedy_score({election, c})});
  const std::vector<skc::CandidateId> winners = skc::dodgson_winners_exact(election);

  auto winner_list = [&] {
    std::string s;
    for (std::size_t i = 0; i < winners.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(winners[i]);
    }
    return s;
  }();

  std::ostringstream out;
  if (format == "csv") {
    out << "# skc score v1\n";
    out << "# m=" << election.m << " n=" << election.voters() << "\n";
    out << "candidate,exact,greedy_value,greedy_flag\n";
    for (const Row& r : rows)
      out << r.candidate << ',' << r.exact << ',' << r.greedy.value << ','
          << skc::flag_name(r.greedy.flag) << '\n';
    out << "# winners," << winner_list << '\n';
  } else if (format == "json-lines") {
    json header;
    header["record"] = "header";
    header["command"] = "score";
    header["m"] = election.m;
    header["n"] = election.voters();
    out << header.dump() << '\n';
    for (const Row& r : rows) {
      json j;
      j["record"] = "row";
      j["candidate"] = r.candidate;
      if (!names.empty()) j["name"] = names[static_cast<std::size_t>(r.candidate)];
      j["exact"] = r.exact;
      j["greedy_value"] = r.greedy.value;
      j["greedy_flag"] = skc::flag_name(r.greedy.flag);
      out << j.dump() << '\n';
    }
    json trailer;
    trailer["record"] = "winners";
    trailer["candidates"] = winners;
    out << trailer.dump() << '\n';
  } else {
    out << "election: m=" << election.m << " n=" << election.voters() << "\n";
    out << "candidate  exact  greedy\n";
    for (const Row& r : rows) {
      out << "        " << r.candidate << "      " << r.exact << "  ("
          << r.greedy.value << ", " << skc::flag_name(r.greedy.flag) << ")";
      if (!names.empty() && !names[static_cast<std::size_t>(r.candidate)].empty())
        out << "  " << names[static_cast<std::size_t>(r.candidate)];
      out << '\n';
    }
    out << "winners: " << winner_list << '\n';
  }
  write_output(out_path, out.str());
  return 0;
}

// ---- mc --------------------------------------------------------------------

int cmd_mc(const std::vector<GridPoint>& grid, std::uint64_t trials,
           std::uint64_t seed, const std::string& format,
           const std::string& out_path) {
  struct Row {
    skc::FrequencyEstimate est;
    double ci = 0;
    double bound = 0;
    bool pass = false;
  };
  std::vector<Row> rows;
  bool all_pass = true;
  for (const skc::McEvent event :
       {skc::McEvent::not_nice, skc::McEvent::any_candidate_maybe}) {
    for (const GridPoint& p : grid) {
      Row row;
      row.est = skc::estimate_event(event, p.m, p.n, trials, seed);
      row.ci = skc::confidence_upper(row.est, kConfidenceLevel);
      row.bound = event == skc::McEvent::not_nice
                      ? skc::bound_lemma_a3(p.m, p.n)
                      : skc::bound_thm_a4(p.m, p.n);
      // the analytic bound only binds when it is below 1
      row.pass = row.bound >= 1.0 || row.ci <= row.bound;
      all_pass = all_pass && row.pass;
      rows.push_back(row);
    }
  }

  auto grid_str = [&] {
    std::string s;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(grid[i].m) + "x" + std::to_string(grid[i].n);
    }
    return s;
  }();

  std::ostringstream out;
  if (format == "json-lines") {
    json header;
    header["record"] = "header";
    header["command"] = "mc";
    header["seed"] = seed;
    header["trials"] = trials;
    header["grid"] = grid_str;
    header["level"] = fmt_double(kConfidenceLevel);
    out << header.dump() << '\n';
    for (const Row& r : rows) {
      json j;
      j["record"] = "row";
      j["event"] = skc::event_name(r.est.event);
      j["m"] = r.est.m;
      j["n"] = r.est.n;
      j["trials"] = r.est.trials;
      j["successes"] = r.est.successes;
      j["p_hat"] = fmt_double(r.est.p_hat());
      j["ci99_upper"] = fmt_double(r.ci);
      j["bound"] = fmt_double(r.bound);
      j["pass"] = r.pass;
      out << j.dump() << '\n';
    }
  } else if (format == "text") {
    out << "seed=" << seed << " trials=" << trials << " grid=" << grid_str
        << " level=" << fmt_double(kConfidenceLevel) << "\n";
    out << "event m n successes p_hat ci99_upper bound pass\n";
    for (const Row& r : rows)
      out << skc::event_name(r.est.event) << ' ' << r.est.m << ' ' << r.est.n
          << ' ' << r.est.successes << ' ' << fmt_double(r.est.p_hat()) << ' '
          << fmt_double(r.ci) << ' ' << fmt_double(r.bound) << ' '
          << (r.pass ? "true" : "false") << '\n';
  } else {
    out << "# skc mc v1\n";
    out << "# seed=" << seed << " trials=" << trials << " grid=" << grid_str
        << " level=" << fmt_double(kConfidenceLevel) << "\n";
    out << "event,m,n,trials,successes,p_hat,ci99_upper,bound,pass\n";
    for (const Row& r : rows)
      out << skc::event_name(r.est.event) << ',' << r.est.m << ',' << r.est.n
          << ',' << r.est.trials << ',' << r.est.successes << ','
          << fmt_double(r.est.p_hat()) << ',' << fmt_double(r.ci) << ','
          << fmt_double(r.bound) << ',' << (r.pass ? "true" : "false") << '\n';
  }
  write_output(out_path, out.str());
  return all_pass ? 0 : 1;
}

// ---- junta -----------------------------------------------------------------

int cmd_junta(const skc::LengthRange& lengths, const std::string& ensemble,
              const std::string& format, const std::string& out_path) {
  const skc::PiercedSet ps = skc::toy_pierced_sat();
  const skc::JuntaCheckParams params;
  const skc::DistributionEnsemble e =
      ensemble == "uniform" ? skc::uniform_ensemble() : skc::junta_nu(ps);
  const skc::JuntaReport report = skc::run_junta_checks(
      e, ps.member, skc::pierced_heuristic(ps), ps.threshold, params, lengths);

  std::ostringstream out;
  if (format == "json-lines") {
    json header;
    header["record"] = "header";
    header["command"] = "junta";
    header["version"] = report.version;
    header["lengths"] = std::to_string(lengths.lo) + ".." + std::to_string(lengths.hi);
    header["threshold"] = report.threshold;
    header["ensemble"] = ensemble;
    out << header.dump() << '\n';
    for (const auto& rec : report.records) {
      json j;
      j["record"] = "row";
      j["n"] = rec.n;
      j["in_mass"] = skc::fraction_str(rec.in_mass);
      j["min_nonzero"] = skc::fraction_str(rec.min_nonzero);
      j["max_ratio"] = skc::fraction_str(rec.max_ratio);
      out << j.dump() << '\n';
    }
    json trailer;
    trailer["record"] = "verdicts";
    trailer["balance"] = report.balance.pass;
    trailer["dichotomy"] = report.dichotomy.pass;
    trailer["almost_uniformity"] = report.almost_uniformity.pass;
    trailer["heuristic_bound"] = report.heuristic.pass;
    trailer["vacuous"] = report.any_vacuous;
    trailer["hardness"] = "assumed-not-checked";
    out << trailer.dump() << '\n';
  } else if (format == "csv") {
    out << skc::junta_report_csv(report);
  } else {
    out << skc::junta_report_text(report);
  }
  write_output(out_path, out.str());

  const bool all_pass = report.balance.pass && report.dichotomy.pass &&
                        report.almost_uniformity.pass && report.heuristic.pass;
  return all_pass ? 0 : 1;
}

// ---- wrapper-demo ----------------------------------------------------------

int cmd_wrapper_demo(const skc::LengthRange& lengths, const std::string& input,
                     const std::string& format, const std::string& out_path) {
  if (lengths.lo < 1 || lengths.hi > 12)
    throw CLI::ValidationError("--lengths", "wrapper-demo supports 1..12");

  skc::TargetFn target;
  if (!input.empty()) {
    const skc::FunctionTable table = skc::FunctionTable::parse(read_file(input));
    if (!table.covers_all_lengths_through(lengths.hi))
      throw skc::ParseError("function table does not cover all lengths through " +
                            std::to_string(lengths.hi));
    target = table.as_function();
  } else {
    target = [](const skc::BitString& x) {
      return static_cast<std::uint64_t>(skc::popcount(x) & 1);
    };
  }

  struct Row {
    int n;
    skc::Rational fraction;
    skc::Rational bound;
    bool pass;
  };
  std::vector<Row> rows;
  bool all_pass = true;
  for (int n = lengths.lo; n <= lengths.hi; ++n) {
    // worst case per length: the adversarial scheme concentrates its "?"
    // budget at the measured length
    const auto alg = skc::wrap_benign<std::uint64_t>(
        skc::adversarial_benign_scheme(target, n), 0);
    Row row;
    row.n = n;
    row.fraction = skc::maybe_fraction<std::uint64_t>(alg, n);
    row.bound = skc::make_ratio(skc::Integer(n), skc::Integer(n + 1) * (n + 1));
    row.pass = row.fraction <= row.bound;
    all_pass = all_pass && row.pass;
    rows.push_back(std::move(row));
  }

  std::ostringstream out;
  if (format == "json-lines") {
    json header;
    header["record"] = "header";
    header["command"] = "wrapper-demo";
    header["lengths"] = std::to_string(lengths.lo) + ".." + std::to_string(lengths.hi);
    header["target"] = input.empty() ? "parity" : input;
    out << header.dump() << '\n';
    for (const Row& r : rows) {
      json j;
      j["record"] = "row";
      j["n"] = r.n;
      j["fraction"] = skc::fraction_str(r.fraction);
      j["bound"] = skc::fraction_str(r.bound);
      j["pass"] = r.pass;
      out << j.dump() << '\n';
    }
  } else if (format == "text") {
    out << "lengths=" << lengths.lo << ".." << lengths.hi << " target="
        << (input.empty() ? "parity" : input) << '\n';
    out << "n fraction bound pass\n";
    for (const Row& r : rows)
      out << r.n << ' ' << skc::fraction_str(r.fraction) << ' '
          << skc::fraction_str(r.bound) << ' ' << (r.pass ? "true" : "false")
          << '\n';
  } else {
    out << "# skc wrapper-demo v1\n";
    out << "# lengths=" << lengths.lo << ".." << lengths.hi << " target="
        << (input.empty() ? "parity" : input) << '\n';
    out << "n,fraction_num,fraction_den,bound_num,bound_den,pass\n";
    for (const Row& r : rows)
      out << r.n << ',' << r.fraction.get_num().get_str() << ','
          << r.fraction.get_den().get_str() << ',' << r.bound.get_num().get_str()
          << ',' << r.bound.get_den().get_str() << ','
          << (r.pass ? "true" : "false") << '\n';
  }
  write_output(out_path, out.str());
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dodgson solvers, junta-distribution checkers, and Monte Carlo bound verification"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  std::string format = "csv";
  std::string lengths_text;
  std::string grid_text;
  std::string ensemble = "junta";
  std::optional<std::uint64_t> seed_flag;
  std::uint64_t trials = 20000;
  int m = 0;
  int n = 0;

  CLI::App* score = app.add_subcommand("score", "exact and greedy Dodgson scores for one election");
  score->add_option("--input", input, "election file (native or PrefLib SOC)")->required();
  score->add_option("--format", format, "text|csv|json-lines")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}));
  score->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo verification of the niceness bounds");
  mc->add_option("--grid", grid_text, "comma-separated MxN sizes, e.g. 3x201,3x401");
  mc->add_option("--m", m, "single-point candidate count (with --n)");
  mc->add_option("--n", n, "single-point voter count (with --m)");
  mc->add_option("--trials", trials, "trials per grid point")->check(CLI::PositiveNumber);
  mc->add_option("--seed", seed_flag, "master seed (default: SKC_SEED env or 1)");
  mc->add_option("--format", format, "text|csv|json-lines")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}));
  mc->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* junta = app.add_subcommand("junta", "junta-distribution condition checkers over the toy SAT set");
  junta->add_option("--lengths", lengths_text, "length range LO..HI")->required();
  junta->add_option("--ensemble", ensemble, "junta|uniform")
      ->check(CLI::IsMember({"junta", "uniform"}));
  junta->add_option("--format", format, "text|csv|json-lines")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}));
  junta->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* wrapper = app.add_subcommand("wrapper-demo", "benign-scheme wrapper maybe-fractions against the per-length bound");
  wrapper->add_option("--lengths", lengths_text, "length range LO..HI (within 1..12)")->required();
  wrapper->add_option("--input", input, "optional function table (bitstring value lines)");
  wrapper->add_option("--format", format, "text|csv|json-lines")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}));
  wrapper->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (score->parsed()) return cmd_score(input, format, out_path);
    if (mc->parsed()) {
      std::vector<GridPoint> grid;
      if (!grid_text.empty()) {
        grid = parse_grid(grid_text);
      } else if (m > 0 && n > 0) {
        if (m < 2) throw CLI::ValidationError("--m", "need m >= 2 for the analytic bounds");
        grid.push_back({m, n});
      } else {
        throw CLI::ValidationError("mc", "provide --grid or both --m and --n");
      }
      return cmd_mc(grid, trials, resolve_seed(seed_flag), format, out_path);
    }
    if (junta->parsed())
      return cmd_junta(parse_lengths(lengths_text), ensemble, format, out_path);
    if (wrapper->parsed())
      return cmd_wrapper_demo(parse_lengths(lengths_text), input, format, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const skc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const skc::GuardError& e) {
    std::cerr << "guard error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
