#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "chow/cli.hpp"
#include "chow/error.hpp"
#include "chow/golden.hpp"
#include "chow/suites.hpp"

namespace chow {

namespace {

using nlohmann::ordered_json;

ordered_json header(const std::string& command, const SpecFile& spec, const Derivation& d) {
  ordered_json j;
  j["command"] = command;
  j["spec"] = spec.name;
  j["n"] = spec.n;
  j["degree"] = d.degree();
  return j;
}

ordered_json generic_locus(const Derivation& d) {
  ordered_json out = ordered_json::array();
  for (unsigned j = 1; j <= d.dimension(); ++j) {
    const MultiPoly& top = d.power(d.degree(), j);
    if (top.is_zero()) continue;
    out.push_back({{"j", j}, {"generator", to_string(top)}});
  }
  return out;
}

ordered_json content_json(const ContentRecord& record) {
  ordered_json out = ordered_json::array();
  for (const auto& [factor, power] : record) out.push_back({{"factor", to_string(factor)}, {"power", power}});
  return out;
}

std::string content_text(const ordered_json& record) {
  if (record.empty()) return "1";
  std::string out;
  for (const auto& entry : record) {
    if (!out.empty()) out += " * ";
    out += "(" + entry["factor"].get<std::string>() + ")";
    if (entry["power"].get<unsigned>() != 1) out += "^" + std::to_string(entry["power"].get<unsigned>());
  }
  return out;
}

AffinePoint parse_point(const std::string& text, unsigned n) {
  AffinePoint x;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      x.coordinates.push_back(parse_rational(piece));
    } catch (const std::exception&) {
      throw ParseError("malformed point coordinate \"" + piece + "\"", start);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (x.coordinates.size() != n)
    throw ParseError("point has " + std::to_string(x.coordinates.size()) + " coordinates, expected " + std::to_string(n),
                     0);
  return x;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_pair(const ordered_json& pair) {
  return pair[0].get<std::string>() + " vs " + pair[1].get<std::string>();
}

void render_degree(std::ostringstream& out, const ordered_json& j) {
  out << "degree: " << j["degree"].get<unsigned>() << "\n";
  out << "generic locus: some delta^d x_j nonzero\n";
  for (const auto& g : j["generic_locus"])
    out << "  j = " << g["j"].get<unsigned>() << ": " << g["generator"].get<std::string>() << "\n";
}

void render_report(std::ostringstream& out, const ordered_json& r) {
  out << "[" << r["kind"].get<std::string>() << "] " << r["name"].get<std::string>() << " on "
      << r["locus"].get<std::string>() << "\n";
  if (r.contains("exceptional_power")) out << "  exceptional power: " << r["exceptional_power"].get<unsigned>() << "\n";
  out << "  limit: " << r["limit"].get<std::string>() << "\n";
  out << "  n = " << r["n"].get<unsigned>() << "\n";
  out << "  C: " << r["C"].get<std::string>() << "\n";
  out << "  Z: " << r["Z"].get<std::string>() << "\n";
  out << "  Z content: " << content_text(r["Z_content"]) << "\n";
  out << "  Z at infinity: " << yes_no(r["at_infinity_Z"].get<bool>()) << "\n";
  out << "  degree check: " << (r["degree_check"].get<bool>() ? "ok" : "failed") << "\n";
  if (r.contains("witness")) out << "  Z lies over: " << r["witness"].get<std::string>() << "\n";
}

}  // namespace

Report cmd_degree(const SpecFile& spec) {
  auto table = make_table(spec);
  Derivation d = build_derivation(spec, table);
  Report report{header("degree", spec, d)};
  report.json["generic_locus"] = generic_locus(d);
  return report;
}

Report cmd_chow(const SpecFile& spec, const ChowOptions& options) {
  auto table = make_table(spec);
  Derivation d = build_derivation(spec, table);
  Report report{header("chow", spec, d)};
  std::optional<AffinePoint> x;
  if (options.at) {
    x = parse_point(*options.at, spec.n);
    report.json["at"] = *options.at;
  }
  GammaForm p = chow_form(d, x);
  report.json["chow"] = to_string(p);
  if (options.expand) report.json["expanded"] = to_string(gamma_expand(p));
  return report;
}

Report cmd_analyze(const SpecFile& spec) {
  auto table = make_table(spec);
  Derivation d = build_derivation(spec, table);
  AnalysisInput input = build_analysis_input(spec, table);
  if (input.strata.empty() && input.charts.empty()) throw SpecError("analyze needs strata or charts");
  Report report{header("analyze", spec, d)};
  std::optional<Analysis> result;
  try {
    result = analyze(d, input);
  } catch (const DecompositionError& e) {
    report.json["error"] = e.what();
    report.exit_code = kExitFailure;
    return report;
  }
  const Analysis& a = *result;
  report.json["chow"] = to_string(a.P);
  report.json["content"] = content_json(a.content);
  report.json["reduced"] = to_string(a.reduced);
  ordered_json reports = ordered_json::array();
  for (const auto& r : a.reports) {
    ordered_json entry;
    entry["name"] = r.name;
    entry["kind"] = r.is_chart ? "chart" : "stratum";
    entry["locus"] = locus_text(*table, r.locus);
    if (r.is_chart) entry["exceptional_power"] = r.power;
    entry["limit"] = to_string(r.limit);
    entry["n"] = r.decomposition.n;
    entry["C"] = to_string(r.decomposition.C);
    entry["Z"] = to_string(r.decomposition.Z);
    entry["Z_content"] = content_json(r.decomposition.Z_content);
    entry["at_infinity_Z"] = r.decomposition.at_infinity_Z;
    entry["degree_check"] = r.decomposition.degree_ok;
    entry["hausdorff"] = r.hausdorff_ok;
    entry["proper"] = r.proper_ok;
    if (r.witness) entry["witness"] = r.witness->locus;
    reports.push_back(std::move(entry));
  }
  report.json["reports"] = std::move(reports);
  ordered_json verdict;
  verdict["text"] = a.verdict.text;
  verdict["hausdorff"] = a.verdict.hausdorff;
  verdict["proper"] = a.verdict.proper;
  verdict["witness_pairs"] = ordered_json::array();
  for (const auto& [first, second] : a.verdict.witness_pairs) verdict["witness_pairs"].push_back({first, second});
  report.json["verdict"] = std::move(verdict);
  for (const auto& r : a.reports)
    if (!r.decomposition.degree_ok) report.exit_code = kExitFailure;
  return report;
}

Report cmd_check(const SpecFile& spec, unsigned trials, std::uint64_t seed) {
  if (trials < 1) throw SpecError("--trials must be at least 1");
  auto table = make_table(spec);
  Derivation d = build_derivation(spec, table);
  Report report{header("check", spec, d)};
  report.json["seed"] = seed;
  report.json["trials"] = trials;
  ordered_json suites = ordered_json::array();
  for (const auto& r : run_property_suites(d, trials, seed)) {
    ordered_json entry{{"name", r.name}, {"pass", r.pass}, {"checks", r.checks}};
    if (!r.pass) {
      entry["witness"] = r.witness;
      report.exit_code = kExitFailure;
    }
    suites.push_back(std::move(entry));
  }
  report.json["suites"] = std::move(suites);
  return report;
}

Report cmd_examples() {
  Report report;
  report.json["command"] = "examples";
  ordered_json examples = ordered_json::array();
  for (const auto& example : bundled_examples()) {
    SpecFile spec = parse_spec(example.spec);
    ordered_json entry{{"name", std::string(example.name)}, {"checks", ordered_json::array()}};
    for (const auto& c : check_golden(spec, nlohmann::json::parse(example.golden))) {
      entry["checks"].push_back({{"what", c.what}, {"pass", c.pass}});
      if (!c.pass) report.exit_code = kExitFailure;
    }
    examples.push_back(std::move(entry));
  }
  report.json["examples"] = std::move(examples);
  report.json["pass"] = report.exit_code == kExitOk;
  return report;
}

std::string render_text(const Report& report) {
  const ordered_json& j = report.json;
  std::ostringstream out;
  const std::string command = j["command"].get<std::string>();
  const std::string name = command.substr(0, command.find(' '));
  out << "command: " << command << "\n";
  if (j.contains("spec") && !j["spec"].get<std::string>().empty()) out << "spec: " << j["spec"].get<std::string>() << "\n";

  if (name == "degree") {
    render_degree(out, j);
  } else if (name == "chow") {
    out << "degree: " << j["degree"].get<unsigned>() << "\n";
    if (j.contains("at")) out << "at: (" << j["at"].get<std::string>() << ")\n";
    out << "chow form: " << j["chow"].get<std::string>() << "\n";
    if (j.contains("expanded")) out << "expanded: " << j["expanded"].get<std::string>() << "\n";
  } else if (name == "analyze") {
    out << "degree: " << j["degree"].get<unsigned>() << "\n";
    if (j.contains("error")) {
      out << "error: " << j["error"].get<std::string>() << "\n";
    } else {
      out << "chow form: " << j["chow"].get<std::string>() << "\n";
      out << "content: " << content_text(j["content"]) << "\n";
      out << "without content: " << j["reduced"].get<std::string>() << "\n";
      for (const auto& r : j["reports"]) render_report(out, r);
      out << "verdict: " << j["verdict"]["text"].get<std::string>() << "\n";
      for (const auto& pair : j["verdict"]["witness_pairs"]) out << "not separated: " << join_pair(pair) << "\n";
    }
  } else if (name == "check") {
    out << "degree: " << j["degree"].get<unsigned>() << "\n";
    out << "seed: " << j["seed"].get<std::uint64_t>() << "\n";
    out << "trials: " << j["trials"].get<unsigned>() << "\n";
    for (const auto& s : j["suites"]) {
      out << (s["pass"].get<bool>() ? "PASS " : "FAIL ") << s["name"].get<std::string>() << " ("
          << s["checks"].get<unsigned>() << " checks)";
      if (s.contains("witness")) out << ": " << s["witness"].get<std::string>();
      out << "\n";
      if (s["name"] == "d2-identity" && s["pass"].get<bool>()) out << "d = 2 shortcut identity held\n";
    }
    out << (report.exit_code == kExitOk ? "all properties hold\n" : "property check failed\n");
  } else if (name == "examples") {
    for (const auto& e : j["examples"])
      for (const auto& c : e["checks"])
        out << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << e["name"].get<std::string>() << ": "
            << c["what"].get<std::string>() << "\n";
  }
  if (j.contains("timing_ms")) out << "time: " << j["timing_ms"].get<double>() << " ms\n";
  return out.str();
}

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult result;
  CLI::App app{"Chow forms of additive group orbit closures", "chow"};
  app.require_subcommand(1);
  bool json_output = false;
  bool timing = false;
  app.add_flag("--timing", timing, "Append the wall-clock time");

  std::string spec_path;
  ChowOptions chow_options;
  std::string at;
  unsigned trials = 100;
  std::optional<std::uint64_t> seed;

  auto* degree = app.add_subcommand("degree", "Nilpotency degree and the generic locus");
  degree->add_option("spec", spec_path, "Spec file")->required();
  degree->add_flag("--json", json_output, "JSON output");

  auto* chow = app.add_subcommand("chow", "Chow form of the generic orbit closure");
  chow->add_option("spec", spec_path, "Spec file")->required();
  chow->add_option("--at", at, "Evaluate at r1,...,rn");
  chow->add_flag("--expand", chow_options.expand, "Also print the (alpha, beta) expansion");
  chow->add_flag("--json", json_output, "JSON output");

  auto* analyze_cmd = app.add_subcommand("analyze", "Limit cycles on the supplied strata and charts");
  analyze_cmd->add_option("spec", spec_path, "Spec file")->required();
  analyze_cmd->add_flag("--json", json_output, "JSON output");

  auto* check = app.add_subcommand("check", "Randomized and symbolic property suites");
  check->add_option("spec", spec_path, "Spec file")->required();
  check->add_option("--trials", trials, "Samples per randomized suite")->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "Run seed (CHOW_SEED overrides)");
  check->add_flag("--json", json_output, "JSON output");

  auto* examples = app.add_subcommand("examples", "Bundled examples against their golden files");
  examples->add_flag("--json", json_output, "JSON output");

  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kExitOk : kExitInput;
    return result;
  }

  std::string echo;
  for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;

  auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (*examples) {
      report = cmd_examples();
    } else {
      SpecFile spec = load_spec(spec_path);
      if (*degree) report = cmd_degree(spec);
      if (*chow) {
        if (!at.empty()) chow_options.at = at;
        report = cmd_chow(spec, chow_options);
      }
      if (*analyze_cmd) report = cmd_analyze(spec);
      if (*check) {
        std::uint64_t run_seed = seed.value_or(spec.seed.value_or(kDefaultSeed));
        if (const char* env = std::getenv("CHOW_SEED"); env != nullptr && *env != '\0') {
          char* end = nullptr;
          run_seed = std::strtoull(env, &end, 10);
          if (*end != '\0') throw SpecError("CHOW_SEED must be an unsigned integer");
        }
        report = cmd_check(spec, trials, run_seed);
      }
    }
  } catch (const DecompositionError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitFailure;
    return result;
  } catch (const Error& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitInput;
    return result;
  } catch (const std::exception& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitFailure;
    return result;
  }

  report.json["command"] = echo;
  if (timing) {
    std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    report.json["timing_ms"] = elapsed.count();
  }
  result.out = json_output ? report.json.dump(2) + "\n" : render_text(report);
  result.exit_code = report.exit_code;
  return result;
}

}  // namespace chow
