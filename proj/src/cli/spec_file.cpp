#include "chow/spec_file.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "chow/error.hpp"
#include "chow/parser.hpp"

namespace chow {

namespace {

using nlohmann::json;

const json& field(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw SpecError(where + ": missing \"" + key + "\"");
  return *it;
}

std::string text_of(const json& value, const std::string& where) {
  if (!value.is_string()) throw SpecError(where + ": expected a string");
  return value.get<std::string>();
}

std::vector<std::string> texts_of(const json& value, const std::string& where) {
  if (!value.is_array()) throw SpecError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& entry : value) out.push_back(text_of(entry, where));
  return out;
}

std::map<std::string, std::string> map_of(const json& value, const std::string& where) {
  if (!value.is_object()) throw SpecError(where + ": expected an object of strings");
  std::map<std::string, std::string> out;
  for (const auto& [key, entry] : value.items()) out.emplace(key, text_of(entry, where + "." + key));
  return out;
}

std::vector<json> list_of(const json& spec, const char* key) {
  auto it = spec.find(key);
  if (it == spec.end() || it->is_null()) return {};
  if (!it->is_array()) throw SpecError(std::string(key) + ": expected an array");
  return std::vector<json>(it->begin(), it->end());
}

unsigned positive_of(const json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<long long>() < 1) throw SpecError(where + ": expected a positive integer");
  return value.get<unsigned>();
}

void check_parses(const SpecFile& spec) {
  auto table = make_table(spec);
  auto parse = [&](const std::string& text, const std::string& where) {
    try {
      parse_poly(text, table);
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.detail(), e.position());
    }
  };
  for (std::size_t j = 0; j < spec.delta.size(); ++j) parse(spec.delta[j], "delta[" + std::to_string(j) + "]");
  for (const auto& c : spec.content_candidates) parse(c, "content_candidates");
  for (const auto& s : spec.strata) {
    build_substitution(s.sub, table);
    for (const auto& c : s.candidates) parse(c, "stratum " + s.name);
  }
  for (const auto& c : spec.charts) {
    build_substitution(c.sub, table);
    parse(c.exceptional, "chart " + c.name);
    if (c.divisor) build_substitution(*c.divisor, table, true);
  }
}

}  // namespace

SpecFile parse_spec(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("spec is not valid JSON", e.byte);
  }
  if (!root.is_object()) throw SpecError("spec must be a JSON object");

  SpecFile spec;
  if (auto it = root.find("name"); it != root.end()) spec.name = text_of(*it, "name");
  spec.n = positive_of(field(root, "n", "spec"), "n");
  spec.delta = texts_of(field(root, "delta", "spec"), "delta");
  if (spec.delta.size() != spec.n)
    throw SpecError("delta has " + std::to_string(spec.delta.size()) + " entries, expected " + std::to_string(spec.n));
  if (auto it = root.find("content_candidates"); it != root.end())
    spec.content_candidates = texts_of(*it, "content_candidates");
  if (auto it = root.find("seed"); it != root.end() && !it->is_null()) {
    if (!it->is_number_unsigned()) throw SpecError("seed: expected a nonnegative integer");
    spec.seed = it->get<std::uint64_t>();
  }
  if (auto it = root.find("bound"); it != root.end()) spec.bound = positive_of(*it, "bound");
  if (auto it = root.find("chart_vars"); it != root.end()) spec.chart_vars = positive_of(*it, "chart_vars");

  for (const auto& s : list_of(root, "strata")) {
    if (!s.is_object()) throw SpecError("strata: expected objects");
    StratumSpec out;
    out.name = text_of(field(s, "name", "stratum"), "stratum name");
    out.sub = map_of(field(s, "sub", out.name), out.name + ".sub");
    if (auto it = s.find("candidates"); it != s.end()) out.candidates = texts_of(*it, out.name + ".candidates");
    spec.strata.push_back(std::move(out));
  }
  for (const auto& c : list_of(root, "charts")) {
    if (!c.is_object()) throw SpecError("charts: expected objects");
    ChartSpec out;
    out.name = text_of(field(c, "name", "chart"), "chart name");
    out.sub = map_of(field(c, "sub", out.name), out.name + ".sub");
    out.exceptional = text_of(field(c, "exceptional", out.name), out.name + ".exceptional");
    if (auto it = c.find("divisor"); it != c.end()) out.divisor = map_of(*it, out.name + ".divisor");
    spec.charts.push_back(std::move(out));
  }
  check_parses(spec);
  return spec;
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_spec(text.str());
}

VarTable::Ptr make_table(const SpecFile& spec) { return VarTable::create(spec.n, spec.chart_vars); }

Derivation build_derivation(const SpecFile& spec, const VarTable::Ptr& table) {
  std::vector<MultiPoly> generators;
  for (const auto& text : spec.delta) generators.push_back(parse_poly(text, table));
  return Derivation(table, std::move(generators), spec.bound);
}

Substitution build_substitution(const std::map<std::string, std::string>& entries, const VarTable::Ptr& table,
                                bool allow_chart) {
  Substitution sub;
  for (const auto& [name, image] : entries) {
    auto v = table->find(name);
    bool ok = v && (table->kind(*v) == VarKind::Coordinate || (allow_chart && table->kind(*v) == VarKind::Chart));
    if (!ok) throw SpecError("\"" + name + "\" cannot be substituted here");
    try {
      sub.emplace(*v, parse_poly(image, table));
    } catch (const ParseError& e) {
      throw ParseError(name + ": " + e.detail(), e.position());
    }
  }
  return sub;
}

AnalysisInput build_analysis_input(const SpecFile& spec, const VarTable::Ptr& table) {
  AnalysisInput input;
  for (const auto& c : spec.content_candidates) input.content_candidates.push_back(parse_poly(c, table));
  for (const auto& s : spec.strata) {
    Stratum stratum{s.name, build_substitution(s.sub, table), {}};
    for (const auto& c : s.candidates) stratum.candidates.push_back(parse_poly(c, table));
    input.strata.push_back(std::move(stratum));
  }
  for (const auto& c : spec.charts) {
    std::optional<Substitution> divisor;
    if (c.divisor) divisor = build_substitution(*c.divisor, table, true);
    input.charts.push_back(
        make_chart(c.name, build_substitution(c.sub, table), parse_poly(c.exceptional, table), std::move(divisor)));
  }
  return input;
}

}  // namespace chow
