#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hexalloc/error.hpp"

namespace hexalloc::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) { throw ConfigError(field + ": " + what); }

void reject_unknown(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items()) {
    if (!ok.contains(key)) fail(where.empty() ? key : where + "." + key, "unknown field");
  }
}

const json& require_object(const json& doc, const std::string& field) {
  if (!doc.is_object()) fail(field, "must be an object");
  return doc;
}

long long get_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) fail(field, "must be an integer");
  return v.get<long long>();
}

double get_number(const json& v, const std::string& field) {
  if (!v.is_number()) fail(field, "must be a number");
  return v.get<double>();
}

CellIndex get_cell(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2) fail(field, "must be an [i, j] pair");
  const CellIndex c{static_cast<int>(get_int(v[0], field + "[0]")), static_cast<int>(get_int(v[1], field + "[1]"))};
  if (!has_valid_parity(c)) fail(field, "cell " + to_string(c) + " violates (i + j) mod 2 == 0");
  return c;
}

Point get_point(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2) fail(field, "must be an [x, y] pair");
  return {get_number(v[0], field + "[0]"), get_number(v[1], field + "[1]")};
}

Lattice parse_lattice(const json& doc) {
  require_object(doc, "lattice");
  reject_unknown(doc, "lattice", {"index_bound", "cells", "radius", "origin"});
  const double radius = doc.contains("radius") ? get_number(doc["radius"], "lattice.radius") : 1.0;
  if (!(radius > 0.0)) fail("lattice.radius", "must be positive");
  const Point origin = doc.contains("origin") ? get_point(doc["origin"], "lattice.origin") : Point{};
  const bool has_bound = doc.contains("index_bound");
  const bool has_cells = doc.contains("cells");
  if (has_bound == has_cells) fail("lattice", "exactly one of index_bound or cells is required");
  if (has_bound) {
    const long long n = get_int(doc["index_bound"], "lattice.index_bound");
    if (n < 0 || n > 1000) fail("lattice.index_bound", "must lie in [0, 1000]");
    return Lattice::build(static_cast<int>(n), radius, origin);
  }
  const json& cells = doc["cells"];
  if (!cells.is_array()) fail("lattice.cells", "must be an array of [i, j] pairs");
  std::vector<CellIndex> out;
  std::set<CellIndex> seen;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::string field = "lattice.cells[" + std::to_string(k) + "]";
    const CellIndex c = get_cell(cells[k], field);
    if (!seen.insert(c).second) fail(field, "duplicate cell " + to_string(c));
    out.push_back(c);
  }
  return Lattice::from_cells(std::move(out), radius, origin);
}

std::vector<LogicalChannel> parse_channel_table(const json& doc) {
  if (!doc.is_array()) fail("channel_table", "must be an array");
  std::vector<LogicalChannel> out;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const std::string field = "channel_table[" + std::to_string(k) + "]";
    require_object(doc[k], field);
    reject_unknown(doc[k], field, {"phy_channel", "code"});
    if (!doc[k].contains("phy_channel") || !doc[k].contains("code")) fail(field, "needs phy_channel and code");
    const LogicalChannel ch{static_cast<int>(get_int(doc[k]["phy_channel"], field + ".phy_channel")),
                            static_cast<int>(get_int(doc[k]["code"], field + ".code"))};
    if (!is_valid(ch)) fail(field, "phy_channel must lie in [0, 15] and code in [1, 8]");
    out.push_back(ch);
  }
  return out;
}

std::vector<SuperframeConfig> parse_superframes(const json& doc) {
  if (!doc.is_array()) fail("superframes", "must be an array");
  std::vector<SuperframeConfig> out;
  std::set<CellIndex> seen;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const std::string field = "superframes[" + std::to_string(k) + "]";
    const json& sf = require_object(doc[k], field);
    reject_unknown(sf, field, {"cell", "so", "bo", "phase"});
    for (const char* key : {"cell", "so", "bo"}) {
      if (!sf.contains(key)) fail(field + "." + key, "is required");
    }
    SuperframeConfig cfg;
    cfg.pan_cell = get_cell(sf["cell"], field + ".cell");
    const long long so = get_int(sf["so"], field + ".so");
    const long long bo = get_int(sf["bo"], field + ".bo");
    if (bo < 0 || bo > kMaxBeaconOrder) fail(field + ".bo", "must lie in [0, " + std::to_string(kMaxBeaconOrder) + "]");
    if (so < 0) fail(field + ".so", "must be non-negative");
    if (so > bo) fail(field + ".so", "must not exceed bo (" + std::to_string(bo) + ")");
    cfg.superframe_order = static_cast<int>(so);
    cfg.beacon_order = static_cast<int>(bo);
    if (sf.contains("phase")) {
      cfg.phase = get_int(sf["phase"], field + ".phase");
      if (cfg.phase < 0) fail(field + ".phase", "must be non-negative");
    }
    if (!seen.insert(cfg.pan_cell).second) fail(field + ".cell", "another PAN already uses " + to_string(cfg.pan_cell));
    out.push_back(cfg);
  }
  return out;
}

std::vector<int> parse_requests(const json& doc, const std::string& field) {
  if (!doc.is_array()) fail(field, "must be an array of slot counts");
  if (doc.empty()) fail(field, "must not be empty");
  std::vector<int> out;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const long long r = get_int(doc[k], field + "[" + std::to_string(k) + "]");
    if (r <= 0 || r > 1'000'000) fail(field + "[" + std::to_string(k) + "]", "must lie in [1, 1000000]");
    out.push_back(static_cast<int>(r));
  }
  return out;
}

RequestScenario parse_workload(const json& doc, std::size_t pan_count) {
  require_object(doc, "workload");
  reject_unknown(doc, "workload", {"requests", "per_pan"});
  RequestScenario out;
  if (!doc.contains("requests")) fail("workload.requests", "is required");
  out.default_requests = parse_requests(doc["requests"], "workload.requests");
  if (doc.contains("per_pan")) {
    const json& list = doc["per_pan"];
    if (!list.is_array()) fail("workload.per_pan", "must be an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string field = "workload.per_pan[" + std::to_string(k) + "]";
      require_object(list[k], field);
      reject_unknown(list[k], field, {"pan", "requests"});
      if (!list[k].contains("pan") || !list[k].contains("requests")) fail(field, "needs pan and requests");
      const long long pan = get_int(list[k]["pan"], field + ".pan");
      if (pan < 1 || static_cast<std::size_t>(pan) > pan_count) {
        fail(field + ".pan", "must name a configured PAN in [1, " + std::to_string(pan_count) + "]");
      }
      out.per_pan[static_cast<std::size_t>(pan - 1)] = parse_requests(list[k]["requests"], field + ".requests");
    }
  }
  return out;
}

}  // namespace

ChannelPlan ScenarioConfig::plan() const {
  const auto& dom = require_domain();
  if (us_data_card == 28) return channel_plan(dom, restricted_control_candidates());
  return channel_plan(dom);
}

const RegulatoryDomain& ScenarioConfig::require_domain() const {
  if (!domain) throw ConfigError("domain: is required for this command (or pass --domain)");
  return *domain;
}

void ScenarioConfig::require_superframes() const {
  if (superframes.empty()) throw ConfigError("superframes: at least one PAN superframe is required for this command");
}

ScenarioConfig parse_config(const json& doc, const Overrides& overrides) {
  require_object(doc, "<root>");
  reject_unknown(doc, "", {"description", "provenance", "lattice", "domain", "channel_table", "us_data_card",
                           "superframes", "workload", "solver", "output_dir"});
  ScenarioConfig cfg;
  try {
    if (!doc.contains("lattice")) fail("lattice", "is required");
    cfg.lattice = parse_lattice(doc["lattice"]);

    std::optional<DomainName> name;
    if (doc.contains("domain")) {
      if (!doc["domain"].is_string()) fail("domain", "must be one of US, Europe, Japan, custom");
      name = parse_domain_name(doc["domain"].get<std::string>());
      if (!name) fail("domain", "must be one of US, Europe, Japan, custom");
    }
    std::optional<std::vector<LogicalChannel>> table;
    if (doc.contains("channel_table")) table = parse_channel_table(doc["channel_table"]);

    if (overrides.domain) {
      name = parse_domain_name(*overrides.domain);
      if (!name || *name == DomainName::kCustom) fail("--domain", "must be one of US, Europe, Japan");
      table.reset();  // the flag selects the built-in table
    }
    if (name) {
      if (table) {
        cfg.domain = custom_domain(*name, std::move(*table));
      } else if (*name == DomainName::kCustom) {
        fail("channel_table", "is required when domain is custom");
      } else {
        cfg.domain = default_domain(*name);
      }
    } else if (table) {
      fail("domain", "is required when channel_table is given");
    }

    if (doc.contains("us_data_card")) {
      const long long card = get_int(doc["us_data_card"], "us_data_card");
      if (card != 24 && card != 28) fail("us_data_card", "must be 24 or 28");
      if (!cfg.domain || cfg.domain->name != DomainName::kUS) fail("us_data_card", "only applies to the US domain");
      cfg.us_data_card = static_cast<int>(card);
    }

    if (doc.contains("superframes")) {
      cfg.superframes = parse_superframes(doc["superframes"]);
      for (std::size_t k = 0; k < cfg.superframes.size(); ++k) {
        if (!cfg.lattice.contains(cfg.superframes[k].pan_cell)) {
          fail("superframes[" + std::to_string(k) + "].cell",
               to_string(cfg.superframes[k].pan_cell) + " is not part of the lattice");
        }
      }
    }
    if (doc.contains("workload")) cfg.workload = parse_workload(doc["workload"], cfg.superframes.size());

    if (doc.contains("solver")) {
      require_object(doc["solver"], "solver");
      reject_unknown(doc["solver"], "solver", {"max_exact_vertices"});
      if (doc["solver"].contains("max_exact_vertices")) {
        const long long cap = get_int(doc["solver"]["max_exact_vertices"], "solver.max_exact_vertices");
        if (cap < 1 || cap > 4096) fail("solver.max_exact_vertices", "must lie in [1, 4096]");
        cfg.solver.max_vertices = static_cast<std::size_t>(cap);
      }
    }

    if (doc.contains("output_dir")) {
      if (!doc["output_dir"].is_string()) fail("output_dir", "must be a string");
      cfg.output_dir = doc["output_dir"].get<std::string>();
    }
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  if (overrides.output_dir) cfg.output_dir = *overrides.output_dir;
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path, const Overrides& overrides) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return parse_config(doc, overrides);
}

}  // namespace hexalloc::cli
