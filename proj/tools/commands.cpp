#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hexalloc/error.hpp"
#include "hexalloc/graph.hpp"
#include "hexalloc/static_alloc.hpp"

namespace hexalloc::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

class OutputDir {
 public:
  explicit OutputDir(std::filesystem::path root) : root_(std::move(root)) {
    std::error_code ec;
    std::filesystem::create_directories(root_, ec);
    if (ec || !std::filesystem::is_directory(root_)) {
      throw IoError("cannot create output directory " + root_.string());
    }
  }

  void write(const std::string& name, const std::string& content, std::ostream& log) const {
    const auto path = root_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) throw IoError("cannot write " + path.string());
    log << "wrote " << path.string() << '\n';
  }

  void write_json(const std::string& name, const ordered_json& doc, std::ostream& log) const {
    write(name, doc.dump(2) + "\n", log);
  }

 private:
  std::filesystem::path root_;
};

std::string fixed(double value, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << value;
  return os.str();
}

ordered_json channel_list(const std::vector<LogicalChannel>& channels) {
  ordered_json out = ordered_json::array();
  for (const auto& ch : channels) out.push_back(to_string(ch));
  return out;
}

ordered_json cell_json(const CellIndex& c) { return ordered_json::array({c.i, c.j}); }

}  // namespace

void cmd_lattice(const ScenarioConfig& cfg, std::ostream& log) {
  const OutputDir out(cfg.output_dir);
  const Lattice& lattice = cfg.lattice;

  std::ostringstream cells;
  cells << "i,j,x,y\n";
  for (const auto& c : lattice.cells()) {
    const Point p = lattice.center_of(c);
    cells << c.i << ',' << c.j << ',' << fixed(p.x, 6) << ',' << fixed(p.y, 6) << '\n';
  }
  out.write("cells.csv", cells.str(), log);

  for (auto [name, threshold] : {std::pair{"edges_control.txt", kControlMetricThreshold},
                                 std::pair{"edges_data.txt", kDataMetricThreshold}}) {
    std::ostringstream edges;
    write_edge_list(edges, build_interference_graph(lattice, threshold));
    out.write(name, edges.str(), log);
  }
}

int cmd_static(const ScenarioConfig& cfg, std::ostream& log) {
  const ChannelPlan plan = cfg.plan();
  const OutputDir out(cfg.output_dir);
  const Lattice& lattice = cfg.lattice;

  StaticAllocation allocation;
  allocation.data = allocate_static_data(lattice, plan, cfg.solver);

  ordered_json summary;
  summary["domain"] = to_string(plan.domain);
  summary["cells"] = lattice.size();
  summary["control_channels"] = channel_list(plan.control_set);
  summary["data_channel_count"] = plan.data_set.size();

  std::optional<std::string> control_failure;
  try {
    allocation.control = allocate_control(lattice, plan, cfg.solver);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInsufficientSpectrum) throw;
    control_failure = e.what();
  }

  const auto control_graph = build_interference_graph(lattice, kControlMetricThreshold);
  const Coloring control_coloring =
      control_failure ? lattice_coloring(control_graph, ReuseKind::kControl, cfg.solver) : allocation.control.coloring;

  summary["chi_control"] = control_coloring.num_colors;
  summary["chi_data"] = allocation.data.coloring.num_colors;
  summary["k_static"] = allocation.data.k_static;
  summary["unassigned_data_channels"] = channel_list(allocation.data.unassigned);
  summary["control_feasible"] = !control_failure.has_value();
  ordered_json notes = ordered_json::array();
  if (control_failure) notes.push_back(*control_failure);
  if (plan.domain == DomainName::kUS && cfg.us_data_card == 28) {
    summary["us_data_card"] = 28;
    notes.push_back("us_data_card=28: control restricted to code-7 channels; k_static " +
                    std::to_string(allocation.data.k_static) + " differs from the reported US value K = 8");
  }
  summary["notes"] = notes;

  std::ostringstream cc;
  write_coloring_csv(cc, lattice.cells(), control_coloring);
  out.write("coloring_control.csv", cc.str(), log);
  std::ostringstream dc;
  write_coloring_csv(dc, lattice.cells(), allocation.data.coloring);
  out.write("coloring_data.csv", dc.str(), log);

  if (!control_failure) {
    std::ostringstream csv;
    write_static_csv(csv, lattice, allocation);
    out.write("static_allocation.csv", csv.str(), log);
  }
  out.write_json("static_summary.json", summary, log);

  if (control_failure) {
    log << "error: " << *control_failure << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

void cmd_dynamic(const ScenarioConfig& cfg, std::ostream& log) {
  cfg.require_superframes();
  const ChannelPlan plan = cfg.plan();
  const auto& sfs = cfg.superframes;
  const CycleStructure structure = cycle_structure(sfs);
  const ActivityMatrix activity = activity_matrix(sfs, structure);
  const AllocationMatrix alloc = allocate_dynamic(cfg.lattice, sfs, plan, {cfg.solver, std::nullopt});
  const OutputDir out(cfg.output_dir);

  std::ostringstream act;
  act << "cycle,pan,pan_i,pan_j,active\n";
  std::ostringstream csv;
  csv << "cycle,pan_i,pan_j,active,chi,k,channels\n";
  for (std::size_t t = 0; t < alloc.cycles(); ++t) {
    for (std::size_t p = 0; p < sfs.size(); ++p) {
      const auto& c = sfs[p].pan_cell;
      const bool on = activity.active(p, t);
      act << t + 1 << ',' << p + 1 << ',' << c.i << ',' << c.j << ',' << (on ? 1 : 0) << '\n';
      csv << t + 1 << ',' << c.i << ',' << c.j << ',' << (on ? 1 : 0) << ',' << alloc.component_chi(p, t) << ','
          << alloc.k(p, t) << ',' << join_channels(alloc.channels(p, t)) << '\n';
    }
  }
  out.write("activity.csv", act.str(), log);
  out.write("allocation.csv", csv.str(), log);

  std::ostringstream cycles;
  cycles << "cycle,active_pans,chi,k\n";
  ordered_json per_cycle = ordered_json::array();
  for (std::size_t t = 0; t < alloc.cycles(); ++t) {
    ordered_json active = ordered_json::array();
    for (std::size_t p = 0; p < sfs.size(); ++p) {
      if (activity.active(p, t)) active.push_back(p + 1);
    }
    cycles << t + 1 << ',' << active.size() << ',' << alloc.per_cycle_chi()[t] << ',' << alloc.per_cycle_k()[t] << '\n';
    per_cycle.push_back(
        {{"cycle", t + 1}, {"active_pans", active}, {"chi", alloc.per_cycle_chi()[t]}, {"k", alloc.per_cycle_k()[t]}});
  }
  out.write("cycles.csv", cycles.str(), log);

  ordered_json doc;
  doc["domain"] = to_string(plan.domain);
  doc["bi_maj"] = structure.bi_maj;
  doc["sd_min"] = structure.sd_min;
  doc["u_cycles"] = structure.u_cycles;
  doc["data_channels"] = channel_list(plan.data_set);
  ordered_json pans = ordered_json::array();
  ordered_json matrix = ordered_json::array();
  for (std::size_t p = 0; p < sfs.size(); ++p) {
    pans.push_back({{"pan", p + 1},
                    {"cell", cell_json(sfs[p].pan_cell)},
                    {"so", sfs[p].superframe_order},
                    {"bo", sfs[p].beacon_order},
                    {"phase", sfs[p].phase}});
    ordered_json row = ordered_json::array();
    for (std::size_t t = 0; t < alloc.cycles(); ++t) row.push_back(channel_list(alloc.channels(p, t)));
    matrix.push_back(row);
  }
  doc["pans"] = pans;
  doc["cycles"] = per_cycle;
  doc["channels"] = matrix;
  out.write_json("allocation.json", doc, log);
}

void cmd_evaluate(const ScenarioConfig& cfg, std::ostream& log) {
  cfg.require_superframes();
  const ChannelPlan plan = cfg.plan();
  const auto& sfs = cfg.superframes;
  const Evaluation eval = compare_schemes(cfg.lattice, sfs, plan, cfg.workload, cfg.solver);
  const OutputDir out(cfg.output_dir);

  std::ostringstream rows;
  rows << "scheme,cycle,pan,pan_i,pan_j,channels,makespan,delay_decrease_percent\n";
  for (const auto& report : eval.reports) {
    for (const auto& row : report.rows) {
      const auto& c = sfs[row.pan].pan_cell;
      rows << to_string(report.scheme) << ',' << row.cycle + 1 << ',' << row.pan + 1 << ',' << c.i << ',' << c.j
           << ',' << row.channels << ',' << row.makespan << ',' << fixed(row.delay_decrease_percent, 3) << '\n';
    }
  }
  out.write("schemes.csv", rows.str(), log);

  std::ostringstream maxima;
  maxima << "pan,pan_i,pan_j,single,static,dynamic\n";
  for (std::size_t p = 0; p < sfs.size(); ++p) {
    const auto& c = sfs[p].pan_cell;
    maxima << p + 1 << ',' << c.i << ',' << c.j;
    for (const auto& report : eval.reports) maxima << ',' << report.max_channels_per_pan[p];
    maxima << '\n';
  }
  out.write("max_channels.csv", maxima.str(), log);

  ordered_json summary;
  summary["domain"] = to_string(plan.domain);
  summary["data_channel_count"] = plan.data_set.size();
  summary["k_static"] = eval.k_static;
  summary["bi_maj"] = eval.structure.bi_maj;
  summary["sd_min"] = eval.structure.sd_min;
  summary["u_cycles"] = eval.structure.u_cycles;
  ordered_json schemes = ordered_json::object();
  for (const auto& report : eval.reports) {
    std::int64_t worst = 0;
    std::int64_t best = 0;
    for (const auto& row : report.rows) {
      worst = std::max(worst, row.makespan);
      best = best == 0 ? row.makespan : std::min(best, row.makespan);
    }
    schemes[std::string(to_string(report.scheme))] = {
        {"max_channels", report.max_channels}, {"min_makespan", best}, {"max_makespan", worst}};
  }
  summary["schemes"] = schemes;
  ordered_json notes = ordered_json::array();
  if (const auto reported = reported_maxima(plan.domain)) {
    summary["reported"] = {{"static_max", reported->static_max}, {"dynamic_max", reported->dynamic_max}};
    if (reported->static_max != eval.reports[1].max_channels) {
      notes.push_back("computed static maximum " + std::to_string(eval.reports[1].max_channels) +
                      " differs from the reported " + std::to_string(reported->static_max));
    }
    if (reported->dynamic_max != eval.reports[2].max_channels) {
      notes.push_back("computed dynamic maximum " + std::to_string(eval.reports[2].max_channels) +
                      " differs from the reported " + std::to_string(reported->dynamic_max));
    }
  } else {
    summary["reported"] = nullptr;
  }
  if (plan.domain == DomainName::kUS && cfg.us_data_card == 28) {
    summary["us_data_card"] = 28;
    notes.push_back("us_data_card=28: control restricted to code-7 channels");
  }
  summary["notes"] = notes;
  out.write_json("evaluation_summary.json", summary, log);
}

int run_command(std::string_view command, const std::filesystem::path& config_path, const Overrides& overrides,
                std::ostream& log, std::ostream& err) {
  try {
    const ScenarioConfig cfg = load_config(config_path, overrides);
    if (command == "lattice") {
      cmd_lattice(cfg, log);
    } else if (command == "static") {
      return cmd_static(cfg, log);
    } else if (command == "dynamic") {
      cmd_dynamic(cfg, log);
    } else if (command == "evaluate") {
      cmd_evaluate(cfg, log);
    } else {
      err << "error: unknown command '" << command << "'\n";
      return kExitValidation;
    }
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace hexalloc::cli
