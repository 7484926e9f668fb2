#include "datamule/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "datamule/io.hpp"
#include "datamule/persistence.hpp"
#include "datamule/reduction.hpp"
#include "datamule/svg.hpp"

namespace fs = std::filesystem;

namespace datamule {

namespace {

std::string resolve(const std::string& base_dir, const std::string& path) {
  if (path.empty() || base_dir.empty() || fs::path(path).is_absolute()) {
    return path;
  }
  return (fs::path(base_dir) / path).string();
}

double json_number(const nlohmann::json& j, const std::string& ctx) {
  if (!j.is_number()) throw ConfigurationError(ctx + ": expected a number");
  return j.get<double>();
}

int json_int(const nlohmann::json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw ConfigurationError(ctx + ": expected an integer");
  return j.get<int>();
}

// Thresholds are numbers, or the string "unbounded" for no bound.
double json_threshold(const nlohmann::json& j, const std::string& ctx) {
  if (j.is_string()) {
    if (j.get<std::string>() == "unbounded") return kUnbounded;
    throw ConfigurationError(ctx + ": expected a number or \"unbounded\"");
  }
  return json_number(j, ctx);
}

Interval json_interval(const nlohmann::json& j, const std::string& ctx) {
  if (!j.is_array() || j.size() != 2) {
    throw ConfigurationError(ctx + ": expected [lo, hi]");
  }
  Interval iv{json_number(j[0], ctx), json_number(j[1], ctx)};
  if (!iv.valid()) throw ConfigurationError(ctx + ": needs 0 <= lo <= hi");
  return iv;
}

Scenario parse_scenario(const std::string& name) {
  if (name == "free") return Scenario::Free;
  if (name == "late_bounded") return Scenario::LateBounded;
  if (name == "wait_bounded") return Scenario::WaitBounded;
  if (name == "both_bounded") return Scenario::BothBounded;
  throw ConfigurationError("unknown scenario '" + name +
                           "' (free, late_bounded, wait_bounded, both_bounded)");
}

void parse_network(const nlohmann::json& jn, NetworkSource& src) {
  const std::string source = jn.value("source", std::string("generated"));
  std::optional<Interval> deadline_range, energy_range;
  if (jn.contains("deadline_range")) {
    deadline_range = json_interval(jn["deadline_range"], "network.deadline_range");
  }
  if (jn.contains("energy_range")) {
    energy_range = json_interval(jn["energy_range"], "network.energy_range");
  }

  if (source == "generated") {
    src.kind = NetworkSource::Kind::Generated;
    if (jn.contains("sinks")) src.gen.n_sinks = json_int(jn["sinks"], "network.sinks");
    if (jn.contains("bases")) src.gen.n_bases = json_int(jn["bases"], "network.bases");
    if (jn.contains("area_side")) {
      src.gen.area_side = json_number(jn["area_side"], "network.area_side");
    }
    if (jn.contains("base_links")) {
      src.gen.base_links = json_int(jn["base_links"], "network.base_links");
    }
    if (jn.contains("energy_per_metre")) {
      src.gen.energy_per_metre =
          json_number(jn["energy_per_metre"], "network.energy_per_metre");
    }
    if (deadline_range) src.gen.deadline_range = *deadline_range;
    if (energy_range) src.gen.energy_range = *energy_range;
  } else if (source == "file") {
    src.kind = NetworkSource::Kind::File;
    if (!jn.contains("path")) {
      throw ConfigurationError("network.source 'file' needs network.path");
    }
    src.path = jn["path"].get<std::string>();
    src.deadline_range = deadline_range;
    src.energy_range = energy_range;
  } else if (source == "gps_csv") {
    src.kind = NetworkSource::Kind::GpsCsv;
    if (!jn.contains("sinks_csv") || !jn.contains("bases_csv")) {
      throw ConfigurationError(
          "network.source 'gps_csv' needs network.sinks_csv and network.bases_csv");
    }
    src.sinks_csv = jn["sinks_csv"].get<std::string>();
    src.bases_csv = jn["bases_csv"].get<std::string>();
    if (jn.contains("base_links")) {
      src.base_links = json_int(jn["base_links"], "network.base_links");
    }
    if (jn.contains("energy_per_metre")) {
      src.energy_per_metre =
          json_number(jn["energy_per_metre"], "network.energy_per_metre");
    }
    src.deadline_range = deadline_range;
    src.energy_range = energy_range;
  } else {
    throw ConfigurationError("unknown network.source '" + source +
                             "' (generated, file, gps_csv)");
  }
}

void parse_cost(const nlohmann::json& jc, CostParams& cost) {
  if (jc.contains("alpha")) cost.alpha = json_number(jc["alpha"], "cost.alpha");
  if (jc.contains("beta")) cost.beta = json_number(jc["beta"], "cost.beta");
  if (jc.contains("gamma")) cost.gamma = json_number(jc["gamma"], "cost.gamma");
  if (jc.contains("scenario")) {
    cost.scenario = parse_scenario(jc["scenario"].get<std::string>());
  }
  if (jc.contains("wait_threshold")) {
    cost.wait_threshold = json_threshold(jc["wait_threshold"], "cost.wait_threshold");
  }
  if (jc.contains("late_threshold")) {
    cost.late_threshold = json_threshold(jc["late_threshold"], "cost.late_threshold");
  }
  if (jc.contains("wait_advances_clock")) {
    cost.wait_advances_clock = jc["wait_advances_clock"].get<bool>();
  }
  if (jc.contains("node_overrides")) {
    for (const auto& [key, jo] : jc["node_overrides"].items()) {
      NodeThresholds nt;
      if (jo.contains("wait")) {
        nt.wait = json_threshold(jo["wait"], "cost.node_overrides." + key + ".wait");
      }
      if (jo.contains("late")) {
        nt.late = json_threshold(jo["late"], "cost.node_overrides." + key + ".late");
      }
      try {
        cost.node_overrides[std::stoi(key)] = nt;
      } catch (const std::logic_error&) {
        throw ConfigurationError("cost.node_overrides key '" + key +
                                 "' is not a sink id");
      }
    }
  }
}

void parse_run(const nlohmann::json& jr, RunSpec& run) {
  if (jr.contains("mode")) {
    const std::string mode = jr["mode"].get<std::string>();
    if (mode == "single") run.mode = RunSpec::Mode::Single;
    else if (mode == "persistent") run.mode = RunSpec::Mode::Persistent;
    else if (mode == "sweep") run.mode = RunSpec::Mode::Sweep;
    else if (mode == "threshold_sweep") run.mode = RunSpec::Mode::ThresholdSweep;
    else {
      throw ConfigurationError("unknown run.mode '" + mode +
                               "' (single, persistent, sweep, threshold_sweep)");
    }
  }
  if (jr.contains("max_rounds")) {
    run.max_rounds = json_int(jr["max_rounds"], "run.max_rounds");
    if (run.max_rounds < 1) throw ConfigurationError("run.max_rounds must be >= 1");
  }
  if (jr.contains("stop_on_period")) {
    run.stop_on_period = jr["stop_on_period"].get<bool>();
  }
  if (jr.contains("round_svgs")) run.round_svgs = jr["round_svgs"].get<bool>();
  if (jr.contains("sweep")) {
    const auto& js = jr["sweep"];
    if (js.contains("parameter")) {
      run.schedule.parameter = js["parameter"].get<std::string>();
    }
    if (js.contains("increment")) {
      run.schedule.increment = json_number(js["increment"], "run.sweep.increment");
    }
    if (js.contains("runs")) {
      run.runs = json_int(js["runs"], "run.sweep.runs");
      if (run.runs < 1) throw ConfigurationError("run.sweep.runs must be >= 1");
    }
    if (js.contains("chain")) run.chain = js["chain"].get<bool>();
  }
  if (jr.contains("threshold")) {
    const auto& jt = jr["threshold"];
    if (jt.contains("kind")) {
      const std::string kind = jt["kind"].get<std::string>();
      if (kind == "late") run.threshold_kind = ThresholdKind::Late;
      else if (kind == "waiting") run.threshold_kind = ThresholdKind::Waiting;
      else throw ConfigurationError("unknown run.threshold.kind '" + kind + "'");
    }
    if (jt.contains("values")) {
      for (const auto& v : jt["values"]) {
        run.thresholds.push_back(json_threshold(v, "run.threshold.values"));
      }
    }
  }
  if (run.mode == RunSpec::Mode::ThresholdSweep && run.thresholds.empty()) {
    throw ConfigurationError("threshold_sweep needs run.threshold.values");
  }
}

}  // namespace

ScenarioConfig load_scenario_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open scenario '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError("bad JSON in scenario '" + path + "': " + e.what());
  }

  ScenarioConfig cfg;
  cfg.base_dir = fs::path(path).parent_path().string();
  try {
    if (j.contains("network")) parse_network(j["network"], cfg.network);
    if (j.contains("fleet")) {
      for (const auto& ju : j["fleet"]) {
        FleetEntry e;
        if (!ju.contains("id") || !ju.contains("base")) {
          throw ConfigurationError("fleet entries need 'id' and 'base'");
        }
        e.id = json_int(ju["id"], "fleet.id");
        e.base = json_int(ju["base"], "fleet.base");
        e.speed = ju.contains("speed") ? json_number(ju["speed"], "fleet.speed") : 1.0;
        if (e.speed <= 0.0) {
          throw ConfigurationError("uav " + std::to_string(e.id) +
                                   " needs a positive speed");
        }
        cfg.fleet.push_back(e);
      }
    }
    if (j.contains("cost")) parse_cost(j["cost"], cfg.cost);
    if (j.contains("run")) parse_run(j["run"], cfg.run);
    if (j.contains("oracle")) {
      const auto& jo = j["oracle"];
      if (jo.contains("max_sinks")) {
        cfg.oracle.max_sinks = json_int(jo["max_sinks"], "oracle.max_sinks");
      }
      if (jo.contains("max_fleet")) {
        cfg.oracle.max_fleet = json_int(jo["max_fleet"], "oracle.max_fleet");
      }
    }
    if (j.contains("vrp")) cfg.vrp_path = j["vrp"].get<std::string>();
    if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("svg")) cfg.svg = j["svg"].get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError("scenario '" + path + "': " + e.what());
  }

  for (std::size_t i = 0; i < cfg.fleet.size(); ++i) {
    for (std::size_t k = i + 1; k < cfg.fleet.size(); ++k) {
      if (cfg.fleet[i].id == cfg.fleet[k].id) {
        throw ConfigurationError("duplicate uav id " +
                                 std::to_string(cfg.fleet[i].id));
      }
    }
  }
  validate(cfg.cost);
  return cfg;
}

void apply_overrides(ScenarioConfig& config, const CliOverrides& overrides) {
  if (overrides.seed) config.seed = overrides.seed;
  if (overrides.out_dir) config.out_dir = *overrides.out_dir;
  if (overrides.svg) config.svg = *overrides.svg;
}

namespace {

Network maybe_redraw(Network net, const NetworkSource& src,
                     const ScenarioConfig& cfg) {
  if (!src.deadline_range && !src.energy_range) return net;
  if (!cfg.seed) {
    throw ConfigurationError("redrawing node attributes needs a seed");
  }
  return with_random_node_attributes(net, src.deadline_range, src.energy_range,
                                     *cfg.seed);
}

}  // namespace

Network build_network(const ScenarioConfig& config) {
  const NetworkSource& src = config.network;
  switch (src.kind) {
    case NetworkSource::Kind::Generated: {
      if (!config.seed) {
        throw ConfigurationError("generating a network needs a seed");
      }
      return generate_random_network(src.gen, *config.seed);
    }
    case NetworkSource::Kind::File:
      return maybe_redraw(load_network_file(resolve(config.base_dir, src.path)),
                          src, config);
    case NetworkSource::Kind::GpsCsv: {
      GpsIngestOptions opt;
      opt.base_links = src.base_links;
      opt.energy_per_metre = src.energy_per_metre;
      return maybe_redraw(
          ingest_gps_csv(resolve(config.base_dir, src.sinks_csv),
                         resolve(config.base_dir, src.bases_csv), opt),
          src, config);
    }
  }
  throw ConfigurationError("unhandled network source");
}

std::vector<Uav> build_fleet(const ScenarioConfig& config, const Network& net) {
  if (config.fleet.empty()) throw ConfigurationError("scenario defines no fleet");
  std::vector<Uav> fleet;
  for (const FleetEntry& e : config.fleet) {
    if (!net.has_base(e.base)) {
      throw ConfigurationError("uav " + std::to_string(e.id) +
                               " starts at unknown base B" + std::to_string(e.base));
    }
    Uav u;
    u.id = e.id;
    u.speed = e.speed;
    u.home_base = e.base;
    u.position = NodeRef::base(e.base);
    fleet.push_back(u);
  }
  return fleet;
}

namespace {

std::string join_labels(std::span<const NodeRef> nodes) {
  std::string s;
  for (const NodeRef& n : nodes) {
    if (!s.empty()) s += '>';
    s += n.label();
  }
  return s;
}

// One row per collection-phase hop; transit hops (no visit at the endpoint)
// leave the visit columns empty. Delivery legs live in summary.csv as a path.
void write_plans_csv(std::ostream& out, const RoundResult& round) {
  out << "uav_id,leg,from,to,energy,length,arrival,wait,lateness,node_cost\n";
  for (const Plan& p : round.plans) {
    std::size_t visit_ix = 0;
    int leg_no = 0;
    for (const PlanLeg& leg : p.legs) {
      if (leg.phase == LegPhase::Delivery) continue;
      ++leg_no;
      out << p.uav_id << ',' << leg_no << ',' << leg.from.label() << ','
          << leg.to.label() << ',' << format_number(leg.energy) << ','
          << format_number(leg.length) << ',' << format_number(leg.arrival) << ',';
      if (leg.phase == LegPhase::Collection && visit_ix < p.arrivals.size()) {
        const VisitOutcome& v = p.arrivals[visit_ix++];
        out << format_number(v.wait) << ',' << format_number(v.lateness) << ','
            << format_number(v.node_cost);
      } else {
        out << ",,";
      }
      out << '\n';
    }
  }
}

void write_summary_csv(std::ostream& out, const RoundResult& round) {
  std::string unvisited;
  for (int id : round.unvisited) {
    if (!unvisited.empty()) unvisited += ';';
    unvisited += std::to_string(id);
  }
  out << "uav_id,home_base,collection_path,delivery_path,launch_energy,"
         "visit_cost,travel_energy,delivery_energy,total_cost,round_cost,"
         "unvisited\n";
  for (const Plan& p : round.plans) {
    out << p.uav_id << ',' << p.collection_path.front().label() << ','
        << join_labels(p.collection_path) << ',' << join_labels(p.delivery_path)
        << ',' << format_number(p.breakdown.launch_energy) << ','
        << format_number(p.breakdown.node_costs) << ','
        << format_number(p.breakdown.travel_energy) << ','
        << format_number(p.breakdown.delivery_energy) << ','
        << format_number(p.breakdown.total) << ','
        << format_number(round.total_cost) << ',' << unvisited << '\n';
  }
}

nlohmann::json round_json(const RoundResult& round) {
  nlohmann::json j;
  j["total_cost"] = round.total_cost;
  j["unvisited"] = std::vector<int>(round.unvisited.begin(), round.unvisited.end());
  j["iterations"] = round.iterations;
  j["work_ops"] = round.work_ops;
  return j;
}

void write_round_artifacts(const std::string& dir, const Network& net,
                           const RoundResult& round, bool svg) {
  {
    std::ostringstream ss;
    write_plans_csv(ss, round);
    atomic_write_file(dir + "/plans.csv", ss.str());
  }
  {
    std::ostringstream ss;
    write_summary_csv(ss, round);
    atomic_write_file(dir + "/summary.csv", ss.str());
  }
  atomic_write_file(dir + "/run.json", round_json(round).dump(2) + "\n");
  if (svg) atomic_write_file(dir + "/paths.svg", render_round_svg(net, round));
}

}  // namespace

void cmd_plan(const ScenarioConfig& config) {
  const Network net = build_network(config);
  const std::vector<Uav> fleet = build_fleet(config, net);
  const RoundResult round = plan_round(net, fleet, config.cost);

  save_network_file(net, config.out_dir + "/network.json");
  write_round_artifacts(config.out_dir, net, round, config.svg);
  std::cout << "round complete: cost " << format_number(round.total_cost)
            << ", unvisited " << round.unvisited.size() << ", iterations "
            << round.iterations << "\n";
}

void cmd_persist(const ScenarioConfig& config) {
  const Network net = build_network(config);
  const std::vector<Uav> fleet = build_fleet(config, net);

  PersistentConfig pc;
  pc.max_rounds = config.run.max_rounds;
  pc.stop_on_period = config.run.stop_on_period;
  const PersistentRun run = run_persistent(net, fleet, config.cost, pc);

  std::ostringstream ss;
  ss << "round,uav_id,start_base,collection_path,delivery_path,uav_cost,"
        "round_cost,unvisited\n";
  for (std::size_t r = 0; r < run.rounds.size(); ++r) {
    const RoundResult& round = run.rounds[r];
    for (std::size_t u = 0; u < round.plans.size(); ++u) {
      const Plan& p = round.plans[u];
      ss << r << ',' << p.uav_id << ",B" << run.start_bases[r][u] << ','
         << join_labels(p.collection_path) << ',' << join_labels(p.delivery_path)
         << ',' << format_number(p.breakdown.total) << ','
         << format_number(round.total_cost) << ',' << round.unvisited.size()
         << '\n';
    }
  }
  atomic_write_file(config.out_dir + "/rounds.csv", ss.str());

  nlohmann::json j;
  j["rounds"] = run.rounds.size();
  if (run.period) {
    j["period"] = {{"start", run.period->start}, {"length", run.period->length}};
  } else {
    j["period"] = nullptr;
  }
  j["signatures"] = run.signatures;
  nlohmann::json totals = nlohmann::json::array();
  for (const RoundResult& r : run.rounds) totals.push_back(r.total_cost);
  j["round_costs"] = totals;
  atomic_write_file(config.out_dir + "/period.json", j.dump(2) + "\n");

  if (config.svg) {
    std::vector<ChartSeries> series{{"round cost", {}}};
    for (std::size_t r = 0; r < run.rounds.size(); ++r) {
      series[0].points.emplace_back(static_cast<double>(r),
                                    run.rounds[r].total_cost);
    }
    atomic_write_file(
        config.out_dir + "/persist.svg",
        render_line_chart_svg("cost per round", "round", "cost", series));
    if (config.run.round_svgs) {
      for (std::size_t r = 0; r < run.rounds.size(); ++r) {
        char name[32];
        std::snprintf(name, sizeof name, "round_%03zu.svg", r);
        atomic_write_file(config.out_dir + "/" + name,
                          render_round_svg(net, run.rounds[r]));
      }
    }
  }

  std::cout << "ran " << run.rounds.size() << " rounds: ";
  if (run.period) {
    std::cout << "period start " << run.period->start << ", length "
              << run.period->length << "\n";
  } else {
    std::cout << "no period detected\n";
  }
}

void cmd_sweep(const ScenarioConfig& config) {
  const Network net = build_network(config);
  const std::vector<Uav> fleet = build_fleet(config, net);

  if (config.run.mode == RunSpec::Mode::ThresholdSweep) {
    const std::vector<ThresholdPoint> points = unvisited_vs_threshold(
        net, fleet, config.cost, config.run.thresholds, config.run.threshold_kind);
    std::ostringstream ss;
    write_threshold_csv(ss, points);
    atomic_write_file(config.out_dir + "/thresholds.csv", ss.str());
    if (config.svg) {
      std::vector<ChartSeries> series{{"unvisited", {}}};
      for (const ThresholdPoint& p : points) {
        series[0].points.emplace_back(p.threshold, p.unvisited);
      }
      const char* x = config.run.threshold_kind == ThresholdKind::Late
                          ? "lateness threshold"
                          : "waiting threshold";
      atomic_write_file(
          config.out_dir + "/thresholds.svg",
          render_line_chart_svg("unvisited sinks", x, "unvisited", series));
    }
    std::cout << "threshold sweep complete: " << points.size() << " points\n";
    return;
  }

  const std::vector<SweepRecord> records =
      run_sweep(net, fleet, config.cost, config.run.schedule, config.run.runs,
                config.run.chain);
  std::ostringstream ss;
  write_sweep_csv(ss, records);
  atomic_write_file(config.out_dir + "/sweep.csv", ss.str());
  if (config.svg) {
    const bool by_run = config.run.schedule.parameter == "none";
    std::vector<ChartSeries> series;
    for (const FleetEntry& e : config.fleet) {
      series.push_back({"uav " + std::to_string(e.id), {}});
    }
    series.push_back({"average", {}});
    for (const SweepRecord& r : records) {
      const double x = by_run ? r.run_index : r.value;
      std::size_t s = 0;
      for (const FleetEntry& e : config.fleet) {
        const auto it = r.per_uav_cost.find(e.id);
        if (it != r.per_uav_cost.end()) {
          series[s].points.emplace_back(x, it->second);
        }
        ++s;
      }
      series.back().points.emplace_back(x, r.average_cost);
    }
    atomic_write_file(
        config.out_dir + "/sweep.svg",
        render_line_chart_svg("cost per run",
                              by_run ? "run" : config.run.schedule.parameter,
                              "cost", series));
  }
  std::cout << "sweep complete: " << records.size() << " runs of "
            << config.run.schedule.parameter << "\n";
}

void cmd_verify(const ScenarioConfig& config) {
  const Network net = build_network(config);
  const std::vector<Uav> fleet = build_fleet(config, net);

  const RoundResult greedy = plan_round(net, fleet, config.cost);
  const ExactSolution exact = solve_exact(net, fleet, config.cost, config.oracle);

  const int n = static_cast<int>(net.sinks().size());
  const int greedy_cov = n - static_cast<int>(greedy.unvisited.size());
  const int exact_cov = n - static_cast<int>(exact.unvisited.size());
  const bool consistent =
      exact_cov > greedy_cov ||
      (exact_cov == greedy_cov && exact.total_cost <= greedy.total_cost + 1e-9);

  nlohmann::json j;
  j["greedy"] = {{"total_cost", greedy.total_cost},
                 {"unvisited", std::vector<int>(greedy.unvisited.begin(),
                                                greedy.unvisited.end())}};
  nlohmann::json assignments = nlohmann::json::object();
  for (const auto& [uav_id, sinks] : exact.assignments) {
    assignments[std::to_string(uav_id)] = sinks;
  }
  j["exact"] = {{"total_cost", exact.total_cost},
                {"unvisited", std::vector<int>(exact.unvisited.begin(),
                                               exact.unvisited.end())},
                {"explored", exact.explored},
                {"assignments", assignments}};
  j["gap_abs"] = greedy.total_cost - exact.total_cost;
  j["gap_rel"] = exact.total_cost > 0.0
                     ? (greedy.total_cost - exact.total_cost) / exact.total_cost
                     : 0.0;
  j["consistent"] = consistent;
  atomic_write_file(config.out_dir + "/verify.json", j.dump(2) + "\n");

  std::cout << "greedy " << format_number(greedy.total_cost) << " vs exact "
            << format_number(exact.total_cost) << " over " << exact.explored
            << " configurations" << (consistent ? "" : " (INCONSISTENT)") << "\n";
}

void cmd_reduce(const ScenarioConfig& config) {
  if (config.vrp_path.empty()) {
    throw ConfigurationError("reduce needs a 'vrp' instance path");
  }
  const VrpInstance vrp =
      load_vrp_instance(resolve(config.base_dir, config.vrp_path));
  const ReducedInstance red = vrp_to_datamuling(vrp);

  save_network_file(red.network, config.out_dir + "/network.json");
  const RoundResult round = plan_round(red.network, red.fleet, red.params);
  write_round_artifacts(config.out_dir, red.network, round, config.svg);

  std::cout << "reduced VRP: " << vrp.customers.size() << " customers, "
            << vrp.vehicles << " vehicles, travel cost "
            << format_number(round.total_cost) << "\n";
}

void cmd_gen(const ScenarioConfig& config) {
  const Network net = build_network(config);
  save_network_file(net, config.out_dir + "/network.json");
  if (config.svg) {
    atomic_write_file(config.out_dir + "/network.svg", render_network_svg(net));
  }
  std::cout << "network: " << net.sinks().size() << " sinks, "
            << net.bases().size() << " bases, " << net.uav_edges().size()
            << " edges\n";
}

}  // namespace datamule
