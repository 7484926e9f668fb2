#include "datamule/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "datamule/io.hpp"

namespace datamule {

namespace {

bool known_parameter(const std::string& p) {
  return p == "alpha" || p == "beta" || p == "gamma" || p == "speed" ||
         p == "none";
}

double sweep_base_value(const std::string& parameter, const CostParams& params,
                        const std::vector<Uav>& fleet) {
  if (parameter == "alpha") return params.alpha;
  if (parameter == "beta") return params.beta;
  if (parameter == "gamma") return params.gamma;
  if (parameter == "speed") return fleet.front().speed;
  return 0.0;
}

void apply_sweep_value(const std::string& parameter, double value,
                       CostParams& params, std::vector<Uav>& fleet) {
  if (parameter == "none") return;
  if (parameter == "speed") {
    if (value <= 0.0) {
      throw ConfigurationError("speed sweep reached nonpositive speed " +
                               format_number(value));
    }
    for (Uav& u : fleet) u.speed = value;
    return;
  }
  if (value < 0.0) {
    throw ConfigurationError("sweep drove " + parameter + " negative (" +
                             format_number(value) + ")");
  }
  if (parameter == "alpha") params.alpha = value;
  if (parameter == "beta") params.beta = value;
  if (parameter == "gamma") params.gamma = value;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const Network& net, std::vector<Uav> fleet,
                                   const CostParams& base_params,
                                   const SweepSchedule& schedule, int runs,
                                   bool chain) {
  if (runs < 1) throw ParameterError("sweep needs at least one run");
  if (!known_parameter(schedule.parameter)) {
    throw ConfigurationError("unknown sweep parameter '" + schedule.parameter +
                             "'");
  }
  if (fleet.empty()) throw ConfigurationError("fleet is empty");

  const std::vector<Uav> initial_fleet = fleet;
  const double base = sweep_base_value(schedule.parameter, base_params, fleet);

  std::vector<SweepRecord> records;
  std::vector<std::string> signatures;
  for (int k = 0; k < runs; ++k) {
    const double value =
        schedule.parameter == "none" ? 0.0 : base + k * schedule.increment;
    if (!chain) fleet = initial_fleet;

    CostParams params = base_params;
    apply_sweep_value(schedule.parameter, value, params, fleet);

    PlanOptions options;
    options.enforce_capacity = k == 0;  // the starting configuration only
    RoundResult round = plan_round(net, fleet, params, options);
    signatures.push_back(canonical_signature(round));

    SweepRecord rec;
    rec.run_index = k;
    rec.parameter = schedule.parameter;
    rec.value = value;
    for (const Plan& p : round.plans) {
      rec.per_uav_cost[p.uav_id] = p.breakdown.total;
      for (const VisitOutcome& v : p.arrivals) rec.waiting_total += v.wait;
    }
    double sum = 0.0;
    for (const auto& [id, c] : rec.per_uav_cost) {
      (void)id;
      sum += c;
    }
    rec.average_cost = sum / static_cast<double>(rec.per_uav_cost.size());
    rec.unvisited_count = static_cast<int>(round.unvisited.size());
    rec.period = detect_period(signatures);
    rec.signature = signatures.back();
    records.push_back(std::move(rec));

    if (chain) fleet = relocate_fleet(fleet, round);
  }
  return records;
}

std::vector<ThresholdPoint> unvisited_vs_threshold(
    const Network& net, const std::vector<Uav>& fleet, const CostParams& params,
    std::span<const double> thresholds, ThresholdKind kind) {
  if (thresholds.empty()) throw ParameterError("no thresholds given");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (thresholds[i] < 0.0 || std::isnan(thresholds[i])) {
      throw ParameterError("thresholds must be non-negative");
    }
    if (i > 0 && thresholds[i] <= thresholds[i - 1]) {
      throw ParameterError("thresholds must be strictly ascending");
    }
  }

  std::vector<ThresholdPoint> points;
  for (double t : thresholds) {
    CostParams p = params;
    if (kind == ThresholdKind::Late) {
      p.scenario = Scenario::LateBounded;
      p.late_threshold = t;
    } else {
      p.scenario = Scenario::WaitBounded;
      p.wait_threshold = t;
    }
    RoundResult round = plan_round(net, fleet, p);
    points.push_back({t, static_cast<int>(round.unvisited.size())});
  }
  return points;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << "run,param_name,param_value,uav_id,uav_cost,avg_cost,unvisited,"
         "period_start,period_len\n";
  for (const SweepRecord& rec : records) {
    for (const auto& [uav_id, cost] : rec.per_uav_cost) {
      out << rec.run_index << ',' << rec.parameter << ','
          << format_number(rec.value) << ',' << uav_id << ','
          << format_number(cost) << ',' << format_number(rec.average_cost)
          << ',' << rec.unvisited_count << ',';
      if (rec.period) {
        out << rec.period->start << ',' << rec.period->length;
      } else {
        out << ',';
      }
      out << '\n';
    }
  }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IngestionError("empty sweep CSV");

  std::vector<SweepRecord> records;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    while (fields.size() < 9) fields.emplace_back();
    if (fields.size() != 9) {
      throw IngestionError("sweep CSV line " + std::to_string(line_no) +
                           ": expected 9 fields");
    }

    try {
      const int run = std::stoi(fields[0]);
      if (records.empty() || records.back().run_index != run) {
        SweepRecord rec;
        rec.run_index = run;
        rec.parameter = fields[1];
        rec.value = std::stod(fields[2]);
        rec.average_cost = std::stod(fields[5]);
        rec.unvisited_count = std::stoi(fields[6]);
        if (!fields[7].empty()) {
          rec.period = PeriodInfo{std::stoi(fields[7]), std::stoi(fields[8])};
        }
        records.push_back(std::move(rec));
      }
      records.back().per_uav_cost[std::stoi(fields[3])] = std::stod(fields[4]);
    } catch (const std::logic_error&) {
      throw IngestionError("sweep CSV line " + std::to_string(line_no) +
                           ": malformed number");
    }
  }
  return records;
}

void write_threshold_csv(std::ostream& out,
                         std::span<const ThresholdPoint> points) {
  out << "threshold,unvisited\n";
  for (const ThresholdPoint& p : points) {
    out << format_number(p.threshold) << ',' << p.unvisited << '\n';
  }
}

}  // namespace datamule
