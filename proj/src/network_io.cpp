#include "datamule/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <system_error>

namespace datamule {

std::string format_number(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

nlohmann::json network_to_json(const Network& net) {
  nlohmann::json j;
  j["sinks"] = nlohmann::json::array();
  for (const SinkNode& s : net.sinks()) {
    j["sinks"].push_back({{"id", s.id},
                          {"x", s.position.x},
                          {"y", s.position.y},
                          {"r", s.revisit_deadline},
                          {"e", s.collection_energy}});
  }
  j["bases"] = nlohmann::json::array();
  for (const BaseStation& b : net.bases()) {
    j["bases"].push_back({{"id", b.id},
                          {"x", b.position.x},
                          {"y", b.position.y},
                          {"capacity", b.capacity}});
  }
  j["edges"] = nlohmann::json::array();
  for (const UavEdge& e : net.uav_edges()) {
    j["edges"].push_back({{"a", e.a.label()},
                          {"b", e.b.label()},
                          {"energy", e.energy},
                          {"length", e.length}});
  }
  if (!net.sensor_nodes().empty()) {
    j["sensor_nodes"] = nlohmann::json::array();
    for (const SensorNode& s : net.sensor_nodes()) {
      j["sensor_nodes"].push_back({{"id", s.id}, {"x", s.position.x}, {"y", s.position.y}});
    }
  }
  if (!net.wireless_links().empty()) {
    j["wireless_links"] = nlohmann::json::array();
    for (const WirelessLink& w : net.wireless_links()) {
      j["wireless_links"].push_back({{"a", w.a}, {"b", w.b}});
    }
  }
  return j;
}

namespace {

double require_number(const nlohmann::json& j, const char* key, const char* ctx) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw IngestionError(std::string(ctx) + ": missing numeric field '" + key + "'");
  }
  return j[key].get<double>();
}

int require_int(const nlohmann::json& j, const char* key, const char* ctx) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw IngestionError(std::string(ctx) + ": missing integer field '" + key + "'");
  }
  return j[key].get<int>();
}

}  // namespace

Network network_from_json(const nlohmann::json& j, Network::Validation mode) {
  if (!j.is_object() || !j.contains("sinks") || !j.contains("bases") ||
      !j.contains("edges")) {
    throw IngestionError("network file needs 'sinks', 'bases' and 'edges' arrays");
  }
  std::vector<SinkNode> sinks;
  for (const auto& js : j["sinks"]) {
    SinkNode s;
    s.id = require_int(js, "id", "sink");
    s.position = {require_number(js, "x", "sink"), require_number(js, "y", "sink")};
    s.revisit_deadline = js.value("r", 0.0);
    s.collection_energy = js.value("e", 0.0);
    sinks.push_back(s);
  }
  std::vector<BaseStation> bases;
  for (const auto& jb : j["bases"]) {
    BaseStation b;
    b.id = require_int(jb, "id", "base");
    b.position = {require_number(jb, "x", "base"), require_number(jb, "y", "base")};
    b.capacity = jb.value("capacity", 1);
    bases.push_back(b);
  }
  std::vector<UavEdge> edges;
  for (const auto& je : j["edges"]) {
    UavEdge e;
    if (!je.contains("a") || !je.contains("b")) {
      throw IngestionError("edge entry needs 'a' and 'b' labels");
    }
    e.a = NodeRef::parse(je["a"].get<std::string>());
    e.b = NodeRef::parse(je["b"].get<std::string>());
    e.energy = require_number(je, "energy", "edge");
    e.length = je.value("length", e.energy);
    edges.push_back(e);
  }
  std::vector<SensorNode> sensors;
  for (const auto& js : j.value("sensor_nodes", nlohmann::json::array())) {
    sensors.push_back({require_int(js, "id", "sensor"),
                       {require_number(js, "x", "sensor"), require_number(js, "y", "sensor")}});
  }
  std::vector<WirelessLink> wireless;
  for (const auto& jw : j.value("wireless_links", nlohmann::json::array())) {
    wireless.push_back({require_int(jw, "a", "wireless link"),
                        require_int(jw, "b", "wireless link")});
  }
  return Network::build(std::move(sinks), std::move(bases), std::move(edges), mode,
                        std::move(sensors), std::move(wireless));
}

Network load_network_file(const std::string& path, Network::Validation mode) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open network file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError("bad JSON in '" + path + "': " + e.what());
  }
  return network_from_json(j, mode);
}

void save_network_file(const Network& net, const std::string& path) {
  atomic_write_file(path, network_to_json(net).dump(2) + "\n");
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IngestionError("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw IngestionError("short write to '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

// ---- GPS ingestion ---------------------------------------------------------

Point project_equirectangular(double lat, double lon, double lat0, double lon0) {
  constexpr double kEarthRadiusM = 6371000.0;
  const double to_rad = std::numbers::pi / 180.0;
  double x = kEarthRadiusM * (lon - lon0) * to_rad * std::cos(lat0 * to_rad);
  double y = kEarthRadiusM * (lat - lat0) * to_rad;
  return {x, y};
}

namespace {

struct CsvRow {
  int line = 0;
  std::vector<std::string> fields;
};

std::vector<CsvRow> read_csv_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open CSV file '" + path + "'");
  std::vector<CsvRow> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // skip blank lines
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    CsvRow row;
    row.line = lineno;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
      // trim
      auto b = field.find_first_not_of(" \t");
      auto e = field.find_last_not_of(" \t");
      row.fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double parse_csv_number(const std::string& s, const std::string& path, int line) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw IngestionError(path + " line " + std::to_string(line) +
                         ": '" + s + "' is not a number");
  }
}

int parse_csv_int(const std::string& s, const std::string& path, int line) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw IngestionError(path + " line " + std::to_string(line) +
                         ": '" + s + "' is not an integer");
  }
}

}  // namespace

Network ingest_gps_csv(const std::string& sinks_csv_path,
                       const std::string& bases_csv_path,
                       const GpsIngestOptions& options) {
  if (options.base_links < 1) throw ParameterError("base_links must be >= 1");
  if (options.energy_per_metre <= 0) throw ParameterError("energy_per_metre must be positive");

  struct GpsRow {
    int label;
    double lat, lon;
    int capacity;
  };
  auto parse_file = [](const std::string& path, bool with_capacity) {
    auto rows = read_csv_rows(path);
    if (rows.empty()) throw IngestionError(path + ": empty file");
    const std::size_t expect = with_capacity ? 4 : 3;
    std::vector<GpsRow> out;
    std::set<int> labels;
    bool first = true;
    for (const CsvRow& row : rows) {
      if (first) {  // header
        first = false;
        continue;
      }
      if (row.fields.size() != expect) {
        throw IngestionError(path + " line " + std::to_string(row.line) + ": expected " +
                             std::to_string(expect) + " fields, got " +
                             std::to_string(row.fields.size()));
      }
      GpsRow g;
      g.label = parse_csv_int(row.fields[0], path, row.line);
      g.lat = parse_csv_number(row.fields[1], path, row.line);
      g.lon = parse_csv_number(row.fields[2], path, row.line);
      g.capacity = with_capacity ? parse_csv_int(row.fields[3], path, row.line) : 0;
      if (!labels.insert(g.label).second) {
        throw IngestionError(path + " line " + std::to_string(row.line) +
                             ": duplicate label " + std::to_string(g.label));
      }
      out.push_back(g);
    }
    return out;
  };

  auto sink_rows = parse_file(sinks_csv_path, false);
  auto base_rows = parse_file(bases_csv_path, true);
  if (sink_rows.empty()) throw IngestionError(sinks_csv_path + ": no sink rows");
  if (base_rows.empty()) {
    throw IngestionError(bases_csv_path + ": no base station rows");
  }

  double lat0, lon0;
  if (options.origin) {
    lat0 = options.origin->first;
    lon0 = options.origin->second;
  } else {
    lat0 = lon0 = 0.0;
    for (const GpsRow& g : sink_rows) { lat0 += g.lat; lon0 += g.lon; }
    for (const GpsRow& g : base_rows) { lat0 += g.lat; lon0 += g.lon; }
    const double n = static_cast<double>(sink_rows.size() + base_rows.size());
    lat0 /= n;
    lon0 /= n;
  }

  std::vector<SinkNode> sinks;
  for (const GpsRow& g : sink_rows) {
    sinks.push_back({g.label, project_equirectangular(g.lat, g.lon, lat0, lon0), 0.0, 0.0});
  }
  std::vector<BaseStation> bases;
  for (const GpsRow& g : base_rows) {
    if (g.capacity < 1) {
      throw IngestionError(bases_csv_path + ": base " + std::to_string(g.label) +
                           " capacity must be >= 1");
    }
    bases.push_back({g.label, project_equirectangular(g.lat, g.lon, lat0, lon0), g.capacity});
  }

  std::vector<UavEdge> edges;
  for (std::size_t i = 0; i < sinks.size(); ++i) {
    for (std::size_t k = i + 1; k < sinks.size(); ++k) {
      double d = distance(sinks[i].position, sinks[k].position);
      edges.push_back({NodeRef::sink(sinks[i].id), NodeRef::sink(sinks[k].id),
                       d * options.energy_per_metre, d});
    }
  }
  const int links = std::min<int>(options.base_links, static_cast<int>(sinks.size()));
  for (const BaseStation& b : bases) {
    std::vector<std::pair<double, int>> ranked;
    for (const SinkNode& s : sinks) ranked.push_back({distance(b.position, s.position), s.id});
    std::sort(ranked.begin(), ranked.end());
    for (int k = 0; k < links; ++k) {
      edges.push_back({NodeRef::base(b.id), NodeRef::sink(ranked[k].second),
                       ranked[k].first * options.energy_per_metre, ranked[k].first});
    }
  }

  return Network::build(std::move(sinks), std::move(bases), std::move(edges));
}

}  // namespace datamule
