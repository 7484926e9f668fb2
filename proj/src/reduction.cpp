#include "datamule/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "json.hpp"

namespace datamule {

VrpInstance load_vrp_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open VRP instance '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError("bad JSON in '" + path + "': " + e.what());
  }

  VrpInstance vrp;
  if (!j.contains("depot") || !j.contains("customers")) {
    throw IngestionError(path + ": VRP instance needs 'depot' and 'customers'");
  }
  vrp.depot = {j["depot"].value("x", 0.0), j["depot"].value("y", 0.0)};
  for (const auto& jc : j["customers"]) {
    if (!jc.contains("id")) throw IngestionError(path + ": customer without id");
    vrp.customers.push_back(
        {jc["id"].get<int>(), {jc.value("x", 0.0), jc.value("y", 0.0)}});
  }
  vrp.vehicles = j.value("vehicles", 1);
  if (j.contains("matrix")) {
    vrp.matrix = j["matrix"].get<std::vector<std::vector<double>>>();
  }

  std::set<int> ids;
  for (const VrpCustomer& c : vrp.customers) {
    if (!ids.insert(c.id).second) {
      throw IngestionError(path + ": duplicate customer id " + std::to_string(c.id));
    }
  }
  if (vrp.vehicles < 1) throw IngestionError(path + ": vehicles must be >= 1");
  if (!vrp.matrix.empty()) {
    const std::size_t n = vrp.customers.size() + 1;
    if (vrp.matrix.size() != n) {
      throw IngestionError(path + ": matrix must be " + std::to_string(n) + "x" +
                           std::to_string(n));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (vrp.matrix[r].size() != n) {
        throw IngestionError(path + ": matrix row " + std::to_string(r) +
                             " has wrong width");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (r != c && vrp.matrix[r][c] <= 0) {
          throw IngestionError(path + ": off-diagonal distances must be positive");
        }
        if (vrp.matrix[r][c] != vrp.matrix[c][r]) {
          throw IngestionError(path + ": matrix must be symmetric");
        }
      }
    }
  }
  return vrp;
}

Network cluster_bases(const Network& net) {
  if (net.bases().size() <= 1) return net;

  const int super_id = net.bases().front().id;  // smallest, bases are sorted
  Point centroid{0.0, 0.0};
  int capacity = 0;
  for (const BaseStation& b : net.bases()) {
    centroid.x += b.position.x;
    centroid.y += b.position.y;
    capacity += b.capacity;
  }
  centroid.x /= static_cast<double>(net.bases().size());
  centroid.y /= static_cast<double>(net.bases().size());

  std::vector<UavEdge> edges;
  // cheapest base link per sink survives; ties keep the lower base id,
  // which is the order edges arrive in since they are sorted
  std::map<int, UavEdge> best_base_link;
  for (const UavEdge& e : net.uav_edges()) {
    if (e.a.is_sink() && e.b.is_sink()) {
      edges.push_back(e);
      continue;
    }
    const NodeRef sink = e.a.is_sink() ? e.a : e.b;
    auto it = best_base_link.find(sink.id);
    if (it == best_base_link.end() || e.energy < it->second.energy) {
      UavEdge link{NodeRef::base(super_id), sink, e.energy, e.length};
      best_base_link.insert_or_assign(sink.id, link);
    }
  }
  for (const auto& [sink_id, link] : best_base_link) {
    (void)sink_id;
    edges.push_back(link);
  }

  return Network::build(net.sinks(), {BaseStation{super_id, centroid, capacity}},
                        std::move(edges), Network::Validation::Strict,
                        net.sensor_nodes(), net.wireless_links());
}

Network invert_weights(const Network& net) {
  std::vector<UavEdge> edges = net.uav_edges();
  for (UavEdge& e : edges) {
    if (e.energy == 0.0) {
      throw DomainError("cannot invert zero-weight edge " + e.a.label() + "-" +
                        e.b.label());
    }
    e.energy = 1.0 / e.energy;
  }
  return Network::build(net.sinks(), net.bases(), std::move(edges),
                        Network::Validation::Relaxed, net.sensor_nodes(),
                        net.wireless_links());
}

ReducedInstance vrp_to_datamuling(const VrpInstance& vrp) {
  if (vrp.customers.empty()) throw ParameterError("VRP instance has no customers");
  if (vrp.vehicles < 1) throw ParameterError("vehicles must be >= 1");

  const bool use_matrix = !vrp.matrix.empty();
  auto dist = [&](int row, int col) {
    if (use_matrix) return vrp.matrix[row][col];
    const Point& a = row == 0 ? vrp.depot : vrp.customers[row - 1].position;
    const Point& b = col == 0 ? vrp.depot : vrp.customers[col - 1].position;
    return distance(a, b);
  };

  ReducedInstance out;
  std::vector<SinkNode> sinks;
  for (const VrpCustomer& c : vrp.customers) {
    // customers become sinks that are always on time and free to read
    sinks.push_back({c.id, c.position, 0.0, 0.0});
  }
  const int depot_id = 1;
  std::vector<BaseStation> bases{{depot_id, vrp.depot, vrp.vehicles}};

  std::vector<UavEdge> edges;
  const int n = static_cast<int>(vrp.customers.size());
  for (int i = 0; i < n; ++i) {
    double d = dist(0, i + 1);
    edges.push_back({NodeRef::base(depot_id), NodeRef::sink(vrp.customers[i].id), d, d});
    for (int k = i + 1; k < n; ++k) {
      double dd = dist(i + 1, k + 1);
      edges.push_back(
          {NodeRef::sink(vrp.customers[i].id), NodeRef::sink(vrp.customers[k].id), dd, dd});
    }
  }

  out.network = Network::build(std::move(sinks), std::move(bases), std::move(edges));
  for (int v = 1; v <= vrp.vehicles; ++v) {
    Uav u;
    u.id = v;
    u.speed = 1.0;
    u.home_base = depot_id;
    out.fleet.push_back(u);
  }
  // zero weights: visit costs vanish and the objective is pure travel energy
  out.params.alpha = 0.0;
  out.params.beta = 0.0;
  out.params.gamma = 0.0;
  out.params.scenario = Scenario::Free;
  return out;
}

}  // namespace datamule
