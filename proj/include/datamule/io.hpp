#pragma once

#include <string>

#include "json.hpp"

#include "datamule/network.hpp"

namespace datamule {

// Shortest decimal representation that round-trips the exact double.
// Keeps every emitted artifact byte-deterministic.
std::string format_number(double v);

nlohmann::json network_to_json(const Network& net);
Network network_from_json(const nlohmann::json& j,
                          Network::Validation mode = Network::Validation::Strict);

// File front ends; loading validates strictly by default.
Network load_network_file(const std::string& path,
                          Network::Validation mode = Network::Validation::Strict);
void save_network_file(const Network& net, const std::string& path);

// Writes to "<path>.tmp" then renames, so readers never observe a torn file.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace datamule
