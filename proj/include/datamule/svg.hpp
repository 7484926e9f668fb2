#pragma once

#include <span>
#include <string>
#include <vector>

#include "datamule/network.hpp"
#include "datamule/planner.hpp"

namespace datamule {

// Map view: sinks as circles (unvisited ones flagged in red), bases as
// squares, one color per UAV, solid collection strokes, dashed delivery.
std::string render_round_svg(const Network& net, const RoundResult& round);
std::string render_network_svg(const Network& net);

struct ChartSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

std::string render_line_chart_svg(const std::string& title,
                                  const std::string& x_label,
                                  const std::string& y_label,
                                  std::span<const ChartSeries> series);

}  // namespace datamule
