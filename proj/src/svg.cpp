#include "datamule/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "datamule/io.hpp"

namespace datamule {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 50.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

struct Frame {
  double min_x = 0.0, min_y = 0.0, scale = 1.0;

  double sx(double x) const { return kMargin + (x - min_x) * scale; }
  // SVG y grows downward; flip so north stays up
  double sy(double y) const { return kCanvas - kMargin - (y - min_y) * scale; }
};

Frame fit_frame(const Network& net) {
  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -min_x, max_y = -min_x;
  auto grow = [&](Point p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  };
  for (const SinkNode& s : net.sinks()) grow(s.position);
  for (const BaseStation& b : net.bases()) grow(b.position);
  if (!std::isfinite(min_x)) return {};

  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  return {min_x, min_y, (kCanvas - 2.0 * kMargin) / span};
}

std::string num(double v) { return format_number(std::round(v * 100.0) / 100.0); }

void open_svg(std::ostringstream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas
      << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " "
      << kCanvas << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void draw_nodes(std::ostringstream& out, const Network& net, const Frame& f,
                const std::set<int>& unvisited) {
  for (const UavEdge& e : net.uav_edges()) {
    const Point a = net.position(e.a), b = net.position(e.b);
    out << "<line x1=\"" << num(f.sx(a.x)) << "\" y1=\"" << num(f.sy(a.y))
        << "\" x2=\"" << num(f.sx(b.x)) << "\" y2=\"" << num(f.sy(b.y))
        << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
  }
  for (const SinkNode& s : net.sinks()) {
    const bool missed = unvisited.count(s.id) > 0;
    out << "<circle cx=\"" << num(f.sx(s.position.x)) << "\" cy=\""
        << num(f.sy(s.position.y)) << "\" r=\"5\" fill=\""
        << (missed ? "#d62728" : "#555555") << "\"/>\n"
        << "<text x=\"" << num(f.sx(s.position.x) + 7.0) << "\" y=\""
        << num(f.sy(s.position.y) - 7.0) << "\" font-size=\"11\">" << s.id
        << "</text>\n";
  }
  for (const BaseStation& b : net.bases()) {
    out << "<rect x=\"" << num(f.sx(b.position.x) - 6.0) << "\" y=\""
        << num(f.sy(b.position.y) - 6.0)
        << "\" width=\"12\" height=\"12\" fill=\"#111111\"/>\n"
        << "<text x=\"" << num(f.sx(b.position.x) + 8.0) << "\" y=\""
        << num(f.sy(b.position.y) - 8.0) << "\" font-size=\"11\">B" << b.id
        << "</text>\n";
  }
}

}  // namespace

std::string render_network_svg(const Network& net) {
  std::ostringstream out;
  open_svg(out);
  draw_nodes(out, net, fit_frame(net), {});
  out << "</svg>\n";
  return out.str();
}

std::string render_round_svg(const Network& net, const RoundResult& round) {
  const Frame f = fit_frame(net);
  std::ostringstream out;
  open_svg(out);
  draw_nodes(out, net, f, round.unvisited);

  int color_ix = 0;
  for (const Plan& p : round.plans) {
    const char* color = kPalette[color_ix++ % (sizeof(kPalette) / sizeof(*kPalette))];
    for (const PlanLeg& leg : p.legs) {
      const Point a = net.position(leg.from), b = net.position(leg.to);
      out << "<line x1=\"" << num(f.sx(a.x)) << "\" y1=\"" << num(f.sy(a.y))
          << "\" x2=\"" << num(f.sx(b.x)) << "\" y2=\"" << num(f.sy(b.y))
          << "\" stroke=\"" << color << "\" stroke-width=\"2\"";
      if (leg.phase == LegPhase::Delivery) {
        out << " stroke-dasharray=\"6 4\"";
      } else if (leg.phase == LegPhase::Transit) {
        out << " stroke-dasharray=\"2 3\"";
      }
      out << "/>\n";
    }
    out << "<text x=\"" << num(kMargin) << "\" y=\""
        << num(kMargin / 2.0 + 14.0 * color_ix) << "\" font-size=\"12\" fill=\""
        << color << "\">uav " << p.uav_id << ": "
        << format_number(p.breakdown.total) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_line_chart_svg(const std::string& title,
                                  const std::string& x_label,
                                  const std::string& y_label,
                                  std::span<const ChartSeries> series) {
  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -min_x, max_y = -min_x;
  for (const ChartSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  if (!std::isfinite(min_x)) min_x = max_x = min_y = max_y = 0.0;
  if (max_x == min_x) max_x = min_x + 1.0;
  if (max_y == min_y) max_y = min_y + 1.0;

  const double plot = kCanvas - 2.0 * kMargin;
  auto px = [&](double x) { return kMargin + (x - min_x) / (max_x - min_x) * plot; };
  auto py = [&](double y) {
    return kCanvas - kMargin - (y - min_y) / (max_y - min_y) * plot;
  };

  std::ostringstream out;
  open_svg(out);
  out << "<text x=\"" << kCanvas / 2.0 << "\" y=\"25\" text-anchor=\"middle\" "
         "font-size=\"16\">"
      << title << "</text>\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kCanvas - kMargin
      << "\" x2=\"" << kCanvas - kMargin << "\" y2=\"" << kCanvas - kMargin
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\""
      << kMargin << "\" y2=\"" << kCanvas - kMargin << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << kCanvas / 2.0 << "\" y=\"" << kCanvas - 10.0
      << "\" text-anchor=\"middle\" font-size=\"12\">" << x_label << "</text>\n"
      << "<text x=\"15\" y=\"" << kCanvas / 2.0
      << "\" font-size=\"12\" transform=\"rotate(-90 15 " << kCanvas / 2.0
      << ")\" text-anchor=\"middle\">" << y_label << "</text>\n";

  // axis extent annotations beat full tick machinery for quick inspection
  out << "<text x=\"" << kMargin << "\" y=\"" << kCanvas - kMargin + 15.0
      << "\" font-size=\"10\">" << format_number(min_x) << "</text>\n"
      << "<text x=\"" << kCanvas - kMargin << "\" y=\""
      << kCanvas - kMargin + 15.0 << "\" text-anchor=\"end\" font-size=\"10\">"
      << format_number(max_x) << "</text>\n"
      << "<text x=\"" << kMargin - 5.0 << "\" y=\"" << kCanvas - kMargin
      << "\" text-anchor=\"end\" font-size=\"10\">" << format_number(min_y)
      << "</text>\n"
      << "<text x=\"" << kMargin - 5.0 << "\" y=\"" << kMargin
      << "\" text-anchor=\"end\" font-size=\"10\">" << format_number(max_y)
      << "</text>\n";

  int color_ix = 0;
  for (const ChartSeries& s : series) {
    const char* color = kPalette[color_ix % (sizeof(kPalette) / sizeof(*kPalette))];
    ++color_ix;
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      out << num(px(x)) << "," << num(py(y)) << " ";
    }
    out << "\"/>\n";
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      out << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y))
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    out << "<text x=\"" << kCanvas - kMargin - 5.0 << "\" y=\""
        << kMargin + 14.0 * color_ix << "\" text-anchor=\"end\" font-size=\"12\" "
        << "fill=\"" << color << "\">" << s.label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace datamule
