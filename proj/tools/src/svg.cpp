// Copyright 2026 The wqm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wqm/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace wqm::cli {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 64.0;

constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Extent {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-12) lo -= 0.5, hi += 0.5;
  }
};

}  // namespace

std::string line_chart(std::span<const Series> series, const ChartLabels& labels) {
  Extent ex, ey;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
        ex.add(s.x[i]);
        ey.add(s.y[i]);
      }
    }
  }
  ex.pad();
  ey.pad();
  const double pw = kWidth - 2 * kMargin;
  const double ph = kHeight - 2 * kMargin;
  auto px = [&](double x) { return kMargin + (x - ex.lo) / (ex.hi - ex.lo) * pw; };
  auto py = [&](double y) { return kHeight - kMargin - (y - ey.lo) / (ey.hi - ey.lo) * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
    << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(kHeight) << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
    << escape(labels.title) << "</text>\n";
  o << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\"" << num(pw)
    << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int t = 0; t <= kTicks; ++t) {
    const double fx = ex.lo + (ex.hi - ex.lo) * t / kTicks;
    const double fy = ey.lo + (ey.hi - ey.lo) * t / kTicks;
    o << "<text x=\"" << num(px(fx)) << "\" y=\"" << num(kHeight - kMargin + 16)
      << "\" text-anchor=\"middle\" font-size=\"11\">" << num(fx) << "</text>\n";
    o << "<text x=\"" << num(kMargin - 6) << "\" y=\"" << num(py(fy) + 4)
      << "\" text-anchor=\"end\" font-size=\"11\">" << num(fy) << "</text>\n";
    o << "<line x1=\"" << num(kMargin) << "\" x2=\"" << num(kMargin + pw) << "\" y1=\""
      << num(py(fy)) << "\" y2=\"" << num(py(fy)) << "\" stroke=\"#dddddd\"/>\n";
  }
  o << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 16)
    << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(labels.x_label) << "</text>\n";
  o << "<text x=\"16\" y=\"" << num(kHeight / 2) << "\" text-anchor=\"middle\" font-size=\"13\" "
    << "transform=\"rotate(-90 16 " << num(kHeight / 2) << ")\">" << escape(labels.y_label)
    << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kPalette[k % kPalette.size()];
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (!first) o << ' ';
      o << num(px(s.x[i])) << ',' << num(py(s.y[i]));
      first = false;
    }
    o << "\"/>\n";
    if (!s.label.empty()) {
      const double ly = kMargin + 14.0 + 14.0 * static_cast<double>(k);
      o << "<text x=\"" << num(kMargin + pw - 6) << "\" y=\"" << num(ly)
        << "\" text-anchor=\"end\" font-size=\"11\" fill=\"" << color << "\">" << escape(s.label)
        << "</text>\n";
    }
  }
  o << "</svg>\n";
  return o.str();
}

std::string heat_map(const Eigen::MatrixXd& entries, std::span<const std::size_t> separators,
                     const std::string& title) {
  const Eigen::Index n = entries.rows();
  const double cell = n > 0 ? std::max(4.0, 600.0 / static_cast<double>(n)) : 4.0;
  const double side = cell * static_cast<double>(n);
  const double top = 40.0;
  const double left = 20.0;

  const double max_abs = n > 0 ? entries.cwiseAbs().maxCoeff() : 1.0;
  // Six decades below the largest entry map to white.
  constexpr double kDecades = 6.0;

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(side + 2 * left)
    << "\" height=\"" << num(side + top + left) << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << num(left) << "\" y=\"24\" font-size=\"14\">" << escape(title)
    << "</text>\n";
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double v = std::abs(entries(i, j));
      if (v == 0.0 || max_abs == 0.0) continue;
      const double level =
          std::clamp(1.0 + std::log10(v / max_abs) / kDecades, 0.0, 1.0);  // 1 = largest
      if (level == 0.0) continue;
      const int shade = static_cast<int>(std::lround(255.0 * (1.0 - level)));
      const char* base = entries(i, j) >= 0.0 ? "255,%d,%d" : "%d,%d,255";
      char color[32];
      std::snprintf(color, sizeof color, base, shade, shade);
      o << "<rect x=\"" << num(left + cell * static_cast<double>(j)) << "\" y=\""
        << num(top + cell * static_cast<double>(i)) << "\" width=\"" << num(cell)
        << "\" height=\"" << num(cell) << "\" fill=\"rgb(" << color << ")\"/>\n";
    }
  }
  o << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(side)
    << "\" height=\"" << num(side) << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (std::size_t s : separators) {
    const double at = cell * static_cast<double>(s);
    o << "<line x1=\"" << num(left + at) << "\" x2=\"" << num(left + at) << "\" y1=\"" << num(top)
      << "\" y2=\"" << num(top + side) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    o << "<line x1=\"" << num(left) << "\" x2=\"" << num(left + side) << "\" y1=\""
      << num(top + at) << "\" y2=\"" << num(top + at) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace wqm::cli
