#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphgen/experiments.hpp"

namespace graphgen {

namespace {

// Two decimals keep the output byte-stable and are below a pixel anyway.
std::string f2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string g10s(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

const char* kDegColor = "#4878a8";
const char* kSpecColor = "#d08040";
const char* kEdgeColor = "#5a9a5a";

struct GroupKey {
  SampleMethod method;
  double fraction;
  bool operator<(const GroupKey& o) const {
    if (method != o.method) return method < o.method;
    return fraction < o.fraction;
  }
  bool operator==(const GroupKey& o) const {
    return method == o.method && fraction == o.fraction;
  }
};

// Gaussian kernel density on the unit interval, scaled to peak 1.
std::vector<double> unit_kde(const std::vector<double>& ps, int grid_points,
                             double bandwidth) {
  std::vector<double> dens(grid_points, 0.0);
  double peak = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double y = double(i) / double(grid_points - 1);
    double f = 0.0;
    for (double p : ps) {
      const double z = (y - p) / bandwidth;
      f += std::exp(-0.5 * z * z);
    }
    dens[i] = f;
    peak = std::max(peak, f);
  }
  if (peak > 0.0)
    for (double& d : dens) d /= peak;
  return dens;
}

std::string violin_path(double cx, double half_width, double y_top,
                        double y_bottom, const std::vector<double>& dens) {
  const int n = int(dens.size());
  auto y_at = [&](int i) {
    return y_bottom + (y_top - y_bottom) * double(i) / double(n - 1);
  };
  std::string d = "M " + f2(cx + half_width * dens[0]) + " " + f2(y_at(0));
  for (int i = 1; i < n; ++i)
    d += " L " + f2(cx + half_width * dens[i]) + " " + f2(y_at(i));
  for (int i = n - 1; i >= 0; --i)
    d += " L " + f2(cx - half_width * dens[i]) + " " + f2(y_at(i));
  return d + " Z";
}

std::string render_violin(const std::vector<RobustnessRow>& rows) {
  std::vector<GroupKey> groups;
  for (const auto& r : rows) {
    GroupKey k{r.method, r.fraction};
    if (std::find(groups.begin(), groups.end(), k) == groups.end())
      groups.push_back(k);
  }
  std::sort(groups.begin(), groups.end());

  const double width = 960, height = 420;
  const double left = 70, right = 930, top = 48, bottom = 350;
  const double slot = (right - left) / double(groups.size());
  auto y_of = [&](double p) { return bottom - p * (bottom - top); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + f2(width) +
       "\" height=\"" + f2(height) + "\" viewBox=\"0 0 " + f2(width) + " " +
       f2(height) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  s += "<text x=\"" + f2(width / 2) +
       "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"15\">p-value spread by sampling method and fraction</text>\n";

  for (double tick : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double y = y_of(tick);
    s += "<line x1=\"" + f2(left) + "\" y1=\"" + f2(y) + "\" x2=\"" + f2(right) +
         "\" y2=\"" + f2(y) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    s += "<text x=\"" + f2(left - 8) + "\" y=\"" + f2(y + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
         f2(tick) + "</text>\n";
  }
  const double y_thresh = y_of(0.1);
  s += "<line x1=\"" + f2(left) + "\" y1=\"" + f2(y_thresh) + "\" x2=\"" +
       f2(right) + "\" y2=\"" + f2(y_thresh) +
       "\" stroke=\"#c04040\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>\n";

  for (size_t gi = 0; gi < groups.size(); ++gi) {
    std::vector<double> deg_p, spec_p;
    for (const auto& r : rows) {
      if (!(GroupKey{r.method, r.fraction} == groups[gi])) continue;
      deg_p.push_back(std::clamp(r.deg_pvalue, 0.0, 1.0));
      spec_p.push_back(std::clamp(r.spec_pvalue, 0.0, 1.0));
    }
    const double x0 = left + slot * double(gi);
    const double half = 0.18 * slot;
    auto deg_d = unit_kde(deg_p, 51, 0.06);
    auto spec_d = unit_kde(spec_p, 51, 0.06);
    s += "<path d=\"" + violin_path(x0 + 0.3 * slot, half, top, bottom, deg_d) +
         "\" fill=\"" + kDegColor +
         "\" fill-opacity=\"0.85\" stroke=\"#333333\" stroke-width=\"0.5\"/>\n";
    s += "<path d=\"" + violin_path(x0 + 0.7 * slot, half, top, bottom, spec_d) +
         "\" fill=\"" + kSpecColor +
         "\" fill-opacity=\"0.85\" stroke=\"#333333\" stroke-width=\"0.5\"/>\n";
    s += "<text x=\"" + f2(x0 + slot / 2) + "\" y=\"" + f2(bottom + 18) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
         sample_method_name(groups[gi].method) + "</text>\n";
    s += "<text x=\"" + f2(x0 + slot / 2) + "\" y=\"" + f2(bottom + 34) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
         g10s(groups[gi].fraction) + "</text>\n";
  }

  s += "<rect x=\"" + f2(right - 190) +
       "\" y=\"34\" width=\"12\" height=\"12\" fill=\"" + kDegColor + "\"/>\n";
  s += "<text x=\"" + f2(right - 174) +
       "\" y=\"44\" font-family=\"sans-serif\" font-size=\"11\">degree fit</text>\n";
  s += "<rect x=\"" + f2(right - 100) +
       "\" y=\"34\" width=\"12\" height=\"12\" fill=\"" + kSpecColor + "\"/>\n";
  s += "<text x=\"" + f2(right - 84) +
       "\" y=\"44\" font-family=\"sans-serif\" font-size=\"11\">spectral fit</text>\n";
  s += "</svg>\n";
  return s;
}

std::string render_scatter(const std::vector<RobustnessRow>& rows) {
  const double size = 520;
  const double left = 70, right = 480, top = 48, bottom = 450;
  auto x_of = [&](double p) { return left + p * (right - left); };
  auto y_of = [&](double p) { return bottom - p * (bottom - top); };
  auto color_of = [](SampleMethod m) {
    switch (m) {
      case SampleMethod::forest_fire: return kDegColor;
      case SampleMethod::dfs: return kSpecColor;
      case SampleMethod::random_edge: return kEdgeColor;
    }
    return "#000000";
  };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + f2(size) +
       "\" height=\"" + f2(size) + "\" viewBox=\"0 0 " + f2(size) + " " +
       f2(size) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  s += "<text x=\"" + f2(size / 2) +
       "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"15\">degree-fit vs spectral-fit p-values</text>\n";

  for (double tick : {0.0, 0.5, 1.0}) {
    s += "<text x=\"" + f2(x_of(tick)) + "\" y=\"" + f2(bottom + 16) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
         f2(tick) + "</text>\n";
    s += "<text x=\"" + f2(left - 8) + "\" y=\"" + f2(y_of(tick) + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
         f2(tick) + "</text>\n";
  }
  s += "<rect x=\"" + f2(left) + "\" y=\"" + f2(top) + "\" width=\"" +
       f2(right - left) + "\" height=\"" + f2(bottom - top) +
       "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  s += "<line x1=\"" + f2(left) + "\" y1=\"" + f2(bottom) + "\" x2=\"" +
       f2(right) + "\" y2=\"" + f2(top) +
       "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  s += "<line x1=\"" + f2(x_of(0.1)) + "\" y1=\"" + f2(top) + "\" x2=\"" +
       f2(x_of(0.1)) + "\" y2=\"" + f2(bottom) +
       "\" stroke=\"#c04040\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>\n";
  s += "<line x1=\"" + f2(left) + "\" y1=\"" + f2(y_of(0.1)) + "\" x2=\"" +
       f2(right) + "\" y2=\"" + f2(y_of(0.1)) +
       "\" stroke=\"#c04040\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>\n";

  for (const auto& r : rows) {
    s += "<circle cx=\"" + f2(x_of(std::clamp(r.deg_pvalue, 0.0, 1.0))) +
         "\" cy=\"" + f2(y_of(std::clamp(r.spec_pvalue, 0.0, 1.0))) +
         "\" r=\"3\" fill=\"" + color_of(r.method) + "\" fill-opacity=\"0.7\"/>\n";
  }

  const char* names[] = {"ff", "dfs", "edge"};
  const char* colors[] = {kDegColor, kSpecColor, kEdgeColor};
  for (int i = 0; i < 3; ++i) {
    const double y = 40.0 + 16.0 * i;
    s += "<circle cx=\"" + f2(left + 12) + "\" cy=\"" + f2(y) +
         "\" r=\"4\" fill=\"" + colors[i] + "\"/>\n";
    s += "<text x=\"" + f2(left + 22) + "\" y=\"" + f2(y + 4) +
         "\" font-family=\"sans-serif\" font-size=\"11\">" + names[i] +
         "</text>\n";
  }
  s += "<text x=\"" + f2((left + right) / 2) + "\" y=\"" + f2(size - 10) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"12\">degree-fit p-value</text>\n";
  s += "<text x=\"18\" y=\"" + f2((top + bottom) / 2) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
       "transform=\"rotate(-90 18 " + f2((top + bottom) / 2) +
       ")\">spectral-fit p-value</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace

std::string render_svg(const std::vector<RobustnessRow>& rows, SvgKind kind) {
  if (rows.empty()) throw std::invalid_argument("render_svg: no rows");
  return kind == SvgKind::violin ? render_violin(rows) : render_scatter(rows);
}

void emit_svg(const std::vector<RobustnessRow>& rows, SvgKind kind,
              const std::string& path) {
  auto svg = render_svg(rows, kind);
  std::ofstream ofs(path, std::ios::binary);
  if (!ofs) throw std::runtime_error("cannot write " + path);
  ofs << svg;
}

}  // namespace graphgen
