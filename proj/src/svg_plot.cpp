#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "robineig/serialize.hpp"

namespace robineig {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

std::string fmt(double v, const char* spec = "%.6g") {
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Axis {
  double lo;
  double hi;
};

Axis padded(const std::vector<double>& v) {
  const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
  double lo = *mn;
  double hi = *mx;
  if (hi - lo <= 1e-300 * std::max(1.0, std::abs(hi))) {
    const double pad = std::max(1e-12, std::abs(hi) * 1e-6);
    lo -= pad;
    hi += pad;
  }
  return {lo, hi};
}

}  // namespace

std::string render_line_chart(const CsvSeries& series, const std::string& title) {
  const Axis xa = padded(series.x);
  const Axis ya = padded(series.y);
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xa.lo) / (xa.hi - xa.lo) * pw; };
  auto py = [&](double y) { return kTop + ph - (y - ya.lo) / (ya.hi - ya.lo) * ph; };

  std::ostringstream os;
  os << R"(<svg xmlns="http://www.w3.org/2000/svg" width="800" height="600" viewBox="0 0 800 600">)"
     << '\n';
  os << R"(<rect x="0" y="0" width="800" height="600" fill="white"/>)" << '\n';
  os << "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">"
     << escape(title) << "</text>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = xa.lo + (xa.hi - xa.lo) * i / kTicks;
    const double fy = ya.lo + (ya.hi - ya.lo) * i / kTicks;
    const double x = px(fx);
    const double y = py(fy);
    os << "<line x1=\"" << fmt(x) << "\" y1=\"" << kTop + ph << "\" x2=\"" << fmt(x) << "\" y2=\""
       << kTop + ph + 6 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fmt(x) << "\" y=\"" << kTop + ph + 22
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << fmt(fx, "%.4g")
       << "</text>\n";
    os << "<line x1=\"" << kLeft - 6 << "\" y1=\"" << fmt(y) << "\" x2=\"" << kLeft << "\" y2=\""
       << fmt(y) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << kLeft - 10 << "\" y=\"" << fmt(y + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << fmt(fy, "%.5g")
       << "</text>\n";
  }
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 20
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
     << escape(series.x_label) << "</text>\n";
  os << "<text x=\"20\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
     << kTop + ph / 2 << ")\" font-family=\"sans-serif\" font-size=\"14\">" << escape(series.y_label)
     << "</text>\n";

  os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < series.x.size(); ++i) {
    if (i) os << ' ';
    os << fmt(px(series.x[i])) << ',' << fmt(py(series.y[i]));
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace robineig
