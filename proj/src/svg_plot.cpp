/*
 * Copyright 2026 The corrnet Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

     http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.

*/

#include "corrnet/svg_plot.hpp"

#include "corrnet/format.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

namespace corrnet {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 250.0;  // legend column
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string escape(const std::string& s)
{
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

// Round step of about `target` ticks over [lo, hi].
double nice_step(double span, int target)
{
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (m * mag >= raw) return m * mag;
    return 10.0 * mag;
}

struct Series {
    std::string key;
    std::vector<const ReportRow*> rows;
};

}  // namespace

std::string render_rate_plot(std::span<const ReportRow> rows, const std::string& title)
{
    if (rows.empty()) throw CsvError("nothing to plot: the table has no rows");

    // Series in order of first appearance.
    std::vector<Series> series;
    std::map<std::string, std::size_t> index;
    for (const auto& r : rows) {
        auto [it, inserted] = index.try_emplace(r.series_key(), series.size());
        if (inserted) series.push_back({r.series_key(), {}});
        series[it->second].rows.push_back(&r);
    }
    for (auto& s : series)
        std::stable_sort(s.rows.begin(), s.rows.end(), [](const auto* a, const auto* b) { return a->N < b->N; });

    double n_lo = rows.front().N, n_hi = rows.front().N, y_hi = 0.0;
    for (const auto& r : rows) {
        n_lo = std::min<double>(n_lo, r.N);
        n_hi = std::max<double>(n_hi, r.N);
        for (const auto& v : {r.mean_rate, r.asymptote, r.std_rate})
            if (v) y_hi = std::max(y_hi, *v);
    }
    if (n_hi == n_lo) {
        n_lo -= 1.0;
        n_hi += 1.0;
    }
    if (!(y_hi > 0.0)) y_hi = 1.0;
    const double y_step = nice_step(y_hi, 6);
    y_hi = std::ceil(y_hi / y_step) * y_step;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double n) { return kLeft + (n - n_lo) / (n_hi - n_lo) * plot_w; };
    auto py = [&](double y) { return kTop + plot_h - y / y_hi * plot_h; };
    auto f = [](double v) { return format_number(v); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f(kWidth) << "\" height=\"" << f(kHeight)
       << "\" viewBox=\"0 0 " << f(kWidth) << ' ' << f(kHeight) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << f(kLeft + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
       << escape(title) << "</text>\n";

    // Axes and ticks.
    os << "<g stroke=\"black\" fill=\"none\">\n";
    os << "<line x1=\"" << f(kLeft) << "\" y1=\"" << f(kTop + plot_h) << "\" x2=\"" << f(kLeft + plot_w)
       << "\" y2=\"" << f(kTop + plot_h) << "\"/>\n";
    os << "<line x1=\"" << f(kLeft) << "\" y1=\"" << f(kTop) << "\" x2=\"" << f(kLeft) << "\" y2=\""
       << f(kTop + plot_h) << "\"/>\n";
    os << "</g>\n";
    const double n_step = std::max(1.0, nice_step(n_hi - n_lo, 8));
    for (double n = std::ceil(n_lo / n_step) * n_step; n <= n_hi + 1e-9; n += n_step) {
        os << "<line x1=\"" << f(px(n)) << "\" y1=\"" << f(kTop + plot_h) << "\" x2=\"" << f(px(n)) << "\" y2=\""
           << f(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << f(px(n)) << "\" y=\"" << f(kTop + plot_h + 20) << "\" text-anchor=\"middle\">"
           << f(n) << "</text>\n";
    }
    for (double y = 0.0; y <= y_hi + 1e-9; y += y_step) {
        os << "<line x1=\"" << f(kLeft - 5) << "\" y1=\"" << f(py(y)) << "\" x2=\"" << f(kLeft + plot_w)
           << "\" y2=\"" << f(py(y)) << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << f(kLeft - 8) << "\" y=\"" << f(py(y) + 4) << "\" text-anchor=\"end\">" << f(y)
           << "</text>\n";
    }
    os << "<text x=\"" << f(kLeft + plot_w / 2) << "\" y=\"" << f(kHeight - 18)
       << "\" text-anchor=\"middle\">diversity branches N</text>\n";
    os << "<text x=\"18\" y=\"" << f(kTop + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << f(kTop + plot_h / 2) << ")\">rate (bits/symbol)</text>\n";

    auto polyline = [&](const Series& s, auto value, const char* color, const char* dash) {
        std::ostringstream pts;
        int count = 0;
        for (const auto* r : s.rows) {
            const auto v = value(*r);
            if (!v) continue;
            pts << (count++ ? " " : "") << f(px(r->N)) << ',' << f(py(*v));
        }
        if (count < 2) return;
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
        if (dash) os << " stroke-dasharray=\"" << dash << "\"";
        os << " points=\"" << pts.str() << "\"/>\n";
    };

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kPalette[k % kPalette.size()];
        polyline(s, [](const ReportRow& r) { return r.asymptote; }, color, nullptr);
        polyline(s, [](const ReportRow& r) { return r.mean_rate; }, color, "1,3");
        polyline(s, [](const ReportRow& r) { return r.std_rate; }, color, "6,4");
        for (const auto* r : s.rows) {
            if (!r->mean_rate) continue;
            os << "<circle cx=\"" << f(px(r->N)) << "\" cy=\"" << f(py(*r->mean_rate)) << "\" r=\"3.5\" fill=\""
               << color << "\"/>\n";
        }
        const double ly = kTop + 14.0 + 34.0 * static_cast<double>(k);
        const double lx = kLeft + plot_w + 16.0;
        os << "<circle cx=\"" << f(lx) << "\" cy=\"" << f(ly) << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
        os << "<text x=\"" << f(lx + 10) << "\" y=\"" << f(ly + 4) << "\" font-size=\"10\">" << escape(s.key)
           << "</text>\n";
        os << "<text x=\"" << f(lx + 10) << "\" y=\"" << f(ly + 17) << "\" font-size=\"9\" fill=\"#555555\">"
           << "solid: asymptote, dashed: std-dev</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace corrnet
