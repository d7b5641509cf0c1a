#include <algorithm>
#include <map>
#include <sstream>

#include "hyperham/sweep.hpp"

namespace hyperham {

std::string threshold_svg(const std::vector<SummaryCell>& cells, double dcover, const std::string& title) {
    constexpr double width = 640, height = 420, left = 60, right = 20, top = 40, bottom = 50;
    const double pw = width - left - right, ph = height - top - bottom;
    auto sx = [&](double x) { return left + x * pw; };
    auto sy = [&](double y) { return top + (1 - y) * ph; };
    static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    std::map<unsigned, std::vector<std::pair<double, double>>> series;
    for (const auto& c : cells)
        if (c.fraction && c.mean_dplus_ratio) series[c.n].emplace_back(*c.mean_dplus_ratio, c.fraction->get_d());

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n";
    o << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double v = i / 4.0;
        o << "<text x=\"" << sx(v) << "\" y=\"" << height - bottom + 18 << "\" text-anchor=\"middle\" font-size=\"11\">"
          << v << "</text>\n";
        o << "<text x=\"" << left - 8 << "\" y=\"" << sy(v) + 4 << "\" text-anchor=\"end\" font-size=\"11\">" << v
          << "</text>\n";
    }
    o << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 10
      << "\" text-anchor=\"middle\" font-size=\"12\">mean min positive codegree / n</text>\n";
    o << "<text x=\"16\" y=\"" << top + ph / 2 << "\" transform=\"rotate(-90 16 " << top + ph / 2
      << ")\" text-anchor=\"middle\" font-size=\"12\">fraction with Hamilton cycle</text>\n";
    o << "<line x1=\"" << sx(dcover) << "\" y1=\"" << top << "\" x2=\"" << sx(dcover) << "\" y2=\"" << top + ph
      << "\" stroke=\"gray\" stroke-dasharray=\"5,4\"/>\n";

    std::size_t idx = 0;
    for (auto& [n, pts] : series) {
        std::sort(pts.begin(), pts.end());
        const char* colour = colours[idx++ % std::size(colours)];
        o << "<polyline fill=\"none\" stroke=\"" << colour << "\" points=\"";
        for (auto [x, y] : pts) o << sx(x) << ',' << sy(y) << ' ';
        o << "\"/>\n";
        for (auto [x, y] : pts)
            o << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\" fill=\"" << colour << "\"/>\n";
        o << "<text x=\"" << width - right - 60 << "\" y=\"" << top + 16 * idx << "\" font-size=\"11\" fill=\""
          << colour << "\">n = " << n << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace hyperham
