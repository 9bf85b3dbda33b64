#include "thermo/cli/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include <json.hpp>

namespace thermo::cli {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 11);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const SweepTable& t) {
    for (const auto& a : t.axis_names) out << a << ',';
    out << "deltaT";
    for (const auto& e : t.extra_names) out << ',' << e;
    out << ",formula,regime_warning,status\n";
    for (const auto& row : t.rows) {
        for (double a : row.axes) out << format_number(a) << ',';
        out << format_number(row.delta_T);
        for (double e : row.extras) out << ',' << format_number(e);
        out << ',' << row.formula << ',' << (row.regime_warning ? 1 : 0) << ',' << row.status << '\n';
    }
}

void write_json(std::ostream& out, const SweepTable& t) {
    using nlohmann::ordered_json;
    auto num = [](double v) -> ordered_json { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); };
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
        ordered_json r;
        for (std::size_t i = 0; i < t.axis_names.size(); ++i) r[t.axis_names[i]] = num(row.axes[i]);
        r["deltaT"] = num(row.delta_T);
        for (std::size_t i = 0; i < t.extra_names.size(); ++i) r[t.extra_names[i]] = num(row.extras[i]);
        r["formula"] = row.formula;
        r["regime_warning"] = row.regime_warning;
        r["status"] = row.status;
        rows.push_back(std::move(r));
    }
    ordered_json doc;
    doc["rows"] = std::move(rows);
    if (!t.minima.empty()) {
        ordered_json mins = ordered_json::array();
        for (const auto& m : t.minima)
            mins.push_back({{"r", m.r}, {"n_star", m.n_star}, {"deltaT", num(m.delta_T)}, {"single_minimum", m.single_minimum}});
        doc["minima"] = std::move(mins);
    }
    out << doc.dump(2) << '\n';
}

namespace {

struct Axis {
    double lo, hi;
    bool log;
    double map(double v, double a, double b) const {
        const double f = log ? (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo)) : (v - lo) / (hi - lo);
        return a + f * (b - a);
    }
    std::vector<double> ticks() const {
        std::vector<double> out;
        if (log) {
            for (double e = std::floor(std::log10(lo)); e <= std::ceil(std::log10(hi)); e += 1.0) {
                const double v = std::pow(10.0, e);
                if (v >= lo * (1 - 1e-12) && v <= hi * (1 + 1e-12)) out.push_back(v);
            }
        } else {
            for (int i = 0; i <= 4; ++i) out.push_back(lo + (hi - lo) * i / 4.0);
        }
        return out;
    }
};

Axis make_axis(double lo, double hi, bool log) {
    if (lo == hi) {
        lo = log ? lo / 2.0 : lo - 1.0;
        hi = log ? hi * 2.0 : hi + 1.0;
    }
    return {lo, hi, log};
}

std::string tick_label(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 3);
    return std::string(buf, res.ptr);
}

}  // namespace

void write_svg(std::ostream& out, const SweepTable& t, bool log_x) {
    constexpr double W = 640, H = 420, L = 70, R = 150, Tm = 20, B = 50;
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    std::map<double, std::vector<std::pair<double, double>>> curves;
    double xlo = INFINITY, xhi = -INFINITY, ylo = INFINITY, yhi = -INFINITY;
    for (const auto& row : t.rows) {
        if (row.axes.empty() || !std::isfinite(row.delta_T) || row.delta_T <= 0.0) continue;
        const double x = row.axes[0];
        if (log_x && x <= 0.0) continue;
        const double key = row.axes.size() > 1 ? row.axes[1] : 0.0;
        curves[key].emplace_back(x, row.delta_T);
        xlo = std::min(xlo, x);
        xhi = std::max(xhi, x);
        ylo = std::min(ylo, row.delta_T);
        yhi = std::max(yhi, row.delta_T);
    }

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (curves.empty()) {
        out << "<text x=\"" << W / 2 << "\" y=\"" << H / 2 << "\" text-anchor=\"middle\">no data</text>\n</svg>\n";
        return;
    }
    const Axis ax = make_axis(xlo, xhi, log_x);
    const Axis ay = make_axis(ylo, yhi, yhi / ylo > 100.0);
    const double x0 = L, x1 = W - R, y0 = H - B, y1 = Tm;

    out << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0 << "\" height=\"" << y0 - y1
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double v : ax.ticks()) {
        const double px = ax.map(v, x0, x1);
        out << "<line x1=\"" << px << "\" y1=\"" << y0 << "\" x2=\"" << px << "\" y2=\"" << y0 + 5
            << "\" stroke=\"black\"/><text x=\"" << px << "\" y=\"" << y0 + 18 << "\" text-anchor=\"middle\">"
            << tick_label(v) << "</text>\n";
    }
    for (double v : ay.ticks()) {
        const double py = ay.map(v, y0, y1);
        out << "<line x1=\"" << x0 - 5 << "\" y1=\"" << py << "\" x2=\"" << x0 << "\" y2=\"" << py
            << "\" stroke=\"black\"/><text x=\"" << x0 - 8 << "\" y=\"" << py + 4 << "\" text-anchor=\"end\">"
            << tick_label(v) << "</text>\n";
    }
    const std::string xlabel = t.axis_names.empty() ? "" : t.axis_names[0];
    out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">" << xlabel
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << (y0 + y1) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << (y0 + y1) / 2 << ")\">deltaT</text>\n";

    int i = 0;
    for (const auto& [key, pts] : curves) {
        const char* c = colors[i % 6];
        out << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : pts) out << ax.map(x, x0, x1) << ',' << ay.map(y, y0, y1) << ' ';
        out << "\"/>\n";
        if (t.axis_names.size() > 1) {
            const double ly = y1 + 16 + 16 * i;
            out << "<line x1=\"" << x1 + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << x1 + 32 << "\" y2=\"" << ly - 4
                << "\" stroke=\"" << c << "\" stroke-width=\"2\"/><text x=\"" << x1 + 38 << "\" y=\"" << ly << "\">"
                << t.axis_names[1] << " = " << tick_label(key) << "</text>\n";
        }
        ++i;
    }
    out << "</svg>\n";
}

}  // namespace thermo::cli
