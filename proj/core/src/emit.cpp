#include "cutproject/emit.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cutproject {

namespace {

// shortest round-trip decimal form, locale independent
std::string num(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fixed(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

} // namespace

std::string points_to_csv(const WeightedPointSet& ps) {
    const int dm = ps.scheme().embedding_dim();
    const int d = ps.scheme().physical_dim();
    const int m = ps.scheme().internal_dim();
    std::string out;
    for (int i = 0; i < dm; ++i)
        out += "z" + std::to_string(i) + ",";
    for (int i = 0; i < d; ++i)
        out += "x" + std::to_string(i) + ",";
    for (int i = 0; i < m; ++i)
        out += "y" + std::to_string(i) + ",";
    out += "y_cyc,re_weight,im_weight\n";
    for (const auto& [p, w] : ps.points()) {
        for (int i = 0; i < dm; ++i)
            out += std::to_string(p.z[i]) + ",";
        for (int i = 0; i < d; ++i)
            out += num(p.x[i]) + ",";
        for (int i = 0; i < m; ++i)
            out += num(p.y_eucl[i]) + ",";
        out += std::to_string(p.y_cyc) + "," + num(w.real()) + "," + num(w.imag()) + "\n";
    }
    return out;
}

std::string measure_to_csv(const PurePointMeasure& m) {
    std::string out;
    const int dim = m.entries.empty() ? 1 : static_cast<int>(m.entries.front().location.size());
    for (int i = 0; i < dim; ++i)
        out += "location" + std::to_string(i) + ",";
    out += "re_amplitude,im_amplitude\n";
    for (const auto& e : m.entries) {
        for (int i = 0; i < dim; ++i)
            out += num(e.location[i]) + ",";
        out += num(e.amplitude.real()) + "," + num(e.amplitude.imag()) + "\n";
    }
    return out;
}

std::string peaks_to_csv(const std::vector<BraggPeak>& peaks, int physical_dim) {
    std::string out;
    for (int i = 0; i < physical_dim; ++i)
        out += "chi" + std::to_string(i) + ",";
    out += "re_amplitude,im_amplitude,intensity\n";
    for (const auto& p : peaks) {
        for (int i = 0; i < physical_dim; ++i)
            out += num(p.chi[i]) + ",";
        out += num(p.amplitude.real()) + "," + num(p.amplitude.imag()) + "," +
               num(p.intensity) + "\n";
    }
    return out;
}

std::string comb_to_svg(const PurePointMeasure& comb, const std::string& title) {
    if (!comb.entries.empty() && comb.entries.front().location.size() != 1)
        throw UnsupportedKindError("stem plot supports one-dimensional combs");

    const double width = 800.0, height = 400.0, margin = 60.0;
    double xmin = -1.0, xmax = 1.0, ymax = 1.0;
    if (!comb.entries.empty()) {
        xmin = comb.entries.front().location[0];
        xmax = comb.entries.back().location[0];
        if (xmax - xmin < 1e-12) {
            xmin -= 1.0;
            xmax += 1.0;
        }
        ymax = 0.0;
        for (const auto& e : comb.entries)
            ymax = std::max(ymax, std::abs(e.amplitude.real()));
        if (ymax <= 0.0)
            ymax = 1.0;
    }
    const double x0 = margin, x1 = width - margin;
    const double y0 = height - margin, y1 = margin;
    auto sx = [&](double x) { return x0 + (x - xmin) / (xmax - xmin) * (x1 - x0); };
    auto sy = [&](double y) { return y0 - y / ymax * (y0 - y1); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << int(width)
        << "\" height=\"" << int(height) << "\" viewBox=\"0 0 " << int(width) << " "
        << int(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
        svg << "<text x=\"" << fixed(width / 2, 1)
            << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title
            << "</text>\n";
    // axes
    svg << "<line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x1)
        << "\" y2=\"" << fixed(y0) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x0)
        << "\" y2=\"" << fixed(y1) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fixed(x0) << "\" y=\"" << fixed(y0 + 20)
        << "\" text-anchor=\"middle\" font-size=\"12\">" << fixed(xmin) << "</text>\n";
    svg << "<text x=\"" << fixed(x1) << "\" y=\"" << fixed(y0 + 20)
        << "\" text-anchor=\"middle\" font-size=\"12\">" << fixed(xmax) << "</text>\n";
    svg << "<text x=\"" << fixed(x0 - 8) << "\" y=\"" << fixed(y1)
        << "\" text-anchor=\"end\" font-size=\"12\">" << fixed(ymax) << "</text>\n";
    svg << "<text x=\"" << fixed(x0 - 8) << "\" y=\"" << fixed(y0)
        << "\" text-anchor=\"end\" font-size=\"12\">0</text>\n";
    svg << "<text x=\"" << fixed((x0 + x1) / 2) << "\" y=\"" << fixed(height - 12)
        << "\" text-anchor=\"middle\" font-size=\"13\">frequency</text>\n";
    svg << "<text x=\"16\" y=\"" << fixed((y0 + y1) / 2)
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
        << fixed((y0 + y1) / 2) << ")\">intensity</text>\n";
    // stems
    for (const auto& e : comb.entries) {
        const double x = sx(e.location[0]);
        svg << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x)
            << "\" y2=\"" << fixed(sy(std::abs(e.amplitude.real())))
            << "\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open output file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw IoError("failed writing output file: " + path);
}

} // namespace cutproject
