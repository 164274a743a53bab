#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "fpbk/front.hpp"
#include "fpbk/grid.hpp"

namespace fpbk {

// Text picture of a grid, top row first. X marks where a vertical starts,
// O where it ends, * a point component. Verticals are drawn over horizontals.
inline std::string grid_ascii(const GridDiagram& g) {
    g.validate();
    const int w = 2 * g.size - 1;
    std::vector<std::string> pic(g.size, std::string(w, ' '));
    for (int r = 0; r < g.size; ++r) {
        const auto [a, b] = std::minmax(g.hor[r][0], g.hor[r][1]);
        for (int x = 2 * a; x <= 2 * b; ++x) pic[r][x] = '-';
    }
    for (int c = 0; c < g.size; ++c) {
        const auto [a, b] = std::minmax(g.vert[c][0], g.vert[c][1]);
        for (int r = a; r <= b; ++r) pic[r][2 * c] = '|';
    }
    for (int c = 0; c < g.size; ++c) {
        if (g.is_point(c)) {
            pic[g.vert[c][0]][2 * c] = '*';
            continue;
        }
        pic[g.vert[c][0]][2 * c] = 'X';
        pic[g.vert[c][1]][2 * c] = 'O';
    }
    std::string out;
    for (int r = g.size - 1; r >= 0; --r) {
        std::string line = pic[r];
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + '\n';
    }
    return out;
}

inline std::string grid_svg(const GridDiagram& g, int cell = 24) {
    g.validate();
    const int side = g.size * cell;
    auto cx = [&](int c) { return c * cell + cell / 2; };
    auto cy = [&](int r) { return side - (r * cell + cell / 2); };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side << "\" viewBox=\"0 0 "
      << side << ' ' << side << "\">\n";
    s << "<rect width=\"" << side << "\" height=\"" << side << "\" fill=\"white\" stroke=\"#ccc\"/>\n";
    for (int r = 0; r < g.size; ++r)
        s << "<line x1=\"" << cx(g.hor[r][0]) << "\" y1=\"" << cy(r) << "\" x2=\"" << cx(g.hor[r][1]) << "\" y2=\""
          << cy(r) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (int c = 0; c < g.size; ++c) {
        if (g.is_point(c)) continue;
        const std::string seg = "x1=\"" + std::to_string(cx(c)) + "\" y1=\"" + std::to_string(cy(g.vert[c][0])) +
                                "\" x2=\"" + std::to_string(cx(c)) + "\" y2=\"" + std::to_string(cy(g.vert[c][1])) +
                                "\"";
        s << "<line " << seg << " stroke=\"white\" stroke-width=\"8\"/>\n";
        s << "<line " << seg << " stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (int c = 0; c < g.size; ++c) {
        const int x = cx(c);
        if (g.is_point(c)) {
            s << "<circle cx=\"" << x << "\" cy=\"" << cy(g.vert[c][0]) << "\" r=\"4\" fill=\"black\"/>\n";
            continue;
        }
        const int xy = cy(g.vert[c][0]), oy = cy(g.vert[c][1]);
        const int d = cell / 4;
        s << "<path d=\"M" << x - d << ' ' << xy - d << " L" << x + d << ' ' << xy + d << " M" << x - d << ' '
          << xy + d << " L" << x + d << ' ' << xy - d << "\" stroke=\"#b00\" stroke-width=\"2\"/>\n";
        s << "<circle cx=\"" << x << "\" cy=\"" << oy << "\" r=\"" << d << "\" fill=\"white\" stroke=\"#00b\" "
          << "stroke-width=\"2\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

inline std::string front_svg(const FrontData& f, int scale = 12) {
    int xmin = 0, xmax = 0, zmin = 0, zmax = 0;
    for (const auto& pl : f.components)
        for (const auto& p : pl) {
            xmin = std::min(xmin, p.x());
            xmax = std::max(xmax, p.x());
            zmin = std::min(zmin, p.z());
            zmax = std::max(zmax, p.z());
        }
    const int pad = 2;
    const int width = (xmax - xmin + 2 * pad) * scale, height = (zmax - zmin + 2 * pad) * scale;
    auto X = [&](const FrontPoint& p) { return (p.x() - xmin + pad) * scale; };
    auto Z = [&](const FrontPoint& p) { return (zmax - p.z() + pad) * scale; };
    static const char* colors[] = {"#000", "#b00", "#06a", "#080", "#a60", "#808"};
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    s << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    for (std::size_t c = 0; c < f.components.size(); ++c) {
        s << "<polygon fill=\"none\" stroke=\"" << colors[c % 6] << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < f.components[c].size(); ++i) {
            if (i) s << ' ';
            s << X(f.components[c][i]) << ',' << Z(f.components[c][i]);
        }
        s << "\"/>\n";
    }
    for (const auto& x : f.crossings)
        s << "<circle cx=\"" << X(x.at) << "\" cy=\"" << Z(x.at) << "\" r=\"3\" fill=\"none\" stroke=\"#888\"/>\n";
    for (const auto& c : f.cusps)
        s << "<circle cx=\"" << X(c.at) << "\" cy=\"" << Z(c.at) << "\" r=\"2.5\" fill=\"" << (c.right ? "#b00" : "#06a")
          << "\"/>\n";
    s << "</svg>\n";
    return s.str();
}

}  // namespace fpbk
