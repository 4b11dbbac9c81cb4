#include "kconn/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "kconn/errors.hpp"

namespace kconn {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string render_svg(const Instance& instance, const CommGraph& graph,
                       const RestorationPlan* plan) {
    instance.validate();
    if (instance.dim != 2) throw RenderUnsupported("render_svg: only 2D instances are supported");
    if (graph.num_vertices() != instance.n())
        throw std::invalid_argument("render_svg: instance/graph size mismatch");
    if (plan && plan->final_positions.size() != instance.positions.size())
        throw std::invalid_argument("render_svg: plan does not match the instance");

    double min_x = instance.positions[0].x, max_x = min_x;
    double min_y = instance.positions[0].y, max_y = min_y;
    auto grow = [&](const Vec3& p) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    };
    for (const Vec3& p : instance.positions) grow(p);
    if (plan)
        for (const Vec3& p : plan->final_positions) grow(p);

    const double margin = std::max(instance.h / 2.0, 0.25);
    const double w = (max_x - min_x) + 2 * margin;
    const double hgt = (max_y - min_y) + 2 * margin;
    const double stroke = std::max(w, hgt) / 200.0;
    const double r = std::max(w, hgt) / 80.0;

    // SVG y grows downward; flip so the scene reads like a plot.
    auto X = [&](double x) { return x - min_x + margin; };
    auto Y = [&](double y) { return (max_y - y) + margin; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(w) << " "
        << fmt(hgt) << "\">\n";
    out << "  <defs>\n"
        << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">\n"
        << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#9a9a9a\"/>\n"
        << "    </marker>\n"
        << "  </defs>\n";

    const std::vector<Vec3>& base =
        plan ? plan->final_positions : instance.positions;

    if (plan) {
        // Final topology; edges recomputed at the final positions.
        Instance moved = instance;
        moved.positions = plan->final_positions;
        const CommGraph gf = build_comm_graph(moved);
        for (const auto& [i, j] : gf.edges())
            out << "  <line x1=\"" << fmt(X(base[i].x)) << "\" y1=\"" << fmt(Y(base[i].y))
                << "\" x2=\"" << fmt(X(base[j].x)) << "\" y2=\"" << fmt(Y(base[j].y))
                << "\" stroke=\"#2f6da8\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
        // Displacement arrows, original -> final.
        for (int i = 0; i < instance.n(); ++i) {
            const Vec3& a = instance.positions[i];
            const Vec3& b = plan->final_positions[i];
            if (distance(a, b) <= 1e-12) continue;
            out << "  <line x1=\"" << fmt(X(a.x)) << "\" y1=\"" << fmt(Y(a.y)) << "\" x2=\""
                << fmt(X(b.x)) << "\" y2=\"" << fmt(Y(b.y))
                << "\" stroke=\"#9a9a9a\" stroke-width=\"" << fmt(stroke)
                << "\" stroke-dasharray=\"" << fmt(3 * stroke) << " " << fmt(2 * stroke)
                << "\" marker-end=\"url(#arrow)\"/>\n";
        }
        // Original positions as hollow circles.
        for (const Vec3& p : instance.positions)
            out << "  <circle cx=\"" << fmt(X(p.x)) << "\" cy=\"" << fmt(Y(p.y)) << "\" r=\""
                << fmt(r) << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\""
                << fmt(stroke) << "\"/>\n";
    } else {
        for (const auto& [i, j] : graph.edges())
            out << "  <line x1=\"" << fmt(X(base[i].x)) << "\" y1=\"" << fmt(Y(base[i].y))
                << "\" x2=\"" << fmt(X(base[j].x)) << "\" y2=\"" << fmt(Y(base[j].y))
                << "\" stroke=\"#2f6da8\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
    }

    for (int i = 0; i < instance.n(); ++i)
        out << "  <circle cx=\"" << fmt(X(base[i].x)) << "\" cy=\"" << fmt(Y(base[i].y))
            << "\" r=\"" << fmt(r) << "\" fill=\"#d9622b\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace kconn
