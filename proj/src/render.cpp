#include "tropfan/render.hpp"

#include "tropfan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace tropfan {

namespace {

struct Pt {
    double x;
    double y;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

/** Point where the ray through u leaves the square [-r, r]^2. */
Pt exit_point(const Vec& u, long r) {
    const double x = u[0].get_d(), y = u[1].get_d();
    const double t = static_cast<double>(r) / std::max(std::abs(x), std::abs(y));
    return {x * t, y * t};
}

bool in_group(const Sublattice& l, const Vec& v) {
    if (l.rank() == 0) return is_zero(v);
    return l.contains(v);
}

}  // namespace

std::string palette_color(std::size_t i) {
    static const char* colors[] = {"#1f4fa8", "#d9531e", "#2e8b57", "#8e44ad", "#b8860b", "#c0392b", "#16a085", "#5d6d7e"};
    return colors[i % (sizeof colors / sizeof colors[0])];
}

std::string render_svg(const std::vector<StackyCone>& input, int ambient, const RenderOptions& opt) {
    if (ambient != 2) throw DimensionError("rendering needs ambient rank 2");
    std::vector<StackyCone> pieces = input;
    std::sort(pieces.begin(), pieces.end(), [](const StackyCone& a, const StackyCone& b) {
        if (a.cone.dim() != b.cone.dim()) return a.cone.dim() > b.cone.dim();
        return a < b;
    });

    std::vector<Sublattice> lattices;
    for (const auto& p : pieces) lattices.push_back(p.lattice);
    std::sort(lattices.begin(), lattices.end(), [](const Sublattice& a, const Sublattice& b) {
        if (a.rank() != b.rank()) return a.rank() > b.rank();
        Int ca = covolume(a), cb = covolume(b);
        if (ca != cb) return ca < cb;
        return a < b;
    });
    lattices.erase(std::unique(lattices.begin(), lattices.end()), lattices.end());
    auto color_of = [&](const Sublattice& l) {
        return palette_color(std::find(lattices.begin(), lattices.end(), l) - lattices.begin());
    };

    const long r = opt.radius;
    const double u = opt.unit, margin = 20;
    const double half = r * u + margin;
    auto sx = [&](double x) { return num(half + x * u); };
    auto sy = [&](double y) { return num(half - y * u); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(2 * half) << "\" height=\"" << num(2 * half)
        << "\" viewBox=\"0 0 " << num(2 * half) << " " << num(2 * half) << "\">\n";
    out << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
           "orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#333333\"/></marker></defs>\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << num(2 * half) << "\" height=\"" << num(2 * half) << "\" fill=\"#ffffff\"/>\n";

    for (const auto& p : pieces) {
        const auto& rays = p.cone.rays();
        if (p.cone.dim() == 2) {
            const Vec& a = rays[0];
            std::vector<std::pair<double, Pt>> boundary;
            auto angle_from_a = [&](double x, double y) {
                const double cross = a[0].get_d() * y - a[1].get_d() * x;
                const double dotp = a[0].get_d() * x + a[1].get_d() * y;
                return std::atan2(cross, dotp);
            };
            for (const auto& ray : rays) {
                Pt e = exit_point(ray, r);
                boundary.push_back({angle_from_a(e.x, e.y), e});
            }
            for (long cx : {-r, r})
                for (long cy : {-r, r})
                    if (contains(p.cone, Vec{Int(cx), Int(cy)}))
                        boundary.push_back({angle_from_a(static_cast<double>(cx), static_cast<double>(cy)), {static_cast<double>(cx), static_cast<double>(cy)}});
            const bool ccw = angle_from_a(exit_point(rays[1], r).x, exit_point(rays[1], r).y) >= 0;
            std::sort(boundary.begin(), boundary.end(), [&](const auto& x, const auto& y) {
                return ccw ? x.first < y.first : x.first > y.first;
            });
            out << "  <polygon points=\"" << sx(0) << "," << sy(0);
            for (const auto& [ang, pt] : boundary) out << " " << sx(pt.x) << "," << sy(pt.y);
            out << "\" fill=\"" << color_of(p.lattice) << "\" fill-opacity=\"0.18\" stroke=\"none\"/>\n";
        } else if (p.cone.dim() == 1) {
            Pt e = exit_point(rays[0], r);
            out << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(e.x) << "\" y2=\"" << sy(e.y)
                << "\" stroke=\"" << color_of(p.lattice) << "\" stroke-opacity=\"0.35\" stroke-width=\"8\"/>\n";
        }
    }

    std::map<Vec, bool> drawn;
    for (const auto& p : pieces)
        for (const auto& ray : p.cone.rays()) {
            if (drawn[ray]) continue;
            drawn[ray] = true;
            Pt e = exit_point(ray, r);
            out << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(e.x) << "\" y2=\"" << sy(e.y)
                << "\" stroke=\"#333333\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
        }

    for (long y = r; y >= -r; --y)
        for (long x = -r; x <= r; ++x) {
            Vec v{Int(x), Int(y)};
            const StackyCone* owner = nullptr;
            for (const auto& p : pieces)
                if (contains(p.cone, v) && in_group(p.lattice, v)) {
                    owner = &p;
                    break;
                }
            if (owner)
                out << "  <circle cx=\"" << sx(static_cast<double>(x)) << "\" cy=\"" << sy(static_cast<double>(y)) << "\" r=\"3.5\" fill=\""
                    << color_of(owner->lattice) << "\"/>\n";
            else
                out << "  <circle cx=\"" << sx(static_cast<double>(x)) << "\" cy=\"" << sy(static_cast<double>(y))
                    << "\" r=\"1.5\" fill=\"#bbbbbb\"/>\n";
        }
    out << "</svg>\n";
    return out.str();
}

std::string render_svg(const StackyFan& fan, const RenderOptions& opt) {
    return render_svg(fan.maximal_cones(), fan.ambient(), opt);
}

std::string render_svg(const MinimalFan& fan, const RenderOptions& opt) { return render_svg(fan.pieces, fan.ambient, opt); }

}  // namespace tropfan
