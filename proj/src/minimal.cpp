#include "tropfan/minimal.hpp"

#include "tropfan/arrangement.hpp"

#include <algorithm>
#include <map>

namespace tropfan {

namespace {

std::vector<StackyCone> full_dimensional_minimal(int n, const std::vector<StackyCone>& top) {
    std::vector<Cone> cones;
    for (const auto& p : top) cones.push_back(p.cone);
    GermLabel label = [&](const Vec& p, const Vec& d) -> std::optional<Sublattice> {
        for (const auto& piece : top)
            if (germ_contains(piece.cone, p, d)) return piece.lattice;
        return std::nullopt;
    };
    auto domain = orthants(n);
    auto fine = chambers(domain, facet_hyperplanes(cones));
    Mat walls = essential_hyperplanes(fine, label);
    auto coarse = chambers(domain, walls);
    return merge_adjacent(n, label_chambers(coarse, label));
}

Vec combine(const Mat& basis, const Vec& coords, int n) {
    Vec x = zeros(n);
    for (std::size_t i = 0; i < basis.size(); ++i) x = add(x, scale(coords[i], basis[i]));
    return x;
}

Vec integer_coordinates(const Sublattice& l, const Vec& v) {
    auto c = coordinates(l, v);
    Vec out;
    for (const auto& x : *c) out.push_back(x.get_num());
    return out;
}

}  // namespace

Vec lattice_gap_witness(const Cone& cell, const Sublattice& la, const Sublattice& lb) {
    Vec base;
    for (const auto& b : lb.basis())
        if (!la.contains(b)) {
            base = b;
            break;
        }
    if (base.empty())
        for (const auto& b : la.basis())
            if (!lb.contains(b)) {
                base = b;
                break;
            }
    Sublattice both = intersect(la, lb);
    Vec y = interior_point(cell);
    y = scale(order_modulo(both, y), y);
    Int t = 0;
    for (const auto& h : cell.facets()) {
        Int hb = dot(h, base), hy = dot(h, y);
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), Int(-hb).get_mpz_t(), hy.get_mpz_t());
        t = std::max(t, Int(q + 1));
    }
    return add(base, scale(t, y));
}

bool witness_less(const Vec& a, const Vec& b) {
    Int na = l1_norm(a), nb = l1_norm(b);
    if (na != nb) return na < nb;
    return a < b;
}

std::vector<StackyCone> merge_adjacent(int n, std::vector<StackyCone> pieces) {
    std::sort(pieces.begin(), pieces.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < pieces.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < pieces.size() && !changed; ++j) {
                const auto& a = pieces[i];
                const auto& b = pieces[j];
                if (a.lattice != b.lattice) continue;
                if (intersect(a.cone, b.cone).dim() != n - 1) continue;
                Mat rays = a.cone.rays();
                rays.insert(rays.end(), b.cone.rays().begin(), b.cone.rays().end());
                Cone hull;
                try {
                    hull = Cone::from_rays(n, rays);
                } catch (const PointednessError&) {
                    continue;
                }
                if (uncovered_point(hull, {a.cone, b.cone})) continue;
                StackyCone merged{hull, a.lattice};
                pieces.erase(pieces.begin() + j);
                pieces.erase(pieces.begin() + i);
                pieces.push_back(merged);
                std::sort(pieces.begin(), pieces.end());
                changed = true;
            }
        }
    }
    return pieces;
}

MinimalFan minimal_from_pieces(int n, const std::vector<StackyCone>& pieces) {
    MinimalFan out;
    out.ambient = n;
    if (pieces.empty()) return out;

    int top_dim = 0;
    for (const auto& p : pieces) top_dim = std::max(top_dim, p.cone.dim());
    if (top_dim == 0) {
        out.pieces.push_back({Cone::zero(n), Sublattice::zero(n)});
        return out;
    }

    std::vector<StackyCone> top;
    for (const auto& p : pieces)
        if (p.cone.dim() == n) top.push_back(p);
    if (!top.empty()) out.pieces = full_dimensional_minimal(n, top);

    std::map<Sublattice, std::vector<StackyCone>> strata;
    for (const auto& p : pieces) {
        const int k = p.cone.dim();
        if (k == 0 || k == n) continue;
        std::vector<Cone> higher;
        for (const auto& q : pieces)
            if (q.cone.dim() > k) higher.push_back(q.cone);
        if (!uncovered_point(p.cone, higher)) continue;
        strata[span_lattice(n, p.cone.rays())].push_back(p);
    }
    for (const auto& [span, members] : strata) {
        const int k = span.rank();
        const Mat& basis = span.basis();
        std::vector<StackyCone> local;
        for (const auto& p : members) {
            Mat rays, gens;
            for (const auto& r : p.cone.rays()) rays.push_back(integer_coordinates(span, r));
            for (const auto& g : p.lattice.basis()) gens.push_back(integer_coordinates(span, g));
            local.push_back({Cone::from_rays(k, rays), Sublattice(k, gens)});
        }
        for (const auto& q : full_dimensional_minimal(k, local)) {
            Mat rays, gens;
            for (const auto& r : q.cone.rays()) rays.push_back(combine(basis, r, n));
            for (const auto& g : q.lattice.basis()) gens.push_back(combine(basis, g, n));
            out.pieces.push_back({Cone::from_rays(n, rays), Sublattice(n, gens)});
        }
    }
    std::sort(out.pieces.begin(), out.pieces.end());
    return out;
}

MinimalFan minimal_fan(const StackyFan& fan) { return minimal_from_pieces(fan.ambient(), fan.cones()); }

bool birationally_equivalent(const StackyFan& a, const StackyFan& b, Vec* witness) {
    if (a.ambient() != b.ambient()) throw DimensionError("fans live in different ambient ranks");
    std::vector<Vec> found;

    auto support_gap = [&](const StackyFan& x, const StackyFan& y) {
        auto other = support_cones(y);
        for (const auto& c : x.maximal_cones())
            if (auto w = uncovered_point(c.cone, other)) found.push_back(scale(order_modulo(c.lattice, *w), *w));
    };
    support_gap(a, b);
    support_gap(b, a);

    for (const auto& x : a.cones())
        for (const auto& y : b.cones()) {
            Cone cell = intersect(x.cone, y.cone);
            if (cell.dim() == 0) continue;
            Sublattice la = restrict_to_span(x.lattice, cell.rays());
            Sublattice lb = restrict_to_span(y.lattice, cell.rays());
            if (la != lb) found.push_back(lattice_gap_witness(cell, la, lb));
        }
    if (found.empty()) return true;
    if (witness) *witness = *std::min_element(found.begin(), found.end(), witness_less);
    return false;
}

SublatticeColoring to_coloring(const StackyFan& fan) {
    if (!is_complete(fan)) throw CompletenessRequiredError("fan is not complete");
    std::map<Sublattice, std::vector<Cone>> groups;
    for (const auto& c : fan.maximal_cones()) groups[c.lattice].push_back(c.cone);
    SublatticeColoring out;
    out.ambient = fan.ambient();
    for (auto& [l, cs] : groups) out.colors.push_back({l, cs});
    return out;
}

SublatticeColoring coloring_of(const MinimalFan& m) {
    std::map<Sublattice, std::vector<Cone>> groups;
    for (const auto& p : m.pieces) groups[p.lattice].push_back(p.cone);
    SublatticeColoring out;
    out.ambient = m.ambient;
    for (auto& [l, cs] : groups) out.colors.push_back({l, cs});
    return out;
}

MinimalFan from_coloring(const SublatticeColoring& c) {
    const int n = c.ambient;
    std::vector<StackyCone> pieces;
    std::vector<int> color_of;
    for (std::size_t k = 0; k < c.colors.size(); ++k) {
        const auto& cls = c.colors[k];
        if (cls.lattice.ambient() != n) throw ColoringInvalidError("color lattice lives in the wrong ambient rank");
        for (const auto& cone : cls.cones) {
            if (cone.ambient() != n) throw ColoringInvalidError("colored cone lives in the wrong ambient rank");
            if (cone.dim() != cls.lattice.rank())
                throw ColoringInvalidError(to_string(cone) + " has dimension different from the rank of its color");
            for (const auto& b : cls.lattice.basis())
                for (const auto& e : cone.equations())
                    if (dot(e, b) != 0) throw ColoringInvalidError("color lattice leaves the span of " + to_string(cone));
            pieces.push_back({cone, cls.lattice});
            color_of.push_back(static_cast<int>(k));
        }
    }
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            if (color_of[i] == color_of[j]) continue;
            const auto& a = pieces[i].cone;
            const auto& b = pieces[j].cone;
            if (a.dim() != b.dim()) continue;
            if (intersect(a, b).dim() == a.dim())
                throw ColoringInvalidError("regions of different colors overlap in " + to_string(intersect(a, b)));
        }
    return minimal_from_pieces(n, pieces);
}

bool minimal_set_member(const Vec& v, const MinimalFan& m) {
    return std::any_of(m.pieces.begin(), m.pieces.end(),
                       [&](const StackyCone& p) { return contains(p.cone, v) && p.lattice.contains(v); });
}

bool coloring_is_complete(const MinimalFan& m) {
    std::vector<Cone> top;
    for (const auto& p : m.pieces)
        if (p.cone.dim() == m.ambient) top.push_back(p.cone);
    if (m.ambient == 0) return !m.pieces.empty();
    for (const auto& o : orthants(m.ambient))
        if (uncovered_point(o, top)) return false;
    return true;
}

}  // namespace tropfan
