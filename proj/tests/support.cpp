#include "support.hpp"

#include "tropfan/linalg.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace testsupport {

long uniform(Rng& rng, long lo, long hi) {
    const auto span = static_cast<unsigned long>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
}

Vec random_vec(Rng& rng, int n, long lo, long hi) {
    Vec v(n);
    for (auto& x : v) x = uniform(rng, lo, hi);
    return v;
}

void for_each_point(int n, long r, const std::function<void(const Vec&)>& f) {
    Vec v(n, Int(-r));
    if (n == 0) {
        f(v);
        return;
    }
    while (true) {
        f(v);
        int i = 0;
        while (i < n && v[i] == r) v[i++] = -r;
        if (i == n) return;
        v[i] += 1;
    }
}

bool oracle_member(const Mat& gens, const Vec& v) {
    auto c = solve_in_span(gens, v);
    if (!c) return false;
    for (const auto& x : *c)
        if (x.get_den() != 1) return false;
    return true;
}

StackyCone sc(int n, const Mat& rays, const Mat& lattice) { return {Cone::from_rays(n, rays), Sublattice(n, lattice)}; }

StackyCone sc_full(int n, const Mat& rays) { return with_full_lattice(Cone::from_rays(n, rays)); }

StackyFan fan_of(int n, const std::vector<StackyCone>& maximal) { return StackyFan(n, maximal); }

StackyFan fig_fan() {
    return fan_of(2, {sc_full(2, {{1, 0}, {0, 1}}), sc_full(2, {{1, 0}, {-2, -1}}),
                      sc(2, {{0, 1}, {-2, -1}}, {{2, 0}, {0, 1}})});
}

StackyFan fig_fan_bad_red() {
    return fan_of(2, {sc_full(2, {{1, 0}, {0, 1}}), sc_full(2, {{1, 0}, {-2, -1}}),
                      sc(2, {{0, 1}, {-2, -1}}, {{1, 0}, {0, 2}})});
}

StackyFan p2_fan() {
    return fan_of(2, {sc_full(2, {{1, 0}, {0, 1}}), sc_full(2, {{0, 1}, {-1, -1}}), sc_full(2, {{-1, -1}, {1, 0}})});
}

StackyFan quadrants_fan() {
    return fan_of(2, {sc_full(2, {{1, 0}, {0, 1}}), sc_full(2, {{0, 1}, {-1, 0}}), sc_full(2, {{-1, 0}, {0, -1}}),
                      sc_full(2, {{0, -1}, {1, 0}})});
}

StackyFan quadrant_fan() { return fan_of(2, {sc_full(2, {{1, 0}, {0, 1}})}); }

StackyFan hirzebruch(long a) {
    return fan_of(2, {sc_full(2, {{1, 0}, {0, 1}}), sc_full(2, {{0, 1}, {-1, a}}), sc_full(2, {{-1, a}, {0, -1}}),
                      sc_full(2, {{0, -1}, {1, 0}})});
}

StackyFan split_quadrant_fan() { return fan_of(2, {sc_full(2, {{1, 0}, {1, 1}}), sc_full(2, {{1, 1}, {0, 1}})}); }

namespace {

Int cone_index(const RandomFan& f, const std::vector<int>& idx) {
    Mat gens;
    for (int i : idx) gens.push_back(scale(Int(f.multiplicity[i]), f.rays[i]));
    Sublattice l(f.rank, gens);
    return *index_in(l, span_lattice(f.rank, gens));
}

}  // namespace

RandomFan random_fan(Rng& rng, int rank, bool complete) {
    RandomFan f;
    f.rank = rank;
    if (rank == 1) {
        f.rays = {{1}, {-1}};
        f.maximal = {{0}, {1}};
    } else if (rank == 2) {
        if (uniform(rng, 0, 1) == 0)
            f.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        else
            f.rays = {{1, 0}, {0, 1}, {-1, -1}};
        const long inserts = uniform(rng, 0, 3);
        for (long s = 0; s < inserts; ++s) {
            const std::size_t i = uniform(rng, 0, static_cast<long>(f.rays.size()) - 1);
            const std::size_t j = (i + 1) % f.rays.size();
            Vec v = primitive(add(scale(Int(uniform(rng, 1, 2)), f.rays[i]), scale(Int(uniform(rng, 1, 2)), f.rays[j])));
            f.rays.insert(f.rays.begin() + i + 1, v);
        }
        for (std::size_t i = 0; i < f.rays.size(); ++i)
            f.maximal.push_back({static_cast<int>(i), static_cast<int>((i + 1) % f.rays.size())});
    } else {
        if (uniform(rng, 0, 1) == 0) {
            for (int i = 0; i < 3; ++i) {
                f.rays.push_back(unit(3, i));
                f.rays.push_back(neg(unit(3, i)));
            }
            for (int a = 0; a < 2; ++a)
                for (int b = 2; b < 4; ++b)
                    for (int c = 4; c < 6; ++c) f.maximal.push_back({a, b, c});
        } else {
            f.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
            f.maximal = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
        }
        const long inserts = uniform(rng, 0, 2);
        for (long s = 0; s < inserts; ++s) {
            const std::size_t m = uniform(rng, 0, static_cast<long>(f.maximal.size()) - 1);
            auto cell = f.maximal[m];
            Vec v = zeros(3);
            for (int i : cell) v = add(v, scale(Int(uniform(rng, 1, 2)), f.rays[i]));
            f.rays.push_back(primitive(v));
            const int nv = static_cast<int>(f.rays.size()) - 1;
            f.maximal.erase(f.maximal.begin() + m);
            for (int k = 0; k < 3; ++k) {
                auto c = cell;
                c[k] = nv;
                f.maximal.push_back(c);
            }
        }
    }
    for (int attempt = 0;; ++attempt) {
        f.multiplicity.assign(f.rays.size(), 1);
        if (attempt < 20)
            for (auto& k : f.multiplicity) k = uniform(rng, 0, 2) == 0 ? 2 : 1;
        bool ok = true;
        for (const auto& c : f.maximal)
            if (cone_index(f, c) > 4) ok = false;
        if (ok || attempt >= 20) break;
    }
    if (!complete && f.maximal.size() > 1) {
        const long drop = uniform(rng, 1, static_cast<long>(f.maximal.size()) - 1);
        for (long d = 0; d < drop; ++d) f.maximal.erase(f.maximal.begin() + uniform(rng, 0, static_cast<long>(f.maximal.size()) - 1));
    }
    return f;
}

StackyFan build_fan(const RandomFan& f) {
    std::vector<StackyCone> cones;
    for (const auto& c : f.maximal) {
        Mat rays, gens;
        for (int i : c) {
            rays.push_back(f.rays[i]);
            gens.push_back(scale(Int(f.multiplicity[i]), f.rays[i]));
        }
        cones.push_back({Cone::from_rays(f.rank, rays), Sublattice(f.rank, gens)});
    }
    return StackyFan(f.rank, cones);
}

RandomFan root_along(const RandomFan& f, int ray) {
    RandomFan g = f;
    g.multiplicity[ray] *= 2;
    return g;
}

StackyFan stellar(Rng& rng, const StackyFan& f) {
    auto maxi = f.maximal_cones();
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < maxi.size(); ++i)
        if (maxi[i].cone.dim() >= 2) candidates.push_back(i);
    if (candidates.empty()) return f;
    const std::size_t pick = candidates[uniform(rng, 0, static_cast<long>(candidates.size()) - 1)];
    const StackyCone& s = maxi[pick];
    Vec v = zeros(f.ambient());
    for (const auto& r : s.cone.rays()) v = add(v, scale(Int(uniform(rng, 1, 3)), r));
    v = primitive(v);
    std::vector<StackyCone> out;
    for (std::size_t i = 0; i < maxi.size(); ++i)
        if (i != pick) out.push_back(maxi[i]);
    for (const auto& face : faces(s.cone)) {
        if (face.dim() != s.cone.dim() - 1) continue;
        Mat rays = face.rays();
        rays.push_back(v);
        out.push_back({Cone::from_rays(f.ambient(), rays), s.lattice});
    }
    return StackyFan(f.ambient(), out);
}

bool oracle_s_member(const StackyFan& f, const Vec& v) {
    for (const auto& c : f.cones()) {
        const Mat& rays = c.cone.rays();
        bool relint = false;
        if (rays.empty()) {
            relint = is_zero(v);
        } else if (static_cast<int>(rays.size()) == c.cone.dim()) {
            auto coeffs = solve_in_span(rays, v);
            relint = coeffs.has_value();
            if (coeffs)
                for (const auto& x : *coeffs)
                    if (x <= 0) relint = false;
        } else {
            relint = locate(c.cone, v) == Location::RelativeInterior;
        }
        if (relint && oracle_member(c.lattice.basis(), v)) return true;
    }
    return false;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testsupport

namespace testsupport {

PolarizedBase tate_base(long ell, int r) {
    PolarizedBase b;
    b.base = sc_full(1, {{1}});
    b.g = 1;
    b.q = {{Vec{Int(ell)}}};
    b.torus_rank = r;
    return b;
}

namespace {

Vec slope_ray(const std::pair<long, long>& s) { return {Int(s.second), Int(s.first)}; }

}  // namespace

AVStackyFan build_tate(const TateFan& t, const PolarizedBase& base) {
    std::vector<StackyCone> cells;
    for (std::size_t i = 0; i + 1 < t.slopes.size(); ++i)
        cells.push_back({Cone::from_rays(2, {slope_ray(t.slopes[i]), slope_ray(t.slopes[i + 1])}), Sublattice(2, t.lattices[i])});
    return AVStackyFan(base, cells);
}

TateFan random_tate(Rng& rng, bool allow_roots) {
    std::set<std::pair<long, long>> inner;
    const long count = uniform(rng, 1, 3);
    while (static_cast<long>(inner.size()) < count) {
        const long q = uniform(rng, 2, 5), p = uniform(rng, 1, q - 1);
        if (std::gcd(p, q) == 1) inner.insert({p, q});
    }
    std::vector<std::pair<long, long>> sorted(inner.begin(), inner.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first * b.second < b.first * a.second; });
    TateFan t;
    t.slopes.push_back({0, 1});
    t.slopes.insert(t.slopes.end(), sorted.begin(), sorted.end());
    t.slopes.push_back({1, 1});
    const std::size_t cells = t.slopes.size() - 1;
    std::vector<long> k;
    for (std::size_t i = 0; i < cells; ++i) k.push_back(i > 0 && allow_roots && uniform(rng, 0, 2) == 0 ? 2 : 1);
    for (std::size_t i = 0; i < cells; ++i)
        t.lattices.push_back({scale(Int(k[i]), slope_ray(t.slopes[i])), scale(Int(k[(i + 1) % cells]), slope_ray(t.slopes[i + 1]))});
    return t;
}

TateFan refine_tate(Rng& rng, const TateFan& t) {
    const std::size_t i = uniform(rng, 0, static_cast<long>(t.slopes.size()) - 2);
    const auto a = t.slopes[i], b = t.slopes[i + 1];
    TateFan out = t;
    const long p = a.first + b.first, q = a.second + b.second, d = std::gcd(p, q);
    out.slopes.insert(out.slopes.begin() + i + 1, {p / d, q / d});
    out.lattices.insert(out.lattices.begin() + i + 1, t.lattices[i]);
    return out;
}

AVStackyFan two_arc() { return AVStackyFan(tate_base(), {sc_full(2, {{1, 0}, {2, 1}}), sc_full(2, {{2, 1}, {1, 1}})}); }

AVStackyFan three_arc() {
    return AVStackyFan(tate_base(), {sc_full(2, {{1, 0}, {2, 1}}), sc_full(2, {{2, 1}, {3, 2}}), sc_full(2, {{3, 2}, {1, 1}})});
}

AVStackyFan one_arc() { return AVStackyFan(tate_base(), {sc_full(2, {{1, 0}, {1, 1}})}); }

AVStackyFan single_arc() { return AVStackyFan(tate_base(), {sc_full(2, {{1, 0}, {2, 1}})}); }

AVStackyFan two_arc_index2() {
    return AVStackyFan(tate_base(), {sc(2, {{1, 0}, {2, 1}}, {{1, 0}, {0, 2}}), sc(2, {{2, 1}, {1, 1}}, {{4, 2}, {1, 1}})});
}

AVStackyFan base_only(const PolarizedBase& base) {
    const int d = base.ambient();
    Mat rays;
    for (const auto& r : base.base.cone.rays()) {
        Vec x = zeros(d);
        for (int i = 0; i < base.b(); ++i) x[i] = r[i];
        rays.push_back(x);
    }
    return AVStackyFan(base, {with_full_lattice(Cone::from_rays(d, rays))});
}

namespace {

void for_each_translation(int g, long bound, const std::function<bool(const Vec&)>& f) {
    for_each_point(g, bound, [&](const Vec& m) { f(m); });
}

}  // namespace

bool oracle_av_covered(const AVStackyFan& fan, const Vec& x, long bound) {
    bool hit = false;
    for (const auto& c : fan.cones())
        for_each_translation(fan.base().g, bound, [&](const Vec& m) {
            if (!hit && contains(Cone::from_rays(c.cone.ambient(), c.cone.rays()), mat_vec(translation_matrix(fan.base(), neg(m)), x)))
                hit = true;
            return hit;
        });
    return hit;
}

bool oracle_av_s_member(const AVStackyFan& fan, const Vec& x, long bound) {
    bool hit = false;
    for (const auto& c : fan.cones())
        for_each_translation(fan.base().g, bound, [&](const Vec& m) {
            if (hit) return true;
            Vec y = mat_vec(translation_matrix(fan.base(), neg(m)), x);
            if (locate(c.cone, y) == Location::RelativeInterior && oracle_member(c.lattice.basis(), y)) hit = true;
            if (c.cone.dim() == 0 && is_zero(y)) hit = true;
            return hit;
        });
    return hit;
}

}  // namespace testsupport
