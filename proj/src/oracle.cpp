#include "tropfan/oracle.hpp"

#include "tropfan/linalg.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace tropfan {

namespace {

void for_box(int n, long r, const std::function<void(const Vec&)>& f) {
    Vec v(n, Int(-r));
    if (n == 0) {
        f(v);
        return;
    }
    while (true) {
        f(v);
        int i = n - 1;
        while (i >= 0 && v[i] == r) v[i--] = -r;
        if (i < 0) return;
        v[i] += 1;
    }
}

/** v as an integer combination of the basis, checked through rational coordinates. */
bool in_group(const Sublattice& l, const Vec& v) {
    if (l.rank() == 0) return is_zero(v);
    auto c = solve_in_span(l.basis(), v);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](const Rat& x) { return x.get_den() == 1; });
}

bool in_relative_interior(const Cone& c, const Vec& v) {
    if (c.dim() == 0) return is_zero(v);
    return locate(c, v) == Location::RelativeInterior;
}

long uniform(std::mt19937_64& rng, long lo, long hi) {
    const auto span = static_cast<unsigned long>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
}

Int ceil_abs(const Rat& x) {
    Rat a = abs(x);
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    return q;
}

/** Largest |slope| coordinate over the rays with nonzero base part. */
Int slope_extent(const Vec& x, const PolarizedBase& base) {
    Vec n(x.begin(), x.begin() + base.b());
    if (is_zero(n) || base.g == 0) return 0;
    auto inv = inverse(to_rational(form_at(base, n)));
    if (!inv) throw DefinitenessRequiredError("pairing is degenerate at " + to_string(n));
    Int best = 0;
    for (int i = 0; i < base.g; ++i) {
        Rat s = 0;
        for (int j = 0; j < base.g; ++j) s += (*inv)[i][j] * Rat(x[base.b() + j]);
        best = std::max(best, ceil_abs(s));
    }
    return best;
}

bool av_covered(const AVStackyFan& fan, const Vec& x, long bound) {
    bool hit = false;
    for (const auto& c : fan.cones()) {
        if (hit) break;
        for_box(fan.base().g, bound, [&](const Vec& m) {
            if (!hit && contains(c.cone, mat_vec(translation_matrix(fan.base(), m), x))) hit = true;
        });
    }
    return hit;
}

}  // namespace

std::vector<Vec> s_enumerate(const StackyFan& fan, long radius) {
    std::vector<Vec> out;
    for_box(fan.ambient(), radius, [&](const Vec& v) {
        for (const auto& c : fan.cones())
            if (in_relative_interior(c.cone, v) && in_group(c.lattice, v)) {
                out.push_back(v);
                return;
            }
    });
    return out;
}

std::vector<Vec> s_enumerate(const MinimalFan& fan, long radius) {
    std::vector<Vec> out;
    for_box(fan.ambient, radius, [&](const Vec& v) {
        for (const auto& p : fan.pieces)
            if (contains(p.cone, v) && in_group(p.lattice, v)) {
                out.push_back(v);
                return;
            }
    });
    return out;
}

std::vector<Vec> s_enumerate(const AVStackyFan& fan, long radius, long bound) {
    std::vector<Vec> out;
    const PolarizedBase& base = fan.base();
    for_box(base.ambient(), radius, [&](const Vec& v) {
        bool hit = false;
        for (const auto& c : fan.cones()) {
            if (hit) break;
            for_box(base.g, bound, [&](const Vec& m) {
                if (hit) return;
                Vec y = mat_vec(translation_matrix(base, m), v);
                if (in_relative_interior(c.cone, y) && in_group(c.lattice, y)) hit = true;
            });
        }
        if (hit) out.push_back(v);
    });
    return out;
}

CoverSample cover_sample(const StackyFan& fan, long count, std::uint64_t seed, long radius) {
    std::mt19937_64 rng(seed);
    CoverSample out;
    for (long k = 0; k < count; ++k) {
        Vec v(fan.ambient());
        for (auto& x : v) x = uniform(rng, -radius, radius);
        ++out.total;
        bool hit = std::any_of(fan.cones().begin(), fan.cones().end(), [&](const StackyCone& c) { return contains(c.cone, v); });
        if (hit)
            ++out.covered;
        else if (!out.first_uncovered)
            out.first_uncovered = v;
    }
    return out;
}

CoverSample cover_sample(const AVStackyFan& fan, long count, std::uint64_t seed, long radius) {
    const PolarizedBase& base = fan.base();
    std::mt19937_64 rng(seed);
    Int extent = 0;
    for (const auto& c : fan.cones())
        for (const auto& r : c.cone.rays()) extent = std::max(extent, slope_extent(r, base));
    CoverSample out;
    const auto& base_rays = base.base.cone.rays();
    for (long k = 0; k < count; ++k) {
        Vec x = zeros(base.ambient());
        while (is_zero(Vec(x.begin(), x.begin() + base.b())) && !base_rays.empty()) {
            Vec n = zeros(base.b());
            for (const auto& r : base_rays) n = add(n, scale(Int(uniform(rng, 0, 3)), r));
            std::copy(n.begin(), n.end(), x.begin());
        }
        for (int i = base.b(); i < base.ambient(); ++i) x[i] = uniform(rng, -radius, radius);
        ++out.total;
        const long bound = Int(slope_extent(x, base) + extent + 2).get_si();
        if (av_covered(fan, x, bound))
            ++out.covered;
        else if (!out.first_uncovered)
            out.first_uncovered = x;
    }
    return out;
}

std::vector<Vec> translations_bruteforce(const Cone& c1, const Cone& c2, const PolarizedBase& base, long bound) {
    std::vector<Vec> out;
    for_box(base.g, bound, [&](const Vec& m) {
        Cone meet = intersect(c1, map_cone(c2, translation_matrix(base, m), base.ambient()));
        bool base_nonzero = false;
        for (const auto& r : meet.rays())
            for (int i = 0; i < base.b(); ++i) base_nonzero = base_nonzero || r[i] != 0;
        if (base_nonzero || (is_zero(m) && meet.dim() > 0)) out.push_back(m);
    });
    return out;
}

}  // namespace tropfan
