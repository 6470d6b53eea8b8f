#include "tropfan/abelian.hpp"

#include "tropfan/arrangement.hpp"
#include "tropfan/linalg.hpp"
#include "tropfan/minimal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tropfan {

namespace {

void check_shape(const PolarizedBase& base) {
    if (base.g < 0 || base.torus_rank < 0) throw InvalidInputError("negative rank");
    if (static_cast<int>(base.q.size()) != base.g) throw InvalidInputError("pairing must be a g x g array");
    for (const auto& row : base.q) {
        if (static_cast<int>(row.size()) != base.g) throw InvalidInputError("pairing must be a g x g array");
        for (const auto& e : row)
            if (static_cast<int>(e.size()) != base.b())
                throw InvalidInputError("pairing entries must live in the dual lattice of the base");
    }
}

Vec slice(const Vec& v, int from, int len) { return Vec(v.begin() + from, v.begin() + from + len); }

Vec base_part(const Vec& x, const PolarizedBase& base) { return slice(x, 0, base.b()); }
Vec fiber_part(const Vec& x, const PolarizedBase& base) { return slice(x, base.b(), base.g); }

bool base_zero_cone(const Cone& c, const PolarizedBase& base) {
    return std::all_of(c.rays().begin(), c.rays().end(), [&](const Vec& r) { return is_zero(base_part(r, base)); });
}

Rat inf_norm(const QMat& m) {
    Rat best = 0;
    for (const auto& row : m) {
        Rat s = 0;
        for (const auto& x : row) s += abs(x);
        best = std::max(best, s);
    }
    return best;
}

bool is_positive_definite(const Mat& m, int g) {
    return is_positive_semidefinite(to_rational(m)) && rank(m, g) == g;
}

/** Slope B(n)^{-1} n' of a point with nonzero base component. */
QVec slope(const Vec& x, const PolarizedBase& base) {
    auto inv = inverse(to_rational(form_at(base, base_part(x, base))));
    if (!inv) throw DefinitenessRequiredError("pairing is degenerate at " + to_string(base_part(x, base)));
    Vec np = fiber_part(x, base);
    QVec mu(base.g, Rat(0));
    for (int i = 0; i < base.g; ++i)
        for (int j = 0; j < base.g; ++j) mu[i] += (*inv)[i][j] * Rat(np[j]);
    return mu;
}

struct SlopeData {
    std::vector<QVec> slopes;
    Rat radius = 0;
};

SlopeData slope_data(const Cone& c, const PolarizedBase& base) {
    SlopeData out;
    for (const auto& r : c.rays()) {
        Vec n = base_part(r, base);
        if (is_zero(n)) {
            if (!is_zero(fiber_part(r, base)))
                throw InvalidInputError("ray " + to_string(r) + " has zero base component and nonzero fiber component");
            continue;
        }
        QVec mu = slope(r, base);
        QMat bq = to_rational(form_at(base, n));
        Rat l1 = 0;
        for (const auto& x : mu) l1 += abs(x);
        Rat rad = inf_norm(bq) * inf_norm(*inverse(bq)) * l1;
        out.radius = std::max(out.radius, rad);
        out.slopes.push_back(mu);
    }
    return out;
}

Int floor_of(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int ceil_of(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

bool has_base_nonzero_ray(const Cone& c, const PolarizedBase& base) { return !base_zero_cone(c, base); }

std::vector<Vec> face_translations(const Cone& f, const Cone& c, const PolarizedBase& base) {
    if (f.dim() > c.dim()) return {};
    if (base_zero_cone(f, base)) return is_face_of(f, c) ? std::vector<Vec>{zeros(base.g)} : std::vector<Vec>{};
    std::vector<Vec> out;
    for (const auto& m : candidate_translations(c, f, base))
        if (is_face_of(translate(f, m, base), c)) out.push_back(m);
    return out;
}

Vec quad_vec(const Mat& b, const Vec& m) { return mat_vec(b, m); }

}  // namespace

Mat form_at(const PolarizedBase& base, const Vec& n) {
    check_shape(base);
    if (static_cast<int>(n.size()) != base.b()) throw DimensionError("base point has the wrong rank");
    Mat out(base.g, Vec(base.g));
    for (int i = 0; i < base.g; ++i)
        for (int j = 0; j < base.g; ++j) out[i][j] = dot(base.q[i][j], n);
    return out;
}

bool is_positive_semidefinite(const QMat& input) {
    QMat a = input;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a[i][j] != a[j][i]) return false;
    std::vector<bool> active(n, true);
    for (std::size_t k = 0; k < n; ++k) {
        active[k] = false;
        if (a[k][k] < 0) return false;
        if (a[k][k] == 0) {
            for (std::size_t j = 0; j < n; ++j)
                if (active[j] && a[k][j] != 0) return false;
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = 0; j < n; ++j)
                if (active[j]) a[i][j] -= f * a[k][j];
        }
    }
    return true;
}

ValidationReport validate_form(const PolarizedBase& base) {
    ValidationReport rep;
    try {
        check_shape(base);
    } catch (const Error& e) {
        rep.violations.push_back({"shape", e.what()});
        return rep;
    }
    const int b = base.b();
    if (base.base.cone.dim() != b)
        rep.violations.push_back({"base-not-full-dimensional", "base cone " + to_string(base.base.cone) + " is not full-dimensional"});
    if (base.base.lattice != Sublattice::full(b))
        rep.violations.push_back({"base-lattice", "base cone must carry the full lattice"});
    for (int i = 0; i < base.g; ++i)
        for (int j = 0; j < base.g; ++j)
            if (base.q[i][j] != base.q[j][i])
                rep.violations.push_back({"asymmetric", "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and its transpose differ"});
    if (!rep.ok()) return rep;

    Mat stacked;
    for (const auto& r : base.base.cone.rays()) {
        Mat bm = form_at(base, r);
        if (!is_positive_semidefinite(to_rational(bm)))
            rep.violations.push_back({"not-semidefinite", "form is not positive semidefinite on ray " + to_string(r)});
        stacked.insert(stacked.end(), bm.begin(), bm.end());
    }
    if (base.g > 0) {
        Mat ker = rational_kernel(stacked, base.g);
        if (!ker.empty())
            rep.violations.push_back({"degenerate", "Q(m,m) = 0 at m=" + to_string(normalized_direction(ker.front()))});
    }
    return rep;
}

bool fiberwise_definite(const PolarizedBase& base) {
    check_shape(base);
    if (base.g == 0) return true;
    for (const auto& r : base.base.cone.rays())
        if (!is_positive_definite(form_at(base, r), base.g)) return false;
    return !base.base.cone.rays().empty();
}

Admissibility admissible_point(const Vec& n, const Vec& nprime, const PolarizedBase& base) {
    check_shape(base);
    if (static_cast<int>(n.size()) != base.b() || static_cast<int>(nprime.size()) != base.g)
        throw DimensionError("point has the wrong rank");
    if (!contains(base.base.cone, n)) return Admissibility::OutsideBase;
    if (is_zero(nprime)) return Admissibility::Admissible;
    return in_rational_span(form_at(base, n), nprime) ? Admissibility::Admissible : Admissibility::NotInSpan;
}

namespace {

struct RayData {
    Mat form;
    Vec functional;  // phi^T n_rho
};

std::vector<RayData> ray_data(const TestHom& h, const PolarizedBase& base) {
    const int t = h.tau.ambient();
    if (static_cast<int>(h.structure_map.size()) != base.b()) throw DimensionError("structure map has the wrong target rank");
    if (static_cast<int>(h.phi.size()) != t) throw DimensionError("phi has the wrong number of rows");
    for (const auto& row : h.phi)
        if (static_cast<int>(row.size()) != base.g) throw DimensionError("phi has the wrong number of columns");
    std::vector<RayData> out;
    for (const auto& r : h.tau.rays()) {
        Vec n = mat_vec(h.structure_map, r);
        if (!contains(base.base.cone, n)) throw ContainmentError("structure map sends ray " + to_string(r) + " outside the base cone");
        out.push_back({form_at(base, n), mat_vec(transpose(h.phi, base.g), r)});
    }
    return out;
}

}  // namespace

bool admissible_hom(const TestHom& h, const PolarizedBase& base) {
    for (const auto& rd : ray_data(h, base))
        for (const auto& k : rational_kernel(rd.form, base.g))
            if (dot(k, rd.functional) != 0) return false;
    return true;
}

bool admissible_hom_raywise(const TestHom& h, const PolarizedBase& base) {
    for (const auto& r : h.tau.rays()) {
        Vec n = mat_vec(h.structure_map, r);
        Vec np = mat_vec(transpose(h.phi, base.g), r);
        if (admissible_point(n, np, base) != Admissibility::Admissible) return false;
    }
    return true;
}

std::optional<std::pair<Vec, Vec>> sandwich_witness(const TestHom& h, const PolarizedBase& base, const Vec& m) {
    Int up = 0, down = 0;
    for (const auto& rd : ray_data(h, base)) {
        Int c = dot(rd.functional, m);
        Int qq = dot(m, quad_vec(rd.form, m));
        if (qq == 0) {
            if (c != 0) return std::nullopt;
            continue;
        }
        up = std::max(up, ceil_of(Rat(c, qq)));
        down = std::max(down, ceil_of(Rat(Int(-c), qq)));
    }
    return std::make_pair(scale(Int(-down), m), scale(up, m));
}

bool is_sandwiched(const TestHom& h, const PolarizedBase& base, const Vec& m1, const Vec& m, const Vec& m2) {
    for (const auto& rd : ray_data(h, base)) {
        Vec bm = quad_vec(rd.form, m);
        Int c = dot(rd.functional, m);
        if (dot(m1, bm) > c || c > dot(m2, bm)) return false;
    }
    return true;
}

Mat translation_matrix(const PolarizedBase& base, const Vec& m) {
    check_shape(base);
    if (static_cast<int>(m.size()) != base.g) throw DimensionError("translation has the wrong rank");
    const int d = base.ambient(), b = base.b();
    Mat t(d, Vec(d));
    for (int i = 0; i < d; ++i) t[i][i] = 1;
    for (int i = 0; i < base.g; ++i)
        for (int k = 0; k < b; ++k) {
            Int w = 0;
            for (int j = 0; j < base.g; ++j) w += m[j] * base.q[i][j][k];
            t[b + i][k] = w;
        }
    return t;
}

Cone translate(const Cone& c, const Vec& m, const PolarizedBase& base) {
    if (is_zero(m)) return c;
    return map_cone(c, translation_matrix(base, m), base.ambient());
}

StackyCone translate(const StackyCone& c, const Vec& m, const PolarizedBase& base) {
    if (is_zero(m)) return c;
    Mat t = translation_matrix(base, m);
    return {map_cone(c.cone, t, base.ambient()), image(c.lattice, t, base.ambient())};
}

std::vector<Vec> candidate_translations(const Cone& c1, const Cone& c2, const PolarizedBase& base) {
    check_shape(base);
    if (c1.ambient() != base.ambient() || c2.ambient() != base.ambient())
        throw DimensionError("cones do not live in the total space of the base");
    const int g = base.g;
    auto zero_only = [&]() {
        return intersect(c1, c2).dim() > 0 ? std::vector<Vec>{zeros(g)} : std::vector<Vec>{};
    };
    if (g == 0) return zero_only();
    if (!fiberwise_definite(base)) throw DefinitenessRequiredError("pairing is not definite on every ray of the base cone");
    SlopeData s1 = slope_data(c1, base), s2 = slope_data(c2, base);
    if (s1.slopes.empty() || s2.slopes.empty()) return zero_only();

    std::vector<Int> lo(g), hi(g);
    if (g == 1) {
        Rat min1 = s1.slopes[0][0], max1 = min1, min2 = s2.slopes[0][0], max2 = min2;
        for (const auto& s : s1.slopes) min1 = std::min(min1, s[0]), max1 = std::max(max1, s[0]);
        for (const auto& s : s2.slopes) min2 = std::min(min2, s[0]), max2 = std::max(max2, s[0]);
        lo[0] = ceil_of(Rat(min1 - max2));
        hi[0] = floor_of(Rat(max1 - min2));
    } else {
        Int r = floor_of(Rat(s1.radius + s2.radius));
        std::fill(lo.begin(), lo.end(), Int(-r));
        std::fill(hi.begin(), hi.end(), r);
    }

    std::vector<Vec> out;
    if (lo[0] > hi[0]) return out;
    Vec m = lo;
    while (true) {
        Cone meet = intersect(c1, translate(c2, m, base));
        if (has_base_nonzero_ray(meet, base) || (is_zero(m) && meet.dim() > 0)) out.push_back(m);
        int i = 0;
        while (i < g && m[i] == hi[i]) {
            m[i] = lo[i];
            ++i;
        }
        if (i == g) break;
        m[i] += 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Vec> orbit_translation(const Cone& a, const Cone& b, const PolarizedBase& base) {
    if (a.ambient() != b.ambient() || a.dim() != b.dim() || a.rays().size() != b.rays().size()) return std::nullopt;
    if (base_zero_cone(a, base)) {
        if (a == b) return zeros(base.g);
        return std::nullopt;
    }
    Vec pa = interior_point(a), pb = interior_point(b);
    Vec na = base_part(pa, base);
    if (na != base_part(pb, base)) return std::nullopt;
    const int off = base.b() + base.g;
    if (slice(pa, off, base.torus_rank) != slice(pb, off, base.torus_rank)) return std::nullopt;
    auto inv = inverse(to_rational(form_at(base, na)));
    if (!inv) throw DefinitenessRequiredError("pairing is degenerate at " + to_string(na));
    Vec diff = sub(fiber_part(pa, base), fiber_part(pb, base));
    Vec m(base.g);
    for (int i = 0; i < base.g; ++i) {
        Rat x = 0;
        for (int j = 0; j < base.g; ++j) x += (*inv)[i][j] * Rat(diff[j]);
        if (x.get_den() != 1) return std::nullopt;
        m[i] = x.get_num();
    }
    if (translate(b, m, base) != a) return std::nullopt;
    return m;
}

AVStackyFan::AVStackyFan(PolarizedBase base, std::vector<StackyCone> cones, bool close_faces) : base_(std::move(base)) {
    check_shape(base_);
    const int d = base_.ambient();
    for (const auto& c : cones)
        if (c.cone.ambient() != d || c.lattice.ambient() != d)
            throw DimensionError("cone " + to_string(c.cone) + " does not live in Z^" + std::to_string(d));
    std::stable_sort(cones.begin(), cones.end(),
                     [](const StackyCone& a, const StackyCone& b) { return a.cone.dim() > b.cone.dim(); });
    std::set<Cone> present;
    for (const auto& c : cones) {
        if (present.insert(c.cone).second) cones_.push_back(c);
        if (!close_faces) continue;
        for (const auto& f : faces(c.cone))
            if (present.insert(f).second) cones_.push_back(induced(c, f));
    }
    if (cones_.empty()) cones_.push_back({Cone::zero(d), Sublattice::zero(d)});
    std::sort(cones_.begin(), cones_.end());
}

AVStackyFan normalize_orbits(const AVStackyFan& fan) {
    std::vector<StackyCone> kept;
    for (const auto& c : fan.cones()) {
        bool seen = std::any_of(kept.begin(), kept.end(), [&](const StackyCone& k) {
            return orbit_translation(c.cone, k.cone, fan.base()).has_value();
        });
        if (!seen) kept.push_back(c);
    }
    return AVStackyFan(fan.base(), kept, false);
}

bool is_normalized(const AVStackyFan& fan) {
    const auto& cs = fan.cones();
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (orbit_translation(cs[i].cone, cs[j].cone, fan.base())) return false;
    return true;
}

ValidationReport validate_av_fan(const AVStackyFan& fan) {
    const PolarizedBase& base = fan.base();
    ValidationReport rep = validate_form(base);
    if (!rep.ok()) return rep;
    if (!fiberwise_definite(base)) throw DefinitenessRequiredError("pairing is not definite on every ray of the base cone");
    const int d = base.ambient(), b = base.b();
    const auto& cs = fan.cones();
    auto report = [&](const std::string& kind, const std::string& msg) { rep.violations.push_back({kind, msg}); };

    for (const auto& c : cs) {
        for (const auto& r : c.cone.rays())
            if (admissible_point(base_part(r, base), fiber_part(r, base), base) != Admissibility::Admissible)
                report("inadmissible-ray", "ray " + to_string(r) + " of " + to_string(c.cone) + " is not admissible");
        if (c.lattice.rank() != c.cone.dim())
            report("lattice-rank", "lattice of " + to_string(c.cone) + " has rank " + std::to_string(c.lattice.rank()));
        bool inside = true;
        for (const auto& v : c.lattice.basis())
            for (const auto& e : c.cone.equations()) inside = inside && dot(e, v) == 0;
        if (!inside) report("lattice-outside-span", "lattice of " + to_string(c.cone) + " leaves its span");
    }

    if (!rep.ok()) return rep;

    Mat base_rays;
    for (const auto& r : base.base.cone.rays()) {
        Vec x = zeros(d);
        for (int i = 0; i < b; ++i) x[i] = r[i];
        base_rays.push_back(x);
    }
    Cone base_cone = Cone::from_rays(d, base_rays);
    bool base_found = false;
    for (const auto& c : cs)
        if (auto m = orbit_translation(base_cone, c.cone, base)) {
            base_found = true;
            if (translate(c, *m, base).lattice != span_lattice(d, base_rays))
                report("base-cone-lattice", "base cone does not carry its saturated lattice");
        }
    if (!base_found) report("missing-base-cone", "base cone " + to_string(base_cone) + " is not a representative");

    for (const auto& c : cs)
        for (const auto& f : faces(c.cone)) {
            bool found = false;
            for (const auto& o : cs)
                if (auto m = orbit_translation(f, o.cone, base)) {
                    found = true;
                    if (translate(o, *m, base).lattice != restrict_to_span(c.lattice, f.rays()))
                        report("lattice-incompatible", "face " + to_string(f) + " of " + to_string(c.cone) + " carries a different lattice");
                    break;
                }
            if (!found) report("missing-face", "face " + to_string(f) + " of " + to_string(c.cone) + " has no representative");
        }

    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i; j < cs.size(); ++j)
            for (const auto& m : candidate_translations(cs[i].cone, cs[j].cone, base)) {
                if (i == j && is_zero(m)) continue;
                StackyCone t = translate(cs[j], m, base);
                Cone meet = intersect(cs[i].cone, t.cone);
                const std::string where = to_string(cs[i].cone) + " and " + to_string(cs[j].cone) + " translated by m=" + to_string(m);
                if (!is_common_face(cs[i].cone, t.cone)) {
                    report("not-common-face", where + " do not meet in a common face");
                    continue;
                }
                if (restrict_to_span(cs[i].lattice, meet.rays()) != restrict_to_span(t.lattice, meet.rays()))
                    report("lattice-incompatible", where + " carry different lattices on " + to_string(meet));
                if (i == j)
                    for (const auto& x : meet.rays())
                        if (!is_zero(mat_vec(form_at(base, base_part(x, base)), m))) {
                            report("not-fixed", where + " meet in " + to_string(meet) + ", which the translation does not fix");
                            break;
                        }
            }
    return rep;
}

std::vector<int> QuotientComplex::cells_by_dimension() const {
    int top = -1;
    for (const auto& c : cells) top = std::max(top, c.cone.dim());
    std::vector<int> out(top + 1, 0);
    for (const auto& c : cells) ++out[c.cone.dim()];
    return out;
}

QuotientComplex quotient_complex(const AVStackyFan& fan) {
    if (!is_normalized(fan)) throw NormalizationError("two representatives lie in one translation orbit");
    QuotientComplex out;
    out.base = fan.base();
    out.cells = fan.cones();
    const auto& cs = out.cells;
    for (std::size_t s = 0; s < cs.size(); ++s)
        for (std::size_t t = 0; t < cs.size(); ++t) {
            if (cs[s].cone.dim() >= cs[t].cone.dim()) continue;
            auto ms = face_translations(cs[s].cone, cs[t].cone, fan.base());
            if (ms.empty()) continue;
            if (ms.size() > 1)
                throw InvalidInputError(to_string(cs[s].cone) + " is a face of " + to_string(cs[t].cone) + " in more than one way");
            out.face_maps.push_back({static_cast<int>(s), static_cast<int>(t), ms.front()});
        }
    return out;
}

bool av_complete(const AVStackyFan& input) {
    AVStackyFan fan = normalize_orbits(input);
    const PolarizedBase& base = fan.base();
    const int d = base.ambient();
    const auto& cs = fan.cones();
    if (d == 0) return true;

    std::vector<const StackyCone*> top;
    for (const auto& c : cs)
        if (c.cone.dim() == d) top.push_back(&c);
    if (top.empty()) return false;
    for (const auto& c : cs) {
        if (c.cone.dim() == d) continue;
        bool covered = std::any_of(top.begin(), top.end(), [&](const StackyCone* t) {
            return !face_translations(c.cone, t->cone, base).empty();
        });
        if (!covered) return false;
    }

    for (const auto& c : cs) {
        if (c.cone.dim() != d - 1) continue;
        std::size_t count = 0;
        for (const auto* t : top) count += face_translations(c.cone, t->cone, base).size();
        bool boundary = false;
        for (const auto& h : base.base.cone.facets())
            if (std::all_of(c.cone.rays().begin(), c.cone.rays().end(),
                            [&](const Vec& r) { return dot(h, base_part(r, base)) == 0; }))
                boundary = true;
        if (count != (boundary ? 1u : 2u)) return false;
    }
    return true;
}

bool av_bir_equivalent(const AVStackyFan& a, const AVStackyFan& b, Vec* witness) {
    if (!(a.base() == b.base())) throw IncompatibleBaseError("fans live over different polarized bases");
    const PolarizedBase& base = a.base();
    AVStackyFan na = normalize_orbits(a), nb = normalize_orbits(b);
    std::vector<Vec> found;

    auto support_gap = [&](const AVStackyFan& x, const AVStackyFan& y) {
        for (const auto& c : x.cones()) {
            if (c.cone.dim() == 0) continue;
            std::vector<Cone> pieces;
            for (const auto& o : y.cones())
                for (const auto& m : candidate_translations(c.cone, o.cone, base)) pieces.push_back(translate(o.cone, m, base));
            if (auto w = uncovered_point(c.cone, pieces)) found.push_back(scale(order_modulo(c.lattice, *w), *w));
        }
    };
    support_gap(na, nb);
    support_gap(nb, na);

    for (const auto& x : na.cones())
        for (const auto& y : nb.cones())
            for (const auto& m : candidate_translations(x.cone, y.cone, base)) {
                StackyCone t = translate(y, m, base);
                Cone cell = intersect(x.cone, t.cone);
                if (cell.dim() == 0) continue;
                Sublattice la = restrict_to_span(x.lattice, cell.rays());
                Sublattice lb = restrict_to_span(t.lattice, cell.rays());
                if (la != lb) found.push_back(lattice_gap_witness(cell, la, lb));
            }
    if (found.empty()) return true;
    if (witness) *witness = *std::min_element(found.begin(), found.end(), witness_less);
    return false;
}

namespace {

/** Representative translated so that the slope of its interior point lies in [0,1)^g. */
StackyCone canonical_translate(const StackyCone& c, const PolarizedBase& base) {
    if (base.g == 0 || base_zero_cone(c.cone, base)) return c;
    QVec mu = slope(interior_point(c.cone), base);
    Vec m(base.g);
    for (int i = 0; i < base.g; ++i) m[i] = -floor_of(mu[i]);
    return translate(c, m, base);
}

}  // namespace

AVStackyFan av_minimal(const AVStackyFan& input) {
    const PolarizedBase& base = input.base();
    if (base.b() != 1) throw UnsupportedError("minimal model is implemented for one-dimensional base cones only");
    if (!fiberwise_definite(base)) throw DefinitenessRequiredError("pairing is not definite on the base ray");
    AVStackyFan fan = normalize_orbits(input);
    const int g = base.g, r = base.torus_rank, d = base.ambient();
    const Int s = base.base.cone.rays().front()[0];

    Mat q1 = form_at(base, Vec{s});
    Int det = determinant(to_rational(q1)).get_num();
    QMat inv = *inverse(to_rational(q1));
    Mat adj(g, Vec(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) adj[i][j] = Rat(inv[i][j] * det).get_num();

    auto row_form = [&](const Int& t, const Vec& fiber) {
        Vec h = zeros(d);
        h[0] = t * s;
        for (int j = 0; j < g; ++j) h[1 + j] = fiber[j];
        return h;
    };
    Mat ineqs{row_form(1, zeros(g))}, grid;
    for (int k = 0; k < g; ++k) {
        ineqs.push_back(row_form(0, adj[k]));
        ineqs.push_back(row_form(det, neg(adj[k])));
        grid.push_back(normalized_direction(primitive(row_form(-det, scale(Int(2), adj[k])))));
    }
    std::vector<Cone> domain;
    for (long mask = 0; mask < (1L << r); ++mask) {
        Mat local = ineqs;
        for (int k = 0; k < r; ++k) {
            Vec h = zeros(d);
            h[1 + g + k] = (mask >> k) & 1 ? -1 : 1;
            local.push_back(h);
        }
        domain.push_back(Cone::from_inequalities(d, local, {}));
    }

    std::vector<StackyCone> top;
    for (const auto& c : fan.cones())
        if (c.cone.dim() == d) top.push_back(c);

    std::set<Vec> walls(grid.begin(), grid.end());
    for (const auto& k : domain)
        for (const auto& c : top)
            for (const auto& m : candidate_translations(k, c.cone, base)) {
                Cone moved = translate(c.cone, m, base);
                for (const auto& h : moved.facets()) walls.insert(normalized_direction(h));
            }

    GermLabel label = [&](const Vec& p, const Vec& dir) -> std::optional<Sublattice> {
        if (g > 0 && is_zero(base_part(p, base))) throw std::logic_error("germ label queried on the base-zero locus");
        Cone at = Cone::from_rays(d, {p});
        for (const auto& c : top)
            for (const auto& m : candidate_translations(at, c.cone, base)) {
                StackyCone t = translate(c, m, base);
                if (germ_contains(t.cone, p, dir)) return t.lattice;
            }
        return std::nullopt;
    };
    auto fine = chambers(domain, Mat(walls.begin(), walls.end()));
    Mat essential = essential_hyperplanes(fine, label);
    std::set<Vec> coarse_walls(grid.begin(), grid.end());
    coarse_walls.insert(essential.begin(), essential.end());
    auto cells = label_chambers(chambers(domain, Mat(coarse_walls.begin(), coarse_walls.end())), label);

    for (const auto& c : fan.cones()) {
        if (c.cone.dim() == d || c.cone.dim() == 0) continue;
        bool maximal = true;
        for (const auto& o : fan.cones())
            if (o.cone.dim() > c.cone.dim() && !face_translations(c.cone, o.cone, base).empty()) maximal = false;
        if (maximal) cells.push_back(canonical_translate(c, base));
    }
    AVStackyFan out(base, cells);
    return normalize_orbits(out);
}

Mat symmetry_orbit(int r, const std::vector<Mat>& generators) {
    std::set<Vec> seen;
    std::vector<Vec> queue;
    for (int i = 0; i < r; ++i) {
        seen.insert(unit(r, i));
        queue.push_back(unit(r, i));
    }
    for (std::size_t k = 0; k < queue.size(); ++k) {
        if (queue.size() > 100000) throw InvalidInputError("symmetry group does not look finite");
        for (const auto& gm : generators) {
            Vec v = mat_vec(gm, queue[k]);
            if (seen.insert(v).second) queue.push_back(v);
        }
    }
    std::set<Vec> dirs;
    for (const auto& v : seen)
        if (!is_zero(v)) dirs.insert(normalized_direction(primitive(v)));
    return Mat(dirs.begin(), dirs.end());
}

StackyFan reference_subdivision(int r, const Mat& symmetry_vectors) {
    if (r == 0) return StackyFan(0, {});
    if (rank(symmetry_vectors, r) < r) throw ArrangementDegenerateError("symmetry vectors do not span");
    auto idx = independent_rows(symmetry_vectors, r);
    std::vector<Cone> domain;
    for (long mask = 0; mask < (1L << r); ++mask) {
        Mat ineqs;
        for (int k = 0; k < r; ++k) ineqs.push_back((mask >> k) & 1 ? neg(symmetry_vectors[idx[k]]) : symmetry_vectors[idx[k]]);
        domain.push_back(Cone::from_inequalities(r, ineqs, {}));
    }
    std::vector<StackyCone> cones;
    for (const auto& c : chambers(domain, symmetry_vectors)) cones.push_back(with_full_lattice(c));
    return StackyFan(r, cones);
}

StackyFan join_subdivision(const Cone& sigma, const StackyFan& torus_fan) {
    const int b = sigma.ambient(), r = torus_fan.ambient(), d = b + r;
    auto embed_torus = [&](const Vec& v) {
        Vec x = zeros(d);
        for (int i = 0; i < r; ++i) x[b + i] = v[i];
        return x;
    };
    std::map<Cone, std::vector<Cone>> memo;
    std::function<std::vector<Cone>(const Cone&)> sub = [&](const Cone& f) -> std::vector<Cone> {
        if (auto it = memo.find(f); it != memo.end()) return it->second;
        std::set<Cone> out;
        if (f.dim() == 0) {
            for (const auto& c : torus_fan.cones()) {
                Mat rays;
                for (const auto& v : c.cone.rays()) rays.push_back(embed_torus(v));
                out.insert(Cone::from_rays(d, rays));
            }
        } else {
            Vec bary = zeros(b);
            for (const auto& v : f.rays()) bary = add(bary, v);
            Vec rho = zeros(d);
            for (int i = 0; i < b; ++i) rho[i] = bary[i];
            rho = primitive(rho);
            std::set<Cone> lower;
            for (const auto& g : faces(f))
                if (g.dim() < f.dim())
                    for (const auto& c : sub(g)) lower.insert(c);
            for (const auto& c : lower) {
                out.insert(c);
                Mat rays = c.rays();
                rays.push_back(rho);
                out.insert(Cone::from_rays(d, rays));
            }
        }
        std::vector<Cone> res(out.begin(), out.end());
        memo[f] = res;
        return res;
    };
    std::vector<StackyCone> cones;
    for (const auto& c : sub(sigma)) cones.push_back(with_full_lattice(c));
    return StackyFan(d, cones);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

Mat cycle_basis(const MetricGraph& graph) {
    const int nv = graph.vertices;
    const int ne = static_cast<int>(graph.edges.size());
    if (nv <= 0) throw ConnectivityError("graph has no vertices");
    for (const auto& e : graph.edges)
        if (e.u < 0 || e.v < 0 || e.u >= nv || e.v >= nv) throw InvalidInputError("edge endpoint out of range");

    std::vector<int> order(ne);
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](int i) {
        const auto& e = graph.edges[i];
        return std::make_tuple(std::min(e.u, e.v), std::max(e.u, e.v), i);
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    UnionFind uf(nv);
    std::vector<bool> in_tree(ne, false);
    std::vector<std::vector<std::pair<int, int>>> adj(nv);
    for (int i : order) {
        const auto& e = graph.edges[i];
        if (e.u != e.v && uf.unite(e.u, e.v)) {
            in_tree[i] = true;
            adj[e.u].push_back({e.v, i});
            adj[e.v].push_back({e.u, i});
        }
    }
    for (int v = 1; v < nv; ++v)
        if (uf.find(v) != uf.find(0)) throw ConnectivityError("graph is not connected");

    std::vector<int> parent(nv, -1), parent_edge(nv, -1), depth(nv, 0);
    std::vector<int> stack{0};
    std::vector<bool> visited(nv, false);
    visited[0] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (auto [y, e] : adj[x])
            if (!visited[y]) {
                visited[y] = true;
                parent[y] = x;
                parent_edge[y] = e;
                depth[y] = depth[x] + 1;
                stack.push_back(y);
            }
    }

    Mat out;
    for (int i = 0; i < ne; ++i) {
        if (in_tree[i]) continue;
        const auto& e = graph.edges[i];
        Vec c = zeros(ne);
        c[i] = 1;
        // close the cycle by walking the tree from e.v back to e.u
        auto step = [&](int from, int to, int edge) {
            const auto& te = graph.edges[edge];
            c[edge] += (te.u == from && te.v == to) ? 1 : -1;
        };
        int a = e.v, b = e.u;
        std::vector<std::pair<int, int>> tail;
        while (a != b) {
            if (depth[a] >= depth[b]) {
                step(a, parent[a], parent_edge[a]);
                a = parent[a];
            } else {
                tail.push_back({b, parent_edge[b]});
                b = parent[b];
            }
        }
        for (auto it = tail.rbegin(); it != tail.rend(); ++it) step(parent[it->first], it->first, it->second);
        out.push_back(c);
    }
    return out;
}

PolarizedBase jacobian_form(const MetricGraph& graph) {
    const int b = graph.base.cone.ambient();
    for (const auto& e : graph.edges)
        if (static_cast<int>(e.length.size()) != b) throw DimensionError("edge length has the wrong rank");
    Mat cycles = cycle_basis(graph);
    PolarizedBase out;
    out.base = graph.base;
    out.g = static_cast<int>(cycles.size());
    out.q.assign(out.g, std::vector<Vec>(out.g, zeros(b)));
    for (int i = 0; i < out.g; ++i)
        for (int j = 0; j < out.g; ++j)
            for (std::size_t e = 0; e < graph.edges.size(); ++e)
                out.q[i][j] = add(out.q[i][j], scale(Int(cycles[i][e] * cycles[j][e]), graph.edges[e].length));
    return out;
}

}  // namespace tropfan
