#include "tropfan/cone.hpp"

#include "tropfan/lattice.hpp"
#include "tropfan/linalg.hpp"

#include <algorithm>
#include <set>

namespace tropfan {

namespace {

struct DDRay {
    Vec v;
    std::vector<int> zeros;  // processed constraints vanishing on v
};

std::vector<int> common(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void sort_unique(Mat& m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
}

}  // namespace

Mat extreme_rays(const Mat& A, int d) {
    if (d == 0) return {};
    std::vector<int> basis_rows = independent_rows(A, d);
    if (static_cast<int>(basis_rows.size()) < d) throw PointednessError("constraint system has a lineality space");

    QMat AB;
    for (int i : basis_rows) AB.emplace_back(A[i].begin(), A[i].end());
    QMat inv = *inverse(AB);

    std::vector<char> processed(A.size(), 0);
    std::vector<int> order = basis_rows;
    for (std::size_t i = 0; i < A.size(); ++i)
        if (std::find(basis_rows.begin(), basis_rows.end(), static_cast<int>(i)) == basis_rows.end())
            order.push_back(static_cast<int>(i));

    std::vector<DDRay> rays;
    for (int j = 0; j < d; ++j) {
        QVec col(d);
        for (int i = 0; i < d; ++i) col[i] = inv[i][j];
        rays.push_back({integral_direction(col), {}});
    }
    for (int i : basis_rows) processed[i] = 1;
    auto recompute_zeros = [&](DDRay& r) {
        r.zeros.clear();
        for (std::size_t i = 0; i < A.size(); ++i)
            if (processed[i] && dot(A[i], r.v) == 0) r.zeros.push_back(static_cast<int>(i));
    };
    for (auto& r : rays) recompute_zeros(r);

    for (std::size_t step = d; step < order.size(); ++step) {
        const int ci = order[step];
        const Vec& a = A[ci];
        std::vector<DDRay> pos, neg, zer;
        std::vector<Int> pv, nv;
        for (auto& r : rays) {
            Int s = dot(a, r.v);
            if (s > 0) {
                pos.push_back(r);
                pv.push_back(s);
            } else if (s < 0) {
                neg.push_back(r);
                nv.push_back(s);
            } else {
                zer.push_back(r);
            }
        }
        processed[ci] = 1;
        std::vector<DDRay> next;
        for (auto& r : pos) next.push_back(std::move(r));
        for (auto& r : zer) {
            r.zeros.push_back(ci);
            std::sort(r.zeros.begin(), r.zeros.end());
            next.push_back(std::move(r));
        }
        for (std::size_t p = 0; p < pos.size(); ++p) {
            for (std::size_t q = 0; q < neg.size(); ++q) {
                std::vector<int> z = common(next[p].zeros, neg[q].zeros);
                if (static_cast<int>(z.size()) < d - 2) continue;
                Mat sub;
                for (int i : z) sub.push_back(A[i]);
                if (rank(sub, d) != d - 2) continue;
                Vec w = primitive(add(scale(pv[p], neg[q].v), scale(-nv[q], next[p].v)));
                DDRay nr{std::move(w), {}};
                recompute_zeros(nr);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }
    Mat out;
    for (auto& r : rays) out.push_back(r.v);
    sort_unique(out);
    return out;
}

Cone Cone::zero(int ambient) {
    Cone c;
    c.ambient_ = ambient;
    c.dim_ = 0;
    for (int i = 0; i < ambient; ++i) c.equations_.push_back(unit(ambient, i));
    return c;
}

Cone Cone::from_rays(int ambient, const Mat& input) {
    Mat rays;
    for (const auto& r : input) {
        if (static_cast<int>(r.size()) != ambient)
            throw DimensionError("ray " + to_string(r) + " does not lie in Z^" + std::to_string(ambient));
        if (!is_zero(r)) rays.push_back(primitive(r));
    }
    sort_unique(rays);
    if (rays.empty()) return zero(ambient);

    Sublattice span = span_lattice(ambient, rays);
    const Mat& b = span.basis();
    const int d = span.rank();
    Mat A(rays.size(), Vec(d));
    for (std::size_t k = 0; k < rays.size(); ++k)
        for (int i = 0; i < d; ++i) A[k][i] = dot(b[i], rays[k]);

    Mat dual = extreme_rays(A, d);
    Mat facets;
    for (const auto& c : dual) {
        Vec h = zeros(ambient);
        for (int i = 0; i < d; ++i) h = add(h, scale(c[i], b[i]));
        facets.push_back(primitive(h));
    }
    if (rank(facets, ambient) < d) throw PointednessError("rays span a cone containing a line");
    sort_unique(facets);

    Mat extreme;
    for (const auto& r : rays) {
        Mat tight;
        for (const auto& h : facets)
            if (dot(h, r) == 0) tight.push_back(h);
        if (rank(tight, ambient) == d - 1) extreme.push_back(r);
    }

    Cone c;
    c.ambient_ = ambient;
    c.dim_ = d;
    c.rays_ = std::move(extreme);
    c.facets_ = std::move(facets);
    c.equations_ = kernel_lattice(c.rays_, ambient).basis();
    return c;
}

Cone Cone::from_inequalities(int ambient, const Mat& inequalities, const Mat& equations) {
    for (const auto& r : inequalities)
        if (static_cast<int>(r.size()) != ambient) throw DimensionError("inequality of wrong length");
    for (const auto& r : equations)
        if (static_cast<int>(r.size()) != ambient) throw DimensionError("equation of wrong length");
    Mat k = kernel_lattice(equations, ambient).basis();
    const int d = static_cast<int>(k.size());
    if (d == 0) return zero(ambient);
    Mat A(inequalities.size(), Vec(d));
    for (std::size_t j = 0; j < inequalities.size(); ++j)
        for (int i = 0; i < d; ++i) A[j][i] = dot(inequalities[j], k[i]);
    if (rank(A, d) < d) throw PointednessError("inequality system defines a cone containing a line");
    Mat coeffs = extreme_rays(A, d);
    Mat rays;
    for (const auto& c : coeffs) {
        Vec x = zeros(ambient);
        for (int i = 0; i < d; ++i) x = add(x, scale(c[i], k[i]));
        rays.push_back(x);
    }
    return from_rays(ambient, rays);
}

std::strong_ordering Cone::operator<=>(const Cone& o) const {
    if (auto c = ambient_ <=> o.ambient_; c != 0) return c;
    if (auto c = dim_ <=> o.dim_; c != 0) return c;
    if (rays_ < o.rays_) return std::strong_ordering::less;
    if (o.rays_ < rays_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Location locate(const Cone& c, const Vec& v, const Int& den) {
    if (static_cast<int>(v.size()) != c.ambient()) throw DimensionError("point " + to_string(v) + " has wrong length");
    if (den <= 0) throw InvalidInputError("denominator must be positive");
    for (const auto& e : c.equations())
        if (dot(e, v) != 0) return Location::Outside;
    bool boundary = false;
    for (const auto& h : c.facets()) {
        Int s = dot(h, v);
        if (s < 0) return Location::Outside;
        if (s == 0) boundary = true;
    }
    return boundary ? Location::Boundary : Location::RelativeInterior;
}

bool contains(const Cone& c, const Vec& v) { return locate(c, v) != Location::Outside; }

bool contains(const Cone& outer, const Cone& inner) {
    return std::all_of(inner.rays().begin(), inner.rays().end(), [&](const Vec& r) { return contains(outer, r); });
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient() != b.ambient()) throw DimensionError("intersect: ambient ranks differ");
    if (contains(b, a)) return a;
    if (contains(a, b)) return b;
    Mat ineq = a.facets();
    ineq.insert(ineq.end(), b.facets().begin(), b.facets().end());
    Mat eq = a.equations();
    eq.insert(eq.end(), b.equations().begin(), b.equations().end());
    return Cone::from_inequalities(a.ambient(), ineq, eq);
}

Cone dual(const Cone& c, bool within_span) {
    if (c.dim() < c.ambient() && !within_span)
        throw PointednessError("dual of a cone that is not full-dimensional contains a line");
    return Cone::from_rays(c.ambient(), c.facets());
}

bool is_face_of(const Cone& f, const Cone& c) {
    if (f.ambient() != c.ambient()) throw DimensionError("is_face_of: ambient ranks differ");
    if (!contains(c, f)) return false;
    Mat tight;
    for (const auto& h : c.facets())
        if (std::all_of(f.rays().begin(), f.rays().end(), [&](const Vec& r) { return dot(h, r) == 0; }))
            tight.push_back(h);
    Mat g;
    for (const auto& r : c.rays())
        if (std::all_of(tight.begin(), tight.end(), [&](const Vec& h) { return dot(h, r) == 0; })) g.push_back(r);
    return g == f.rays();
}

bool is_common_face(const Cone& a, const Cone& b) {
    Cone i = intersect(a, b);
    return is_face_of(i, a) && is_face_of(i, b);
}

std::vector<Cone> faces(const Cone& c) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> all(c.rays().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    seen.insert(all);
    queue.push_back(all);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        std::vector<int> f = queue[q];
        for (const auto& h : c.facets()) {
            std::vector<int> g;
            for (int i : f)
                if (dot(h, c.rays()[i]) == 0) g.push_back(i);
            if (seen.insert(g).second) queue.push_back(g);
        }
    }
    std::vector<Cone> out;
    for (const auto& s : seen) {
        Mat r;
        for (int i : s) r.push_back(c.rays()[i]);
        out.push_back(Cone::from_rays(c.ambient(), r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Vec interior_point(const Cone& c) {
    Vec p = zeros(c.ambient());
    for (const auto& r : c.rays()) p = add(p, r);
    return p;
}

Mat span_basis(const Cone& c) { return span_lattice(c.ambient(), c.rays()).basis(); }

Cone map_cone(const Cone& c, const Mat& map, int target_ambient) {
    Mat r;
    for (const auto& v : c.rays()) r.push_back(mat_vec(map, v));
    return Cone::from_rays(target_ambient, r);
}

bool germ_contains(const Cone& c, const Vec& v, const Vec& d) {
    for (const auto& e : c.equations())
        if (dot(e, v) != 0 || dot(e, d) != 0) return false;
    for (const auto& h : c.facets()) {
        Int s = dot(h, v);
        if (s < 0) return false;
        if (s == 0 && dot(h, d) < 0) return false;
    }
    return true;
}

std::string to_string(const Cone& c) {
    std::string s = "cone(";
    for (std::size_t i = 0; i < c.rays().size(); ++i) {
        if (i) s += ",";
        s += to_string(c.rays()[i]);
    }
    return s + ")";
}

}  // namespace tropfan
