#include "tropfan/core.hpp"

#include <sstream>

namespace tropfan {

static void require_same_size(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionError("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
}

Int dot(const Vec& a, const Vec& b) {
    require_same_size(a, b);
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    require_same_size(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    require_same_size(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Int& k, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

Vec neg(const Vec& a) { return scale(Int(-1), a); }

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Int content(const Vec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

Vec primitive(const Vec& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

Vec normalized_direction(const Vec& v) {
    Vec p = primitive(v);
    for (const auto& x : p) {
        if (x > 0) break;
        if (x < 0) return neg(p);
    }
    return p;
}

Vec unit(int n, int i) {
    Vec v(n, Int(0));
    v[i] = 1;
    return v;
}

Vec zeros(int n) { return Vec(n, Int(0)); }

Int l1_norm(const Vec& v) {
    Int s = 0;
    for (const auto& x : v) s += abs(x);
    return s;
}

Vec integral_direction(const QVec& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_num() * (l / v[i].get_den());
    return primitive(r);
}

Mat transpose(const Mat& m, int cols) {
    Mat t(cols, Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    Vec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    os << ')';
    return os.str();
}

}  // namespace tropfan
