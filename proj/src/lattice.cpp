#include "tropfan/lattice.hpp"

#include "tropfan/linalg.hpp"

#include <algorithm>

namespace tropfan {

namespace {

void axpy_row(Vec& target, const Int& f, const Vec& source, int from) {
    for (std::size_t j = from; j < target.size(); ++j) target[j] -= f * source[j];
}

}  // namespace

Mat hnf(Mat rows, int ncols) {
    for (auto& r : rows)
        if (static_cast<int>(r.size()) != ncols) throw DimensionError("hnf: row length mismatch");
    std::size_t top = 0;
    std::vector<int> pivot_cols;
    for (int col = 0; col < ncols && top < rows.size(); ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = top; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool done = true;
            for (std::size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[top][col].get_mpz_t());
                axpy_row(rows[i], q, rows[top], col);
                if (rows[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[top][col] == 0) continue;
        if (rows[top][col] < 0)
            for (auto& x : rows[top]) x = -x;
        pivot_cols.push_back(col);
        ++top;
    }
    rows.resize(top);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int c = pivot_cols[i];
        for (std::size_t k = 0; k < i; ++k) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[k][c].get_mpz_t(), rows[i][c].get_mpz_t());
            if (q != 0) axpy_row(rows[k], q, rows[i], c);
        }
    }
    return rows;
}

Sublattice::Sublattice(int ambient, const Mat& generators) : ambient_(ambient) {
    if (ambient < 0) throw DimensionError("negative ambient rank");
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != ambient)
            throw DimensionError("generator " + to_string(g) + " does not lie in Z^" + std::to_string(ambient));
    basis_ = hnf(generators, ambient);
    for (const auto& r : basis_) {
        int c = 0;
        while (r[c] == 0) ++c;
        pivots_.push_back(c);
    }
}

Sublattice Sublattice::full(int n) {
    Mat id;
    for (int i = 0; i < n; ++i) id.push_back(unit(n, i));
    return Sublattice(n, id);
}

Sublattice Sublattice::zero(int n) { return Sublattice(n, {}); }

bool Sublattice::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw DimensionError("vector " + to_string(v) + " not in ambient lattice");
    Vec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const int c = pivots_[i];
        for (int j = (i == 0 ? 0 : pivots_[i - 1] + 1); j < c; ++j)
            if (r[j] != 0) return false;
        if (!mpz_divisible_p(r[c].get_mpz_t(), basis_[i][c].get_mpz_t())) return false;
        Int q = r[c] / basis_[i][c];
        if (q != 0) axpy_row(r, q, basis_[i], c);
    }
    return is_zero(r);
}

bool Sublattice::contains(const Sublattice& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("lattices live in different ambient ranks");
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& b) { return contains(b); });
}

std::strong_ordering Sublattice::operator<=>(const Sublattice& o) const {
    if (auto c = ambient_ <=> o.ambient_; c != 0) return c;
    if (auto c = rank() <=> o.rank(); c != 0) return c;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (int j = 0; j < ambient_; ++j) {
            int c = cmp(basis_[i][j], o.basis_[i][j]);
            if (c < 0) return std::strong_ordering::less;
            if (c > 0) return std::strong_ordering::greater;
        }
    return std::strong_ordering::equal;
}

Sublattice intersect(const Sublattice& a, const Sublattice& b) {
    if (a.ambient() != b.ambient()) throw DimensionError("intersect: ambient ranks differ");
    const int n = a.ambient();
    Mat rows;
    for (const auto& v : a.basis()) {
        Vec r(2 * n);
        for (int j = 0; j < n; ++j) r[j] = r[n + j] = v[j];
        rows.push_back(std::move(r));
    }
    for (const auto& v : b.basis()) {
        Vec r(2 * n, Int(0));
        for (int j = 0; j < n; ++j) r[j] = v[j];
        rows.push_back(std::move(r));
    }
    Mat h = hnf(rows, 2 * n);
    Mat gens;
    for (const auto& r : h) {
        bool upper_zero = std::all_of(r.begin(), r.begin() + n, [](const Int& x) { return x == 0; });
        if (upper_zero) gens.emplace_back(r.begin() + n, r.end());
    }
    return Sublattice(n, gens);
}

Sublattice kernel_lattice(const Mat& rows, int ncols) {
    const int k = static_cast<int>(rows.size());
    Mat big;
    for (int j = 0; j < ncols; ++j) {
        Vec r(k + ncols, Int(0));
        for (int i = 0; i < k; ++i) r[i] = rows[i][j];
        r[k + j] = 1;
        big.push_back(std::move(r));
    }
    Mat h = hnf(big, k + ncols);
    Mat gens;
    for (const auto& r : h) {
        bool upper_zero = std::all_of(r.begin(), r.begin() + k, [](const Int& x) { return x == 0; });
        if (upper_zero) gens.emplace_back(r.begin() + k, r.end());
    }
    return Sublattice(ncols, gens);
}

Sublattice saturate(const Sublattice& l) {
    const int n = l.ambient();
    if (l.rank() == 0) return Sublattice::zero(n);
    if (l.rank() == n) return Sublattice::full(n);
    Mat annihilator = rational_kernel(l.basis(), n);
    return kernel_lattice(annihilator, n);
}

Sublattice span_lattice(int ambient, const Mat& vectors) { return saturate(Sublattice(ambient, vectors)); }

Sublattice restrict_to_span(const Sublattice& l, const Mat& vectors) {
    return intersect(l, span_lattice(l.ambient(), vectors));
}

Sublattice image(const Sublattice& l, const Mat& map, int target_ambient) {
    Mat gens;
    for (const auto& b : l.basis()) gens.push_back(mat_vec(map, b));
    return Sublattice(target_ambient, gens);
}

std::optional<Int> index_in(const Sublattice& sub, const Sublattice& sup) {
    if (!sup.contains(sub)) throw ContainmentError("index: lattice is not contained in the reference lattice");
    if (sub.rank() != sup.rank()) return std::nullopt;
    Int num = 1, den = 1;
    for (std::size_t i = 0; i < sub.basis().size(); ++i) {
        const Vec& a = sub.basis()[i];
        const Vec& b = sup.basis()[i];
        auto nz = std::find_if(a.begin(), a.end(), [](const Int& x) { return x != 0; });
        num *= *nz;
        den *= b[nz - a.begin()];
    }
    return Int(num / den);
}

std::optional<QVec> coordinates(const Sublattice& l, const Vec& v) { return solve_in_span(l.basis(), v); }

Int order_modulo(const Sublattice& l, const Vec& v) {
    auto c = coordinates(l, v);
    if (!c) throw ContainmentError("order_modulo: vector " + to_string(v) + " is outside the span of the lattice");
    Int k = 1;
    for (const auto& x : *c) k = lcm(k, x.get_den());
    return k;
}

Int covolume(const Sublattice& l) {
    if (l.rank() != l.ambient()) throw DimensionError("covolume of a lattice that is not full rank");
    Int d = 1;
    for (int i = 0; i < l.rank(); ++i) d *= l.basis()[i][i];
    return d;
}

}  // namespace tropfan
