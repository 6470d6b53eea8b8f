#include "tropfan/linalg.hpp"

namespace tropfan {

std::vector<int> rref(QMat& m, int ncols) {
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rat p = m[row][col];
        for (int j = col; j < ncols; ++j) m[row][j] /= p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (int j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

QMat to_rational(const Mat& m) {
    QMat q;
    q.reserve(m.size());
    for (const auto& r : m) q.emplace_back(r.begin(), r.end());
    return q;
}

int rank(const Mat& rows, int ncols) {
    QMat q = to_rational(rows);
    return static_cast<int>(rref(q, ncols).size());
}

std::vector<int> independent_rows(const Mat& rows, int ncols) {
    std::vector<int> chosen;
    QMat basis;
    std::vector<int> pivots;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        QVec v(rows[k].begin(), rows[k].end());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Rat f = v[pivots[i]];
            if (f == 0) continue;
            for (int j = 0; j < ncols; ++j) v[j] -= f * basis[i][j];
        }
        int piv = -1;
        for (int j = 0; j < ncols; ++j)
            if (v[j] != 0) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        Rat p = v[piv];
        for (int j = 0; j < ncols; ++j) v[j] /= p;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Rat f = basis[i][piv];
            if (f == 0) continue;
            for (int j = 0; j < ncols; ++j) basis[i][j] -= f * v[j];
        }
        basis.push_back(std::move(v));
        pivots.push_back(piv);
        chosen.push_back(static_cast<int>(k));
        if (static_cast<int>(chosen.size()) == ncols) break;
    }
    return chosen;
}

Mat rational_kernel(const Mat& rows, int ncols) {
    QMat q = to_rational(rows);
    std::vector<int> pivots = rref(q, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    Mat out;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        QVec x(ncols, Rat(0));
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -q[i][free];
        out.push_back(integral_direction(x));
    }
    return out;
}

std::optional<QVec> solve_in_span(const Mat& rows, const Vec& v) {
    // Solve sum c_i rows_i = v via the augmented transpose system.
    const int k = static_cast<int>(rows.size());
    const int n = static_cast<int>(v.size());
    QMat m(n, QVec(k + 1));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < k; ++i) m[j][i] = rows[i][j];
        m[j][k] = v[j];
    }
    std::vector<int> piv = rref(m, k + 1);
    if (!piv.empty() && piv.back() == k) return std::nullopt;
    QVec c(k, Rat(0));
    for (std::size_t r = 0; r < piv.size(); ++r) c[piv[r]] = m[r][k];
    return c;
}

std::optional<QMat> inverse(const QMat& a) {
    const int n = static_cast<int>(a.size());
    QMat m(n, QVec(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    std::vector<int> piv = rref(m, 2 * n);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
    QMat inv(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

Rat determinant(const QMat& a) {
    QMat m = a;
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            std::swap(m[sel], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

bool in_rational_span(const Mat& rows, const Vec& v) { return solve_in_span(rows, v).has_value(); }

}  // namespace tropfan
