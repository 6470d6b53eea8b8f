#pragma once

#include "tropfan/core.hpp"

#include <optional>

namespace tropfan {

/** Reduced row echelon form over Q; returns pivot columns. */
std::vector<int> rref(QMat& m, int ncols);

QMat to_rational(const Mat& m);

int rank(const Mat& rows, int ncols);

/** Indices of a maximal linearly independent subset, chosen greedily in order. */
std::vector<int> independent_rows(const Mat& rows, int ncols);

/** Primitive integer vectors forming a basis of the rational null space of `rows`. */
Mat rational_kernel(const Mat& rows, int ncols);

/** Coefficients c with sum c_i rows_i = v, if v lies in the rational row span. */
std::optional<QVec> solve_in_span(const Mat& rows, const Vec& v);

std::optional<QMat> inverse(const QMat& m);

Rat determinant(const QMat& m);

bool in_rational_span(const Mat& rows, const Vec& v);

}  // namespace tropfan
