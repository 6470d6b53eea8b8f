#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace tropfan {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;
using QVec = std::vector<Rat>;
using Mat = std::vector<Vec>;
using QMat = std::vector<QVec>;

/** Base class of every error raised by the library. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TROPFAN_ERROR(Name)                                              \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& what) : Error(what) {}          \
    }

TROPFAN_ERROR(DimensionError);
TROPFAN_ERROR(PointednessError);
TROPFAN_ERROR(ContainmentError);
TROPFAN_ERROR(SupportMismatchError);
TROPFAN_ERROR(CompletenessRequiredError);
TROPFAN_ERROR(ColoringInvalidError);
TROPFAN_ERROR(DefinitenessRequiredError);
TROPFAN_ERROR(ConnectivityError);
TROPFAN_ERROR(IncompatibleBaseError);
TROPFAN_ERROR(NormalizationError);
TROPFAN_ERROR(UnsupportedError);
TROPFAN_ERROR(ArrangementDegenerateError);
TROPFAN_ERROR(InvalidInputError);

#undef TROPFAN_ERROR

Int dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Int& k, const Vec& a);
Vec neg(const Vec& a);
bool is_zero(const Vec& v);
Int content(const Vec& v);

/** Divides by the gcd of the entries; the zero vector is returned unchanged. */
Vec primitive(const Vec& v);

/** Primitive vector with its first nonzero entry positive. */
Vec normalized_direction(const Vec& v);

Vec unit(int n, int i);
Vec zeros(int n);
Int l1_norm(const Vec& v);

/** Clears denominators of a rational vector and returns the primitive integer direction. */
Vec integral_direction(const QVec& v);

Mat transpose(const Mat& m, int cols);
Vec mat_vec(const Mat& m, const Vec& v);

std::string to_string(const Vec& v);

}  // namespace tropfan
