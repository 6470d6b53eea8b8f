#pragma once

#include "tropfan/core.hpp"

#include <compare>

namespace tropfan {

/**
 * Extreme rays of the pointed cone {x in Q^d : A x >= 0} by the double description method.
 * Throws PointednessError if A has rank below d.
 */
Mat extreme_rays(const Mat& A, int d);

/**
 * Rational polyhedral cone, kept in canonical form: primitive irredundant rays sorted
 * lexicographically, primitive facet normals chosen inside the linear span of the cone,
 * and a basis of the integer annihilator of the span.
 */
class Cone {
public:
    Cone() = default;

    static Cone from_rays(int ambient, const Mat& rays);
    static Cone from_inequalities(int ambient, const Mat& inequalities, const Mat& equations = {});
    static Cone zero(int ambient);

    int ambient() const { return ambient_; }
    int dim() const { return dim_; }
    const Mat& rays() const { return rays_; }
    const Mat& facets() const { return facets_; }
    const Mat& equations() const { return equations_; }

    bool operator==(const Cone& o) const { return ambient_ == o.ambient_ && rays_ == o.rays_; }
    std::strong_ordering operator<=>(const Cone& o) const;

private:
    int ambient_ = 0;
    int dim_ = 0;
    Mat rays_;
    Mat facets_;
    Mat equations_;
};

enum class Location { Outside, Boundary, RelativeInterior };

/** Position of the rational point v/den (den > 0) relative to the cone. */
Location locate(const Cone& c, const Vec& v, const Int& den = 1);

bool contains(const Cone& c, const Vec& v);
bool contains(const Cone& outer, const Cone& inner);

Cone intersect(const Cone& a, const Cone& b);

/**
 * Dual cone. A cone that is not full-dimensional has a dual containing a line; with
 * `within_span` the dual is taken inside the span of c instead of raising PointednessError.
 */
Cone dual(const Cone& c, bool within_span = false);

bool is_face_of(const Cone& f, const Cone& c);

/** True if the intersection of a and b is a face of both. */
bool is_common_face(const Cone& a, const Cone& b);

/** All faces including the zero cone and c itself, in canonical cone order. */
std::vector<Cone> faces(const Cone& c);

/** Sum of the rays; lies in the relative interior. */
Vec interior_point(const Cone& c);

/** Saturated basis of Z^n intersected with the span of the cone. */
Mat span_basis(const Cone& c);

/** Image of the cone under an integer linear map (rows are output coordinates). */
Cone map_cone(const Cone& c, const Mat& map, int target_ambient);

/** True if the germ of v + eps*d (eps -> 0+) lies in the cone. */
bool germ_contains(const Cone& c, const Vec& v, const Vec& d);

std::string to_string(const Cone& c);

}  // namespace tropfan
