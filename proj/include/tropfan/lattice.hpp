#pragma once

#include "tropfan/core.hpp"

#include <compare>
#include <optional>

namespace tropfan {

/**
 * Row-style Hermite normal form of the lattice spanned by `rows`.
 * Pivots are positive, entries above a pivot lie in [0, pivot), zero rows are dropped.
 */
Mat hnf(Mat rows, int ncols);

/** A subgroup of Z^n stored by its canonical Hermite basis. */
class Sublattice {
public:
    Sublattice() = default;
    Sublattice(int ambient, const Mat& generators);

    static Sublattice full(int n);
    static Sublattice zero(int n);

    int ambient() const { return ambient_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const Mat& basis() const { return basis_; }

    bool contains(const Vec& v) const;

    /** True if every generator of `other` lies in this lattice. */
    bool contains(const Sublattice& other) const;

    bool operator==(const Sublattice& o) const = default;
    std::strong_ordering operator<=>(const Sublattice& o) const;

private:
    int ambient_ = 0;
    Mat basis_;
    std::vector<int> pivots_;
};

Sublattice intersect(const Sublattice& a, const Sublattice& b);

/** Z^n intersected with the rational span of `l`. */
Sublattice saturate(const Sublattice& l);

/** Z^n intersected with the rational span of the given vectors. */
Sublattice span_lattice(int ambient, const Mat& vectors);

/** Integer solutions of rows * x = 0 for x in Z^ncols. */
Sublattice kernel_lattice(const Mat& rows, int ncols);

/** l intersected with the rational span of `vectors`. */
Sublattice restrict_to_span(const Sublattice& l, const Mat& vectors);

/** Image of l under the integer matrix `map` (rows are output coordinates). */
Sublattice image(const Sublattice& l, const Mat& map, int target_ambient);

/**
 * Index [sup : sub]. Throws ContainmentError unless sub is contained in sup;
 * returns nullopt when the index is infinite (rank drop).
 */
std::optional<Int> index_in(const Sublattice& sub, const Sublattice& sup);

/** Rational coordinates of v in the basis of l, if v lies in its span. */
std::optional<QVec> coordinates(const Sublattice& l, const Vec& v);

/** Smallest k >= 1 with k*v in l; v must lie in the rational span of l. */
Int order_modulo(const Sublattice& l, const Vec& v);

/** |det| of the basis of a full-rank lattice, i.e. its index in Z^n. */
Int covolume(const Sublattice& l);

}  // namespace tropfan
