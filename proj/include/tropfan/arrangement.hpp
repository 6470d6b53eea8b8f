#pragma once

#include "tropfan/cone.hpp"
#include "tropfan/fan.hpp"

#include <functional>
#include <optional>

namespace tropfan {

/** The 2^n closed coordinate orthants of Q^n. */
std::vector<Cone> orthants(int n);

/**
 * Chambers of the hyperplanes {h.x = 0} inside each domain cone: the full-dimensional
 * pieces obtained by cutting every domain cone with every hyperplane that crosses it.
 */
std::vector<Cone> chambers(const std::vector<Cone>& domain, const Mat& hyperplanes);

/** Lattice of the region entered by p + eps*d as eps -> 0+, or nullopt outside the region. */
using GermLabel = std::function<std::optional<Sublattice>(const Vec& p, const Vec& d)>;

/** Normalized hyperplanes carrying a chamber wall whose two sides get different labels. */
Mat essential_hyperplanes(const std::vector<Cone>& chambers, const GermLabel& label);

/** Chambers paired with the label of their interior; unlabelled chambers are dropped. */
std::vector<StackyCone> label_chambers(const std::vector<Cone>& chambers, const GermLabel& label);

/** Distinct normalized facet hyperplanes of the given cones. */
Mat facet_hyperplanes(const std::vector<Cone>& cones);

}  // namespace tropfan
