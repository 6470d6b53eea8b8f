#pragma once

#include "tropfan/abelian.hpp"
#include "tropfan/minimal.hpp"

#include <cstdint>

namespace tropfan {

/** Every integer point of [-radius, radius]^n lying in the set S, listed lexicographically. */
std::vector<Vec> s_enumerate(const StackyFan& fan, long radius);
std::vector<Vec> s_enumerate(const MinimalFan& fan, long radius);

/** Points of S over the box, found by translating every representative with |m|_inf <= bound. */
std::vector<Vec> s_enumerate(const AVStackyFan& fan, long radius, long bound);

struct CoverSample {
    long total = 0;
    long covered = 0;
    std::optional<Vec> first_uncovered;
};

/** Seeded uniform points of the box [-radius, radius]^n, tested against the support. */
CoverSample cover_sample(const StackyFan& fan, long count, std::uint64_t seed, long radius = 10);

/**
 * Seeded random admissible points (base coordinates from nonnegative ray combinations, fiber and
 * torus coordinates uniform), each tested against all translates in a slope-sized window.
 */
CoverSample cover_sample(const AVStackyFan& fan, long count, std::uint64_t seed, long radius = 10);

/** All |m|_inf <= bound with c1 ∩ T_m c2 meeting the nonzero-base locus, or m = 0 with c1 ∩ c2 ≠ 0. */
std::vector<Vec> translations_bruteforce(const Cone& c1, const Cone& c2, const PolarizedBase& base, long bound);

}  // namespace tropfan
