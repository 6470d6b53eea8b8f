#pragma once

#include "tropfan/abelian.hpp"
#include "tropfan/cone.hpp"
#include "tropfan/fan.hpp"
#include "tropfan/lattice.hpp"
#include "tropfan/minimal.hpp"

#include <functional>
#include <random>
#include <string>

namespace testsupport {

using namespace tropfan;

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
Vec random_vec(Rng& rng, int n, long lo, long hi);

/** Calls f on every integer point of [-r, r]^n. */
void for_each_point(int n, long r, const std::function<void(const Vec&)>& f);

/** Membership in the group spanned by linearly independent generators, via rational coordinates. */
bool oracle_member(const Mat& independent_gens, const Vec& v);

StackyCone sc(int n, const Mat& rays, const Mat& lattice);
StackyCone sc_full(int n, const Mat& rays);

/** Fan with the given maximal cones, closed under faces. */
StackyFan fan_of(int n, const std::vector<StackyCone>& maximal);

StackyFan fig_fan();
StackyFan fig_fan_bad_red();
StackyFan p2_fan();
StackyFan quadrants_fan();
StackyFan quadrant_fan();
/** Rays e1, e2, -e2 and -e1 + a e2. */
StackyFan hirzebruch(long a);
StackyFan split_quadrant_fan();

/**
 * Random simplicial fan of the given rank. Every maximal cone carries the lattice generated by
 * multiples k_rho * u_rho of its primitive rays, which makes face lattices compatible.
 */
struct RandomFan {
    int rank = 0;
    Mat rays;
    std::vector<long> multiplicity;
    std::vector<std::vector<int>> maximal;  // ray indices
};
RandomFan random_fan(Rng& rng, int rank, bool complete);
StackyFan build_fan(const RandomFan& f);

/** Root construction of order 2 along ray i: k_i doubles on every cone containing it. */
RandomFan root_along(const RandomFan& f, int ray);

/** Stellar subdivision at a random interior lattice point of a random maximal cone. */
StackyFan stellar(Rng& rng, const StackyFan& f);

/** Brute-force S-set membership: some cone contains v and its lattice contains v. */
bool oracle_s_member(const StackyFan& f, const Vec& v);

/** Base ray in Z^1 with g = 1 and Q = [ell]; torus factor of rank r. */
PolarizedBase tate_base(long ell = 1, int r = 0);

/**
 * Translation-invariant fan over the Tate base whose cells are cone((q_i,p_i),(q_{i+1},p_{i+1}))
 * for consecutive slopes p/q running from 0/1 to 1/1, each with its own lattice.
 */
struct TateFan {
    std::vector<std::pair<long, long>> slopes;  // (p, q)
    std::vector<Mat> lattices;                  // one per cell
};
AVStackyFan build_tate(const TateFan& t, const PolarizedBase& base);
/**
 * Random slopes; with roots, ray classes other than the base ray get multiplicity 1 or 2 and cells
 * the lattice they generate.
 */
TateFan random_tate(Rng& rng, bool allow_roots);
/** Splits a random cell at the mediant slope, keeping its lattice. */
TateFan refine_tate(Rng& rng, const TateFan& t);

AVStackyFan two_arc();
AVStackyFan three_arc();
AVStackyFan one_arc();
AVStackyFan single_arc();
AVStackyFan two_arc_index2();
AVStackyFan base_only(const PolarizedBase& base);

/** Some translate T_m c with |m|_inf <= bound contains x. */
bool oracle_av_covered(const AVStackyFan& fan, const Vec& x, long bound);

/** S-set membership by translating every representative with |m|_inf <= bound. */
bool oracle_av_s_member(const AVStackyFan& fan, const Vec& x, long bound);

std::string read_file(const std::string& path);

}  // namespace testsupport
