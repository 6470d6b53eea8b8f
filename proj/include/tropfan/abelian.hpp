#pragma once

#include "tropfan/fan.hpp"

#include <optional>
#include <utility>

namespace tropfan {

/**
 * Base cone sigma0 in Z^b with a symmetric pairing Q on M = Z^g valued in the dual lattice of
 * the base, and a torus factor of rank r. Points of the total space are (n, n', n'') in
 * Z^b x Z^g x Z^r.
 */
struct PolarizedBase {
    StackyCone base;
    int g = 0;
    std::vector<std::vector<Vec>> q;  // g x g entries, each in Z^b
    int torus_rank = 0;

    int b() const { return base.cone.ambient(); }
    int ambient() const { return b() + g + torus_rank; }
    bool operator==(const PolarizedBase& o) const = default;
};

/** Matrix B(n)_{ij} = <q_ij, n>. */
Mat form_at(const PolarizedBase& base, const Vec& n);

bool is_positive_semidefinite(const QMat& m);

ValidationReport validate_form(const PolarizedBase& base);

/** B(n_rho) positive definite for every ray of the base cone. */
bool fiberwise_definite(const PolarizedBase& base);

enum class Admissibility { Admissible, NotInSpan, OutsideBase };

/** n' must lie in the rational span of the columns of B(n), with n in sigma0. */
Admissibility admissible_point(const Vec& n, const Vec& nprime, const PolarizedBase& base);

/**
 * Homomorphism phi: M -> M_tau over a test cone tau in Z^t with structure map f: Z^t -> Z^b.
 * phi is the t x g matrix with phi(m) = phi * m.
 */
struct TestHom {
    Cone tau;
    Mat structure_map;  // b x t
    Mat phi;            // t x g
};

/** Decides the two-sided bounding condition, ray by ray, through kernel containment. */
bool admissible_hom(const TestHom& h, const PolarizedBase& base);

/** The alternative description: admissible_point on (f(n_rho), phi^T n_rho) for every ray. */
bool admissible_hom_raywise(const TestHom& h, const PolarizedBase& base);

/** Explicit (m1, m2) with Q_tau(m1, m) <= phi(m) <= Q_tau(m2, m), when one exists. */
std::optional<std::pair<Vec, Vec>> sandwich_witness(const TestHom& h, const PolarizedBase& base, const Vec& m);

bool is_sandwiched(const TestHom& h, const PolarizedBase& base, const Vec& m1, const Vec& m, const Vec& m2);

/** Matrix of T_m: (n, n', n'') -> (n, n' + B(n) m, n''). */
Mat translation_matrix(const PolarizedBase& base, const Vec& m);

StackyCone translate(const StackyCone& c, const Vec& m, const PolarizedBase& base);
Cone translate(const Cone& c, const Vec& m, const PolarizedBase& base);

/**
 * All m with c1 ∩ T_m c2 containing a point of nonzero base component, together with 0 when
 * c1 ∩ c2 is not the zero cone. Requires a fiberwise definite form.
 */
std::vector<Vec> candidate_translations(const Cone& c1, const Cone& c2, const PolarizedBase& base);

/** Some m with T_m(b) == a, if the two cones lie in one translation orbit. */
std::optional<Vec> orbit_translation(const Cone& a, const Cone& b, const PolarizedBase& base);

/** Representative cones of a translation-invariant stacky fan in Z^b x Z^g x Z^r. */
class AVStackyFan {
public:
    AVStackyFan() = default;
    AVStackyFan(PolarizedBase base, std::vector<StackyCone> cones, bool close_faces = true);

    const PolarizedBase& base() const { return base_; }
    const std::vector<StackyCone>& cones() const { return cones_; }
    bool operator==(const AVStackyFan& o) const = default;

private:
    PolarizedBase base_;
    std::vector<StackyCone> cones_;
};

/** Keeps the first cone (in canonical order) of every translation orbit. */
AVStackyFan normalize_orbits(const AVStackyFan& fan);

bool is_normalized(const AVStackyFan& fan);

ValidationReport validate_av_fan(const AVStackyFan& fan);

struct FaceMap {
    int source;
    int target;
    Vec m;  // T_m(source) is a face of target
};

struct QuotientComplex {
    PolarizedBase base;
    std::vector<StackyCone> cells;
    std::vector<FaceMap> face_maps;

    /** Number of cells in each dimension 0..max. */
    std::vector<int> cells_by_dimension() const;
};

/** Requires one representative per orbit (NormalizationError otherwise). */
QuotientComplex quotient_complex(const AVStackyFan& fan);

bool av_complete(const AVStackyFan& fan);

/** Same set S of lattice points; optional witness in exactly one of the two sets. */
bool av_bir_equivalent(const AVStackyFan& a, const AVStackyFan& b, Vec* witness = nullptr);

/** Canonical coarsening. Supported for a one-dimensional base cone; UnsupportedError otherwise. */
AVStackyFan av_minimal(const AVStackyFan& fan);

/** Standard basis of Z^r closed under the group generated by the given integer matrices. */
Mat symmetry_orbit(int r, const std::vector<Mat>& generators);

/** Complete fan on Z^r cut out by the hyperplanes x.s = 0; full lattices. */
StackyFan reference_subdivision(int r, const Mat& symmetry_vectors);

/**
 * Subdivision of sigma x R^r built over the faces of sigma: faces of dimension 0 carry the torus
 * fan, and a face F adds Conv(rho_F, tau) for the barycenter ray rho_F and every cone tau over
 * a proper face of F.
 */
StackyFan join_subdivision(const Cone& sigma, const StackyFan& torus_fan);

struct GraphEdge {
    int u;
    int v;
    Vec length;  // in the dual lattice of the base
};

struct MetricGraph {
    int vertices = 0;
    std::vector<GraphEdge> edges;
    StackyCone base;
};

/** Cycle pairing Q(c, c') = sum_e l(e) c_e c'_e in a spanning-tree cycle basis. */
PolarizedBase jacobian_form(const MetricGraph& graph);

/** Cycle basis used by jacobian_form, one integer vector over the edges per cycle. */
Mat cycle_basis(const MetricGraph& graph);

}  // namespace tropfan
