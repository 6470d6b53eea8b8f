#pragma once

#include "tropfan/cone.hpp"
#include "tropfan/lattice.hpp"

#include <optional>

namespace tropfan {

struct StackyCone {
    Cone cone;
    Sublattice lattice;

    bool operator==(const StackyCone& o) const = default;
    std::strong_ordering operator<=>(const StackyCone& o) const;
};

/** Cone paired with Z^n intersected with its span. */
StackyCone with_full_lattice(const Cone& c);

/** The cone `face` with lattice induced from `parent` by restriction to the span. */
StackyCone induced(const StackyCone& parent, const Cone& face);

class StackyFan {
public:
    StackyFan() = default;

    /**
     * Cones are sorted canonically. With `close_faces`, every missing face of a listed cone is
     * added with the lattice induced from the highest-dimensional listed cone containing it.
     */
    StackyFan(int ambient, std::vector<StackyCone> cones, bool close_faces = true);

    int ambient() const { return ambient_; }
    const std::vector<StackyCone>& cones() const { return cones_; }

    /** Cones that are not a proper face of another cone. */
    std::vector<StackyCone> maximal_cones() const;

    const StackyCone* find(const Cone& c) const;

    bool operator==(const StackyFan& o) const = default;

private:
    int ambient_ = 0;
    std::vector<StackyCone> cones_;
};

struct Violation {
    std::string kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const StackyFan& fan);

bool support_member(const Vec& v, const StackyFan& fan);

/**
 * A relative-interior point of a part of c not covered by the union of `pieces`, or nullopt
 * when the pieces cover c. Exact: computed by iterated polyhedral subtraction.
 */
std::optional<Vec> uncovered_point(const Cone& c, const std::vector<Cone>& pieces);

bool support_contains_cone(const Cone& c, const StackyFan& fan);

std::vector<Cone> support_cones(const StackyFan& fan);

/** Equal supports; on failure a witness vector of one support outside the other. */
bool supports_equal(const StackyFan& a, const StackyFan& b, Vec* witness = nullptr);

bool is_complete(const StackyFan& fan);

bool is_subdivision(const StackyFan& fine, const StackyFan& coarse);

bool is_root_construction(const StackyFan& fine, const StackyFan& coarse);

struct FanMorphism {
    StackyFan source;
    StackyFan target;
};

ValidationReport validate_morphism(const FanMorphism& m);

bool is_representable(const FanMorphism& m);

bool is_proper(const FanMorphism& m);

/** Cells tau1 ∩ tau2 with lattices N_tau1 ∩ N_tau2 restricted to the cell. Supports must agree. */
StackyFan common_refinement(const StackyFan& a, const StackyFan& b);

/** Brute-force membership in the set S of lattice points: some cone contains v inside its lattice. */
bool s_member(const Vec& v, const StackyFan& fan);

}  // namespace tropfan
