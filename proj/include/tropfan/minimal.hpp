#pragma once

#include "tropfan/fan.hpp"

#include <optional>

namespace tropfan {

/**
 * Canonical coarsest presentation of the set S of a stacky fan: finitely many cones, each
 * carrying one lattice, whose union with lattices reproduces S. Two fans with the same S
 * produce identical MinimalFan values.
 */
struct MinimalFan {
    int ambient = 0;
    std::vector<StackyCone> pieces;

    bool operator==(const MinimalFan& o) const = default;
};

/** A lattice together with the cones it colors. */
struct ColorClass {
    Sublattice lattice;
    std::vector<Cone> cones;
    bool operator==(const ColorClass& o) const = default;
};

struct SublatticeColoring {
    int ambient = 0;
    std::vector<ColorClass> colors;  // sorted by lattice
    bool operator==(const SublatticeColoring& o) const = default;
};

MinimalFan minimal_fan(const StackyFan& fan);

/** Minimal presentation of the set described by arbitrary pieces (cone with lattice). */
MinimalFan minimal_from_pieces(int ambient, const std::vector<StackyCone>& pieces);

/**
 * Same set S. When the sets differ and `witness` is given, it receives a lattice point lying
 * in exactly one of them.
 */
bool birationally_equivalent(const StackyFan& a, const StackyFan& b, Vec* witness = nullptr);

SublatticeColoring to_coloring(const StackyFan& fan);

/** Groups the pieces of a minimal fan by lattice. */
SublatticeColoring coloring_of(const MinimalFan& m);

MinimalFan from_coloring(const SublatticeColoring& c);

bool minimal_set_member(const Vec& v, const MinimalFan& m);

bool coloring_is_complete(const MinimalFan& m);

/** Greedily merges adjacent same-lattice full-dimensional pieces whose union is a pointed cone. */
std::vector<StackyCone> merge_adjacent(int ambient, std::vector<StackyCone> pieces);

/** Lattice point of `cell` lying in exactly one of the two lattices, which must differ. */
Vec lattice_gap_witness(const Cone& cell, const Sublattice& la, const Sublattice& lb);

/** Order on witnesses: L1 norm, then lexicographic. */
bool witness_less(const Vec& a, const Vec& b);

}  // namespace tropfan
