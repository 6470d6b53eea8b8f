#pragma once

#include "tropfan/minimal.hpp"

#include <string>

namespace tropfan {

struct RenderOptions {
    long radius = 4;
    int unit = 40;  // pixels per lattice step
};

/** Palette entry i; lattices get colors in (covolume, basis) order. */
std::string palette_color(std::size_t i);

/**
 * Deterministic SVG of rank-2 pieces: shaded cones, rays as arrows, lattice points of S in the
 * color of their lattice and other points as faint dots. DimensionError unless rank 2.
 */
std::string render_svg(const std::vector<StackyCone>& pieces, int ambient, const RenderOptions& opt = {});

std::string render_svg(const StackyFan& fan, const RenderOptions& opt = {});
std::string render_svg(const MinimalFan& fan, const RenderOptions& opt = {});

}  // namespace tropfan
