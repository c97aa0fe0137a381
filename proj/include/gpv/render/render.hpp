#pragma once

#include <string>
#include <vector>

#include "gpv/game/board.hpp"
#include "gpv/poly/polygon.hpp"
#include "gpv/tiling/certificate.hpp"

namespace gpv::render {

// Drawing parameters shared by every figure. All figure functions are pure:
// identical inputs produce byte-identical documents.
struct Canvas {
    int unit = 32;    // pixels per lattice unit; must be positive
    int margin = 1;   // blank border around the drawing, in lattice units
    // Fill colors cycled across tile placements; must be non-empty.
    std::vector<std::string> palette = {
        "#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
        "#59a14f", "#edc948", "#b07aa1", "#9c755f",
    };
};

// The polygon outline as one closed path, viewport sized to the bounding
// box plus the margin.
std::string polygon_figure(const poly::Polygon& p, const Canvas& canvas = {});

// A repeats-by-repeats patch of the certified tiling, one unit cell per
// rectangle, colors cycled per copy so touching copies usually differ.
// Translation certificates replicate the polygon along u and v; periodic
// certificates replicate the whole torus. Throws std::invalid_argument when
// the certificate does not verify against the polygon or repeats < 1.
std::string tiling_figure(const tiling::TilingCertificate& cert,
                          const poly::Polygon& p, int repeats,
                          const Canvas& canvas = {});

// The row game: one square per cell, a filled circle per counter. A
// zero-length board renders the margin only.
std::string board_figure(const game::Board& board, const Canvas& canvas = {});

}  // namespace gpv::render
