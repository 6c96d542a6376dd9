#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "negabeta/numerics.hpp"
#include "negabeta/order.hpp"

namespace negabeta::tools {

/// One lap of T^n: the cylinder [x0, x1] of `word`, on which T^n is affine
/// with slope (-beta)^n. y0, y1 are the one-sided limits at the ends.
struct LapSegment {
    Word word;
    FieldElement x0, x1;
    FieldElement y0, y1;
};

struct LapPartition {
    std::size_t n = 0;
    std::vector<LapSegment> laps;
    /// Integer beta: the point l_beta with digit beta, a fixed point of every T^n.
    bool degenerate_left = false;
};

/// Laps of T^n, left to right. Refines the cylinders one digit at a time by
/// cutting images at the discontinuities of T. n <= 8.
LapPartition lap_partition(const BetaSpec& beta, std::size_t n);

/// Graph of T^n over I_beta x I_beta, one <line> per lap.
std::string render_svg(const BetaSpec& beta, const LapPartition& p, int size = 480);

/// x0,y0,x1,y1,word per lap.
std::string render_csv(const LapPartition& p);

} // namespace negabeta::tools
