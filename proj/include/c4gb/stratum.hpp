#pragma once

#include <string>

#include "c4gb/decomposition.hpp"

namespace c4gb {

// Formula-level invariants of the stratum of reduced point families with a
// fixed staircase. The caveat records that the ambient stratum (dropping the
// distinct-points condition) may have strictly more components; that count is
// out of reach of these formulas.
struct StratumReport {
    StandardSet delta;
    int dimension = 0;  // sum over j of #q_j(delta)
    unsigned long long irreducible_components = 0;
    unsigned long long connected_components = 0;
    std::string caveat;
};

StratumReport stratum_report(const StandardSet& delta);

struct DimensionBound {
    int projection_sum = 0;  // sum over j of #q_j(delta)
    int nr = 0;              // dim * size
    bool within = false;     // projection_sum <= nr, always expected
};

DimensionBound dimension_vs_nr(const StandardSet& delta);

}  // namespace c4gb
