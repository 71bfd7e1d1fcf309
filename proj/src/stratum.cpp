#include "c4gb/stratum.hpp"

namespace c4gb {

StratumReport stratum_report(const StandardSet& delta) {
    if (delta.is_empty()) throw DimensionMismatch("stratum report needs a nonempty staircase");
    StratumReport r;
    r.delta = delta;
    for (int j = 1; j <= delta.dim(); ++j) r.dimension += static_cast<int>(delta.project(j).size());
    r.irreducible_components = decomposition_number(delta);
    r.connected_components = r.irreducible_components;
    r.caveat =
        "counts apply to the stratum of families of distinct points; the full stratum "
        "may have additional components of other dimensions";
    return r;
}

DimensionBound dimension_vs_nr(const StandardSet& delta) {
    DimensionBound b;
    for (int j = 1; j <= delta.dim(); ++j) b.projection_sum += static_cast<int>(delta.project(j).size());
    b.nr = delta.dim() * static_cast<int>(delta.size());
    b.within = b.projection_sum <= b.nr;
    return b;
}

}  // namespace c4gb
