#pragma once

#include <random>

#include "c4gb/connect4gb.hpp"
#include "c4gb/pointset.hpp"

namespace c4gb {

// All randomness in the library and CLI flows through one seeded engine.
using Rng = std::mt19937_64;

// Grown corner by corner; every staircase of the target size is reachable.
StandardSet random_staircase(Rng& rng, int dim, int size);

PointSet random_point_set(Rng& rng, FieldDesc field, int dim, int count, int coordinate_range);

// Monic univariate x^deg + lower terms with small integer coefficients,
// wrapped as the basis of its principal ideal.
ReducedGB random_monic_univariate(Rng& rng, FieldDesc field, int degree);

// A mix of summand constructions (vanishing ideals of random planar points,
// arbitrary monic univariate ideals, intersections of lower instances), all
// independent of the interpolation construction under test.
SlicedInstance random_instance(Rng& rng, FieldDesc field, int n, int max_total_size);

}  // namespace c4gb
