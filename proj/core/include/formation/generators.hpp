/*
 * seed-deterministic instance generators
 */
#pragma once

#include <cstdint>
#include <random>

#include "formation/io.hpp"

namespace formation {

// Unbiased draw from [0, bound) by rejection; the raw engine output is
// reduced by hand so results are identical across standard libraries.
std::uint32_t uniform_below(std::mt19937& rng, std::uint32_t bound);

// Full cols x rows grid with 2*agents distinct cells sampled for starts and
// goals. TooCrowded when the grid cannot hold them.
InstanceFile gen_random(int cols, int rows, int agents, std::uint64_t seed);

// Same, with `holes` cells removed first; hole patterns that disconnect the
// grid are resampled (bounded attempts).
InstanceFile gen_random_holed(int cols, int rows, int holes, int agents, std::uint64_t seed);

// Two stars joined by a corridor: agents start on the leaves of one star and
// finish on the leaves of the other, every start-goal distance is ell, and
// all transfers funnel through the corridor one behind another. The planner's
// makespan meets agents + ell - 1 exactly.
InstanceFile gen_tight(int agents, int ell);

}  // namespace formation
