#pragma once

#include "metriq/geometry.hpp"
#include "metriq/rng.hpp"

namespace metriq {

// Uniform interior point. Bounded domains use rejection from their bounding
// box; unbounded domains (half-space, sector, punctured plane) are sampled
// within radius 8 of the reference interior point, which loses no generality
// for the similarity-invariant quantities studied here.
Point sample_point(const Domain& d, SplitMix64& rng);

}  // namespace metriq
