////////////////////////////////////////////////////////////////////////////////
// sampling.hh
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <optional>

#include "trilam/numerics.hh"
#include "trilam/regions.hh"

namespace trilam {

// Seeded rejection sampler: draws (m2, rho, m1) uniformly over the parameter
// polyhedron until the draw classifies into `target`. Returns nothing if the
// attempt budget runs out (thin regions need a few hundred draws).
std::optional<CompositeSpec> sample_spec_in_region(Rng &rng, Region target,
                                                   const Material &mat1, const Material &mat2,
                                                   int max_attempts = 20000);

}  // namespace trilam
