#include "trilam/sampling.hh"

namespace trilam {

std::optional<CompositeSpec> sample_spec_in_region(Rng &rng, Region target,
                                                   const Material &mat1, const Material &mat2,
                                                   int max_attempts) {
    for (int it = 0; it < max_attempts; ++it) {
        const double m2 = rng.uniform(0.15, 0.5);
        const double rho = rng.uniform(-1.0, 1.0);
        const double m1 = rng.uniform(1e-3, 1.0 - m2 - 1e-3);
        CompositeSpec spec{mat1, mat2, m1, m2, Loading{rho}};
        if (classify_region(spec) == target) return spec;
    }
    return std::nullopt;
}

}  // namespace trilam
