#pragma once

#include "tilepack/body.hpp"
#include "tilepack/lattice.hpp"

namespace tilepack {

struct OverlapWitness {
    std::size_t box_a = 0;
    std::size_t box_b = 0;
    std::vector<Integer> coeffs; // lattice coordinates of the offending translate
};

struct PackingReport {
    bool is_packing = false;
    bool is_tiling = false;
    FieldElement body_volume;
    FieldElement lattice_covolume;
    std::vector<OverlapWitness> violations;
};

// Exact packing check: enumerates every lattice translate that can touch the
// body (bounds from exact solves of the bounding-box corners) and tests all
// box pairs with half-open interval comparisons.
PackingReport verify_packing(const BodyF& f, const Lattice& lat);

// Packing plus exact equality of body volume and lattice covolume.
PackingReport verify_tiling(const BodyF& f, const Lattice& lat);

// Independent multiplicity oracle: for each point x, the number of lattice
// vectors t with x - t inside the body.
std::vector<long> sample_multiplicity(const BodyF& f, const Lattice& lat,
                                      const std::vector<FVec>& points);

FieldElement body_volume(const BodyF& f);

} // namespace tilepack
