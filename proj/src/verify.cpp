#include "tilepack/verify.hpp"

#include "tilepack/enumerate.hpp"
#include "tilepack/errors.hpp"

namespace tilepack {

FieldElement body_volume(const BodyF& f) { return f.volume(); }

// Integer coordinate bounds for { k : basis k in [lo, hi] }: the preimage is
// a parallelepiped, so per-coordinate extremes occur at box corners.
static void coeff_bounds(const Matrix& basis_inv, const FVec& lo, const FVec& hi,
                         std::vector<Integer>& k_lo, std::vector<Integer>& k_hi) {
    const long d = static_cast<long>(lo.size());
    FVec mins, maxs;
    std::vector<FieldElement> corner(d);
    for (long mask = 0; mask < (1L << d); ++mask) {
        for (long i = 0; i < d; ++i) corner[i] = (mask >> i) & 1 ? hi[i] : lo[i];
        FVec y = basis_inv.apply(corner);
        if (mask == 0) {
            mins = y;
            maxs = y;
        } else {
            for (long i = 0; i < d; ++i) {
                if (y[i] < mins[i]) mins[i] = y[i];
                if (y[i] > maxs[i]) maxs[i] = y[i];
            }
        }
    }
    k_lo.resize(d);
    k_hi.resize(d);
    for (long i = 0; i < d; ++i) {
        k_lo[i] = -(-mins[i]).floor(); // ceil
        k_hi[i] = maxs[i].floor();
    }
}

static void check_inputs(const BodyF& f, const Lattice& lat) {
    if (f.frame != Frame::Canonical) throw GeometryError("verification requires the canonical frame");
    if (f.dim != lat.dim()) throw DimensionError("body and lattice dimensions differ");
    if (!lat.full_rank()) throw GeometryError("verification requires a full-rank lattice");
}

PackingReport verify_packing(const BodyF& f, const Lattice& lat) {
    check_inputs(f, lat);
    PackingReport rep;
    rep.body_volume = f.volume();
    rep.lattice_covolume = lat.covolume();

    const long d = f.dim;
    const std::size_t nb = f.boxes.size();
    std::vector<Integer> zero(d, Integer(0));
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = i + 1; j < nb; ++j)
            if (boxes_overlap(f.boxes[i], f.boxes[j])) rep.violations.push_back({i, j, zero});

    // pair-first enumeration: box_i + t meets box_j only for lattice t inside
    // the open box (lo_j - hi_i, hi_j - lo_i), which holds a handful of points
    Matrix inv = lat.basis().inverse();
    std::vector<Integer> k_lo, k_hi;
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            coeff_bounds(inv, fvec_sub(f.boxes[j].lo, f.boxes[i].hi),
                         fvec_sub(f.boxes[j].hi, f.boxes[i].lo), k_lo, k_hi);
            for_each_box_vector(k_lo, k_hi, [&](const std::vector<Integer>& k) {
                bool is_zero = true;
                for (const auto& x : k)
                    if (sgn(x) != 0) {
                        is_zero = false;
                        break;
                    }
                if (is_zero) return true;
                FVec shift = lattice_point(lat, k);
                if (boxes_overlap_shifted(f.boxes[i], shift, f.boxes[j]))
                    rep.violations.push_back({i, j, k});
                return true;
            });
        }

    rep.is_packing = rep.violations.empty();
    rep.is_tiling = rep.is_packing && rep.body_volume == rep.lattice_covolume;
    return rep;
}

PackingReport verify_tiling(const BodyF& f, const Lattice& lat) { return verify_packing(f, lat); }

std::vector<long> sample_multiplicity(const BodyF& f, const Lattice& lat,
                                      const std::vector<FVec>& points) {
    check_inputs(f, lat);
    std::vector<long> out;
    out.reserve(points.size());
    if (f.boxes.empty()) {
        out.assign(points.size(), 0);
        return out;
    }
    Box bb = f.bounding_box();
    Matrix inv = lat.basis().inverse();
    for (const auto& x : points) {
        if (static_cast<long>(x.size()) != f.dim) throw DimensionError("sample point dimension mismatch");
        std::vector<Integer> k_lo, k_hi;
        coeff_bounds(inv, fvec_sub(x, bb.hi), fvec_sub(x, bb.lo), k_lo, k_hi);
        long count = 0;
        for_each_box_vector(k_lo, k_hi, [&](const std::vector<Integer>& k) {
            FVec shifted = fvec_sub(x, lattice_point(lat, k));
            for (const auto& b : f.boxes)
                if (b.contains(shifted)) {
                    ++count;
                    break; // boxes are disjoint: at most one contains the point
                }
            return true;
        });
        out.push_back(count);
    }
    return out;
}

} // namespace tilepack
