#include "tilepack/nofd.hpp"

#include "tilepack/enumerate.hpp"
#include "tilepack/errors.hpp"

namespace tilepack {

Integer count_lattice_points_in_ball(const Lattice& m_lat, const Rational& radius) {
    const long d = m_lat.dim();
    Matrix inv = m_lat.basis().inverse();
    FieldElement rad{radius};
    FVec lo(d, -rad), hi(d, rad);

    // coefficient bounds from the corners of the ball, rounded outward
    FVec mins, maxs;
    FVec corner(d);
    for (long mask = 0; mask < (1L << d); ++mask) {
        for (long i = 0; i < d; ++i) corner[i] = (mask >> i) & 1 ? hi[i] : lo[i];
        FVec y = inv.apply(corner);
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
    std::vector<Integer> k_lo(d), k_hi(d);
    for (long i = 0; i < d; ++i) {
        k_lo[i] = -(-mins[i]).floor();
        k_hi[i] = maxs[i].floor();
    }

    Integer count = 0;
    for_each_box_vector(k_lo, k_hi, [&](const std::vector<Integer>& k) {
        FVec p = lattice_point(m_lat, k);
        for (long i = 0; i < d; ++i)
            if ((p[i].abs() - rad).sign() > 0) return true;
        count += 1;
        return true;
    });
    return count;
}

UnboundednessWitness witness_unbounded(const Lattice& l, const Lattice& m_lat, const Rational& r) {
    if (l.dim() != m_lat.dim()) throw DimensionError("lattice dimensions differ");
    if (!l.full_rank() || !m_lat.full_rank()) throw GeometryError("full-rank lattices required");
    if (!(l.basis() == Matrix::identity(l.dim())))
        throw GeometryError("witness search expects L = Z^d; normalize first");
    if (sgn(r) < 0) throw GeometryError("radius r must be nonnegative");
    const long d = l.dim();

    if (lattice_intersection(l, m_lat).rank() != 0)
        throw NontrivialIntersectionError("L and M intersect beyond the origin");
    if ((m_lat.covolume() - FieldElement(1)).sign() <= 0)
        throw VolumeOrderError("witness requires covolume(M) > 1");

    Rational big_r = r > 1 ? r : Rational(1);
    for (int step = 0; step < 256; ++step, big_r *= 2) {
        Integer floor_r = rational_floor(big_r);
        Integer count_n = 2 * floor_r + 1;
        mpz_pow_ui(count_n.get_mpz_t(), count_n.get_mpz_t(), static_cast<unsigned long>(d));
        Integer count_m = count_lattice_points_in_ball(m_lat, big_r + r);
        if (count_n > count_m) return UnboundednessWitness{r, big_r, count_n, count_m};
    }
    throw GeometryError("internal: witness search exceeded the doubling budget");
}

} // namespace tilepack
