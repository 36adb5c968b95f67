#pragma once

#include "tilepack/lattice.hpp"

namespace tilepack {

// Counting certificate that no bounded common fundamental domain of
// l-infinity radius r can exist: a radius R where the integer points of
// B_R outnumber the M-points of B_{R+r}.
struct UnboundednessWitness {
    Rational r;     // hypothesized bound, F inside [-r, r]^d
    Rational big_r; // witness radius R
    Integer count_n; // |Z^d cap B_R|
    Integer count_m; // |M cap B_{R+r}|
};

// Requires l = Z^d (canonical form), L cap M = {0}, covolume(M) > 1.
// Doubles R starting from max(r, 1) until count_n > count_m.
UnboundednessWitness witness_unbounded(const Lattice& l, const Lattice& m_lat, const Rational& r);

// Exact |M cap [-radius, radius]^d| by coefficient enumeration.
Integer count_lattice_points_in_ball(const Lattice& m_lat, const Rational& radius);

} // namespace tilepack
