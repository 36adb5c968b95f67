#pragma once

#include <variant>

#include "tilepack/body.hpp"
#include "tilepack/structure.hpp"
#include "tilepack/verify.hpp"

namespace tilepack {

// --- dense case ------------------------------------------------------------

struct GridParams {
    long n_grid = 0;             // N
    Rational side;               // s = 1/N + 1/N^2
    std::vector<Box> large_cells; // side-s cells inside the closed parallelepiped
};

// Smallest N >= 2 whose side-(1/N + 1/N^2) origin grid leaves at least N^d
// whole cells inside the closed fundamental parallelepiped of m_lat.
GridParams choose_grid_params(const Lattice& m_lat);

struct SumsetApprox {
    std::vector<Integer> l;        // integer vector
    std::vector<Integer> m_coeffs; // coordinates in m_lat
    long radius = 0;               // shell where the search succeeded
};

// Find l in Z^d and m in m_lat with |l + m - target|_inf < margin, searching
// m-coordinates over shells of increasing l-infinity radius.
SumsetApprox approximate_in_sumset(const Lattice& m_lat, const FVec& target,
                                   const FieldElement& margin, long search_cap);

struct DenseTrace {
    long n_grid = 0;
    Rational side;
    std::vector<Box> small_cells; // the N^d cells of [0,1)^d, side 1/N
    std::vector<Box> large_cells;
    std::vector<std::vector<Integer>> shifts_l;
    std::vector<std::vector<Integer>> shifts_m; // as m_lat coordinates
    FieldElement margin; // (s - 1/N)/2
};

// Ambient lattice is Z^d (dim taken from m_lat); callers normalize first.
std::pair<BodyF, DenseTrace> dense_construct(const Lattice& m_lat, long search_cap);

// --- commensurable case ------------------------------------------------------

struct CommensurableTrace {
    Lattice h;            // L cap M
    Integer group_order;  // |Z^d / H|
    std::vector<std::vector<Integer>> g_reps; // points of M, one per class of Z^d/L
    std::vector<std::vector<Integer>> h_reps; // points of L, one per class of Z^d/M
    std::vector<std::vector<Integer>> e_points;
};

// Requires canonical coordinates: L + M = Z^d with integer bases and
// covolume(L) <= covolume(M).
std::pair<BodyF, CommensurableTrace> commensurable_construct(const Lattice& l, const Lattice& m_lat);

// --- intermediate case -------------------------------------------------------

struct IntermediateTrace {
    Lattice l1, l2, m1, m2;
    Lattice l2_prime, m2_prime;
    std::vector<FVec> j1, k1; // points of L1 / M1
    std::vector<FVec> j2, k2; // points of L2' / M2'
    std::vector<std::size_t> pairing_l; // J1[i] -> J2[pairing_l[i]]
    std::vector<std::size_t> pairing_m; // K1[i] -> K2[pairing_m[i]]
    BodyF e_body;                       // n-dimensional, in the last-n coordinates
};

// Requires canonical coordinates with closure Z^m x R^n, 1 <= m_split <= d-1,
// and covolume(l) < covolume(m_lat).
std::pair<BodyF, IntermediateTrace> intermediate_construct(const Lattice& l, const Lattice& m_lat,
                                                           long m_split, long search_cap);

// --- dispatcher ----------------------------------------------------------------

struct ConstructionResult {
    CaseTag case_tag = CaseTag::Dense;
    long m = 0, n = 0;
    BodyF body;              // canonical frame, certified
    Lattice l_canonical, m_canonical;
    Matrix to_canonical;     // map applied to the input lattices
    std::variant<DenseTrace, CommensurableTrace, IntermediateTrace> trace;
    PackingReport report_l;  // tiling certificate against l_canonical
    PackingReport report_m;  // packing certificate against m_canonical
};

ConstructionResult construct(const Lattice& l, const Lattice& m_lat, long search_cap = 64);

} // namespace tilepack
