#pragma once

#include "tilepack/lattice.hpp"

namespace tilepack {

enum class CaseTag { Dense, Commensurable, Intermediate };

const char* case_name(CaseTag tag);

// Change of coordinates t carrying the closure of L + M onto Z^m x R^n.
// The first m rows of t are a basis of the annihilator lattice
// W = L* cap M* (as row functionals); the remaining rows are standard
// coordinate rows picked by greedy rank extension.
struct ClosureDecomposition {
    Matrix t;
    Matrix t_inverse;
    long m = 0; // discrete directions
    long n = 0; // dense directions
    Matrix w_basis; // dim x m
    CaseTag case_tag = CaseTag::Commensurable;
};

ClosureDecomposition closure_decomposition(const Lattice& l, const Lattice& m_lat);

struct UnitNormalization {
    Matrix s; // basis(l)^-1
    Lattice l_image;
    Lattice m_image;
};

UnitNormalization normalize_to_unit_lattice(const Lattice& l, const Lattice& m_lat);

} // namespace tilepack
