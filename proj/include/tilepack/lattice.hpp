#pragma once

#include <optional>

#include "tilepack/matrix.hpp"

namespace tilepack {

// A lattice given by a basis: columns of a dim x rank matrix, linearly
// independent over R (checked through the Gram determinant).
class Lattice {
public:
    Lattice() : dim_(0), field_d_(0), covol_sq_(1), covol_(FieldElement(1)) {} // empty placeholder
    explicit Lattice(Matrix basis, long field_d_hint = 0);

    static Lattice standard(long dim);               // Z^dim
    static Lattice trivial(long dim);                // rank 0
    static Lattice from_int(const IntMatrix& basis, long field_d_hint = 0);

    long dim() const { return dim_; }
    long rank() const { return static_cast<long>(basis_.cols()); }
    bool full_rank() const { return rank() == dim_; }
    const Matrix& basis() const { return basis_; }
    long field_d() const { return field_d_; }

    // Gram determinant det(B^T B); the square of the rank-dimensional volume.
    const FieldElement& covolume_squared() const { return covol_sq_; }

    // Exact rank-dimensional volume. For full rank this is |det(basis)|;
    // lower-rank covolumes exist when sqrt(det Gram) lies in the field.
    FieldElement covolume() const;

    bool has_integer_basis() const;

private:
    long dim_;
    Matrix basis_;
    long field_d_;
    FieldElement covol_sq_;
    std::optional<FieldElement> covol_; // absent when not representable
};

// Integer coordinates k with basis * k == v, when they exist.
std::optional<std::vector<Integer>> lattice_membership(const Lattice& lat, const FVec& v);

// Dual of a full-rank lattice: inverse-transpose basis.
Lattice lattice_dual(const Lattice& lat);

// Exact intersection a cap b (possibly lower rank, possibly trivial).
Lattice lattice_intersection(const Lattice& a, const Lattice& b);

// Index [super : sub] for sub contained in super with equal rank;
// a positive integer, computed from coordinates of sub in super.
Rational sublattice_index(const Lattice& sub, const Lattice& super_);

FVec lattice_point(const Lattice& lat, const std::vector<Integer>& coeffs);

} // namespace tilepack
