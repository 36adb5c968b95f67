#include "tilepack/lattice.hpp"

#include "tilepack/errors.hpp"

namespace tilepack {

Lattice::Lattice(Matrix basis, long field_d_hint) : dim_(basis.rows()), basis_(std::move(basis)) {
    if (basis_.cols() > dim_) throw DimensionError("lattice basis has more columns than the dimension");
    field_d_ = basis_.field_d();
    if (field_d_hint != 0) {
        if (field_d_ != 0 && field_d_ != field_d_hint)
            throw FieldError("lattice field tag disagrees with hint");
        field_d_ = field_d_hint;
    }
    if (rank() == 0) {
        covol_sq_ = FieldElement(1);
        covol_ = FieldElement(1);
        return;
    }
    Matrix gram = basis_.transpose() * basis_;
    covol_sq_ = gram.determinant();
    if (covol_sq_.sign() <= 0) throw GeometryError("lattice basis columns are linearly dependent");
    if (full_rank())
        covol_ = basis_.determinant().abs();
    else
        covol_ = field_sqrt(covol_sq_, field_d_);
}

Lattice Lattice::standard(long dim) { return Lattice(Matrix::identity(dim)); }

Lattice Lattice::trivial(long dim) { return Lattice(Matrix(dim, 0)); }

Lattice Lattice::from_int(const IntMatrix& basis, long field_d_hint) {
    return Lattice(Matrix::from_int(basis), field_d_hint);
}

FieldElement Lattice::covolume() const {
    if (!covol_)
        throw GeometryError("covolume of this sublattice is not representable in the working field");
    return *covol_;
}

bool Lattice::has_integer_basis() const {
    for (long i = 0; i < basis_.rows(); ++i)
        for (long j = 0; j < basis_.cols(); ++j)
            if (!basis_.at(i, j).is_integer()) return false;
    return true;
}

std::optional<std::vector<Integer>> lattice_membership(const Lattice& lat, const FVec& v) {
    if (static_cast<long>(v.size()) != lat.dim()) throw DimensionError("membership: vector dimension mismatch");
    if (lat.rank() == 0) {
        for (const auto& x : v)
            if (!x.is_zero()) return std::nullopt;
        return std::vector<Integer>{};
    }
    auto x = lat.basis().solve(v);
    if (!x) return std::nullopt;
    std::vector<Integer> k(x->size());
    for (std::size_t i = 0; i < x->size(); ++i) {
        if (!(*x)[i].is_integer()) return std::nullopt;
        k[i] = (*x)[i].rat().get_num();
    }
    return k;
}

Lattice lattice_dual(const Lattice& lat) {
    if (!lat.full_rank()) throw GeometryError("dual requires a full-rank lattice");
    return Lattice(lat.basis().inverse().transpose(), lat.field_d());
}

Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw DimensionError("intersection: dimension mismatch");
    long d = a.dim(), ra = a.rank(), rb = b.rank();
    long tag = a.field_d() != 0 ? a.field_d() : b.field_d();
    if (a.field_d() != 0 && b.field_d() != 0 && a.field_d() != b.field_d())
        throw FieldError("intersection: lattices live in different fields");
    if (ra == 0 || rb == 0) return Lattice::trivial(d);

    // Solve basis_a u = basis_b v over Z by splitting each field equation
    // into its rational and sqrt(D) components and clearing denominators.
    std::vector<std::vector<Rational>> rows;
    rows.reserve(2 * d);
    for (long i = 0; i < d; ++i) {
        std::vector<Rational> row_r(ra + rb), row_s(ra + rb);
        for (long j = 0; j < ra; ++j) {
            row_r[j] = a.basis().at(i, j).rat();
            row_s[j] = a.basis().at(i, j).coeff();
        }
        for (long j = 0; j < rb; ++j) {
            row_r[ra + j] = -b.basis().at(i, j).rat();
            row_s[ra + j] = -b.basis().at(i, j).coeff();
        }
        rows.push_back(std::move(row_r));
        rows.push_back(std::move(row_s));
    }
    IntMatrix sys(2 * d, ra + rb);
    for (long i = 0; i < 2 * d; ++i) {
        Integer lcm(1);
        for (const auto& q : rows[i]) {
            Integer g;
            mpz_lcm(g.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
            lcm = g;
        }
        for (long j = 0; j < ra + rb; ++j) {
            Rational scaled = rows[i][j] * Rational(lcm);
            sys.at(i, j) = scaled.get_num(); // denominator is now 1
        }
    }
    IntMatrix ker = integer_kernel(sys);
    if (ker.cols() == 0) return Lattice::trivial(d);

    // u-parts of the kernel give integer coordinates of the intersection in a;
    // canonicalize them by HNF before mapping through basis_a.
    IntMatrix u_part(ra, ker.cols());
    for (long i = 0; i < ra; ++i)
        for (long j = 0; j < ker.cols(); ++j) u_part.at(i, j) = ker.at(i, j);
    HnfResult red = hnf(u_part);
    IntMatrix coeffs(ra, red.rank);
    for (long i = 0; i < ra; ++i)
        for (long j = 0; j < red.rank; ++j) coeffs.at(i, j) = red.h.at(i, j);
    Matrix basis = a.basis() * Matrix::from_int(coeffs);
    return Lattice(std::move(basis), tag);
}

Rational sublattice_index(const Lattice& sub, const Lattice& super_) {
    if (sub.dim() != super_.dim()) throw DimensionError("index: dimension mismatch");
    if (sub.rank() != super_.rank()) throw ContainmentError("index requires equal ranks");
    long r = sub.rank();
    if (r == 0) return Rational(1);
    Matrix coords(r, r);
    for (long j = 0; j < r; ++j) {
        auto k = lattice_membership(super_, sub.basis().col(j));
        if (!k) throw ContainmentError("sublattice_index: basis vector lies outside the superlattice");
        for (long i = 0; i < r; ++i) coords.at(i, j) = FieldElement(Rational((*k)[i]));
    }
    FieldElement det = coords.determinant().abs();
    return det.rat();
}

FVec lattice_point(const Lattice& lat, const std::vector<Integer>& coeffs) {
    if (static_cast<long>(coeffs.size()) != lat.rank()) throw DimensionError("lattice_point: coefficient length");
    FVec v(lat.dim(), FieldElement(0));
    for (long j = 0; j < lat.rank(); ++j) {
        if (sgn(coeffs[j]) == 0) continue;
        FieldElement c{Rational(coeffs[j])};
        for (long i = 0; i < lat.dim(); ++i) v[i] += lat.basis().at(i, j) * c;
    }
    return v;
}

} // namespace tilepack
