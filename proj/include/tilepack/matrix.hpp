#pragma once

#include <optional>
#include <vector>

#include "tilepack/field.hpp"
#include "tilepack/intmat.hpp"

namespace tilepack {

// Dense matrix over Q(sqrt(D)), row-major storage.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(long rows, long cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(long n);
    static Matrix from_int(const IntMatrix& m);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    FieldElement& at(long i, long j) { return e_[i * cols_ + j]; }
    const FieldElement& at(long i, long j) const { return e_[i * cols_ + j]; }

    FVec col(long j) const;
    void set_col(long j, const FVec& v);

    Matrix operator*(const Matrix& o) const;
    FVec apply(const FVec& v) const;
    Matrix transpose() const;

    FieldElement determinant() const;
    Matrix inverse() const; // throws GeometryError when singular
    long rank() const;

    // Unique exact solution of (*this) x = rhs for a full-column-rank system;
    // nullopt when the system is inconsistent.
    std::optional<FVec> solve(const FVec& rhs) const;

    // Largest field tag among entries; FieldError when tags conflict.
    long field_d() const;

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    long rows_, cols_;
    std::vector<FieldElement> e_;
};

FieldElement fvec_dot(const FVec& a, const FVec& b);
FVec fvec_add(const FVec& a, const FVec& b);
FVec fvec_sub(const FVec& a, const FVec& b);
FVec fvec_scale(const FVec& a, const FieldElement& c);

} // namespace tilepack
