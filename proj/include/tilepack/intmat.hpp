#pragma once

#include <vector>

#include "tilepack/field.hpp"

namespace tilepack {

// Dense matrix of arbitrary-precision integers, row-major storage.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), e_(rows * cols, Integer(0)) {}

    static IntMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Integer& at(long i, long j) { return e_[i * cols_ + j]; }
    const Integer& at(long i, long j) const { return e_[i * cols_ + j]; }

    std::vector<Integer> col(long j) const;
    bool col_is_zero(long j) const;

    void swap_cols(long a, long b);
    void negate_col(long j);
    void submul_col(long j, long k, const Integer& q); // col_j -= q * col_k

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Integer> apply(const std::vector<Integer>& v) const;

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    long rows_, cols_;
    std::vector<Integer> e_;
};

struct HnfResult {
    IntMatrix h; // column Hermite normal form of the input
    IntMatrix u; // unimodular, input * u == h
    long rank;   // number of nonzero columns of h (they come first)
};

// Column-style Hermite normal form: h is column echelon with pivots on
// strictly increasing rows, pivots positive, and in each pivot row the
// entries of the earlier columns reduced into [0, pivot).
HnfResult hnf(const IntMatrix& m);

// Z-basis of { x : m x = 0 }, as columns. May have zero columns count.
IntMatrix integer_kernel(const IntMatrix& m);

} // namespace tilepack
