#include "tilepack/matrix.hpp"

#include "tilepack/errors.hpp"

namespace tilepack {

Matrix Matrix::identity(long n) {
    Matrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = FieldElement(1);
    return m;
}

Matrix Matrix::from_int(const IntMatrix& src) {
    Matrix m(src.rows(), src.cols());
    for (long i = 0; i < src.rows(); ++i)
        for (long j = 0; j < src.cols(); ++j) m.at(i, j) = FieldElement(Rational(src.at(i, j)));
    return m;
}

FVec Matrix::col(long j) const {
    FVec c(rows_);
    for (long i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

void Matrix::set_col(long j, const FVec& v) {
    for (long i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("Matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (long j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

FVec Matrix::apply(const FVec& v) const {
    if (static_cast<long>(v.size()) != cols_) throw DimensionError("Matrix apply shape mismatch");
    FVec r(rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

FieldElement Matrix::determinant() const {
    if (rows_ != cols_) throw DimensionError("determinant of non-square matrix");
    Matrix a = *this;
    FieldElement det(1);
    for (long c = 0; c < cols_; ++c) {
        long piv = -1;
        for (long i = c; i < rows_; ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return FieldElement(0);
        if (piv != c) {
            for (long j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(c, j));
            det = -det;
        }
        det *= a.at(c, c);
        for (long i = c + 1; i < rows_; ++i) {
            if (a.at(i, c).is_zero()) continue;
            FieldElement f = a.at(i, c) / a.at(c, c);
            for (long j = c; j < cols_; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return det;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw DimensionError("inverse of non-square matrix");
    Matrix a = *this;
    Matrix inv = identity(rows_);
    for (long c = 0; c < cols_; ++c) {
        long piv = -1;
        for (long i = c; i < rows_; ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw GeometryError("singular matrix has no inverse");
        if (piv != c)
            for (long j = 0; j < cols_; ++j) {
                std::swap(a.at(piv, j), a.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        FieldElement p = a.at(c, c);
        for (long j = 0; j < cols_; ++j) {
            a.at(c, j) /= p;
            inv.at(c, j) /= p;
        }
        for (long i = 0; i < rows_; ++i) {
            if (i == c || a.at(i, c).is_zero()) continue;
            FieldElement f = a.at(i, c);
            for (long j = 0; j < cols_; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

long Matrix::rank() const {
    Matrix a = *this;
    long r = 0;
    for (long c = 0; c < cols_ && r < rows_; ++c) {
        long piv = -1;
        for (long i = r; i < rows_; ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (long j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(r, j));
        for (long i = r + 1; i < rows_; ++i) {
            if (a.at(i, c).is_zero()) continue;
            FieldElement f = a.at(i, c) / a.at(r, c);
            for (long j = c; j < cols_; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

std::optional<FVec> Matrix::solve(const FVec& rhs) const {
    if (static_cast<long>(rhs.size()) != rows_) throw DimensionError("solve: rhs length mismatch");
    // forward elimination on the augmented system
    Matrix a = *this;
    FVec b = rhs;
    std::vector<long> pivot_row(cols_, -1);
    long r = 0;
    for (long c = 0; c < cols_; ++c) {
        long piv = -1;
        for (long i = r; i < rows_; ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw GeometryError("solve: columns are linearly dependent");
        if (piv != r) {
            for (long j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(r, j));
            std::swap(b[piv], b[r]);
        }
        for (long i = r + 1; i < rows_; ++i) {
            if (a.at(i, c).is_zero()) continue;
            FieldElement f = a.at(i, c) / a.at(r, c);
            for (long j = c; j < cols_; ++j) a.at(i, j) -= f * a.at(r, j);
            b[i] -= f * b[r];
        }
        pivot_row[c] = r;
        ++r;
    }
    for (long i = r; i < rows_; ++i)
        if (!b[i].is_zero()) return std::nullopt; // inconsistent
    FVec x(cols_);
    for (long c = cols_ - 1; c >= 0; --c) {
        long pr = pivot_row[c];
        FieldElement acc = b[pr];
        for (long j = c + 1; j < cols_; ++j) acc -= a.at(pr, j) * x[j];
        x[c] = acc / a.at(pr, c);
    }
    return x;
}

long Matrix::field_d() const {
    long d = 0;
    for (const auto& e : e_) {
        if (e.d() == 0) continue;
        if (d == 0)
            d = e.d();
        else if (d != e.d())
            throw FieldError("matrix mixes entries from different fields");
    }
    return d;
}

FieldElement fvec_dot(const FVec& a, const FVec& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    FieldElement s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

FVec fvec_add(const FVec& a, const FVec& b) {
    if (a.size() != b.size()) throw DimensionError("vector add: length mismatch");
    FVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

FVec fvec_sub(const FVec& a, const FVec& b) {
    if (a.size() != b.size()) throw DimensionError("vector sub: length mismatch");
    FVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

FVec fvec_scale(const FVec& a, const FieldElement& c) {
    FVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

} // namespace tilepack
