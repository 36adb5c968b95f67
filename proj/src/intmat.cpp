#include "tilepack/intmat.hpp"

#include "tilepack/errors.hpp"

namespace tilepack {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Integer> IntMatrix::col(long j) const {
    std::vector<Integer> c(rows_);
    for (long i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

bool IntMatrix::col_is_zero(long j) const {
    for (long i = 0; i < rows_; ++i)
        if (sgn(at(i, j)) != 0) return false;
    return true;
}

void IntMatrix::swap_cols(long a, long b) {
    if (a == b) return;
    for (long i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::negate_col(long j) {
    for (long i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

void IntMatrix::submul_col(long j, long k, const Integer& q) {
    if (sgn(q) == 0) return;
    for (long i = 0; i < rows_; ++i) at(i, j) -= q * at(i, k);
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("IntMatrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Integer& a = at(i, k);
            if (sgn(a) == 0) continue;
            for (long j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
    if (static_cast<long>(v.size()) != cols_) throw DimensionError("IntMatrix apply shape mismatch");
    std::vector<Integer> r(rows_, Integer(0));
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

HnfResult hnf(const IntMatrix& m) {
    HnfResult res{m, IntMatrix::identity(m.cols()), 0};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    const long rows = m.rows(), cols = m.cols();

    long c = 0;
    for (long r = 0; r < rows && c < cols; ++r) {
        // Euclid across row r on columns [c, cols): leave one nonzero at column c.
        for (;;) {
            long best = -1;
            for (long j = c; j < cols; ++j) {
                if (sgn(h.at(r, j)) == 0) continue;
                if (best < 0 || cmp(abs(h.at(r, j)), abs(h.at(r, best))) < 0) best = j;
            }
            if (best < 0) break; // row r is zero among remaining columns
            if (best != c) {
                h.swap_cols(c, best);
                u.swap_cols(c, best);
            }
            bool others = false;
            for (long j = c + 1; j < cols; ++j) {
                if (sgn(h.at(r, j)) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), h.at(r, j).get_mpz_t(), h.at(r, c).get_mpz_t());
                h.submul_col(j, c, q);
                u.submul_col(j, c, q);
                if (sgn(h.at(r, j)) != 0) others = true;
            }
            if (!others) break;
        }
        if (sgn(h.at(r, c)) == 0) continue; // no pivot in this row
        if (sgn(h.at(r, c)) < 0) {
            h.negate_col(c);
            u.negate_col(c);
        }
        // reduce earlier columns in the pivot row into [0, pivot)
        for (long j = 0; j < c; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(r, j).get_mpz_t(), h.at(r, c).get_mpz_t());
            h.submul_col(j, c, q);
            u.submul_col(j, c, q);
        }
        ++c;
    }
    res.rank = c;
    return res;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    HnfResult r = hnf(m);
    long k = m.cols() - r.rank;
    IntMatrix ker(m.cols(), k);
    for (long j = 0; j < k; ++j)
        for (long i = 0; i < m.cols(); ++i) ker.at(i, j) = r.u.at(i, r.rank + j);
    return ker;
}

} // namespace tilepack
