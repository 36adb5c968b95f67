#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tilepack/intmat.hpp"
#include "tilepack/matrix.hpp"

using namespace tilepack;

namespace {

IntMatrix im(long rows, long cols, std::initializer_list<long> entries) {
    IntMatrix m(rows, cols);
    auto it = entries.begin();
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m.at(i, j) = *it++;
    return m;
}

Integer abs_det(const IntMatrix& m) {
    return Matrix::from_int(m).determinant().abs().rat().get_num();
}

void check_hnf_contract(const IntMatrix& m) {
    HnfResult r = hnf(m);
    CHECK(m * r.u == r.h);
    CHECK(abs_det(r.u) == 1);
    // echelon shape: pivots on strictly increasing rows, positive, zero cols last
    long prev_row = -1;
    for (long j = 0; j < r.rank; ++j) {
        long pivot_row = -1;
        for (long i = 0; i < r.h.rows(); ++i)
            if (sgn(r.h.at(i, j)) != 0) {
                pivot_row = i;
                break;
            }
        REQUIRE(pivot_row > prev_row);
        CHECK(sgn(r.h.at(pivot_row, j)) > 0);
        // earlier columns reduced in the pivot row
        for (long k = 0; k < j; ++k) {
            CHECK(r.h.at(pivot_row, k) >= 0);
            CHECK(r.h.at(pivot_row, k) < r.h.at(pivot_row, j));
        }
        prev_row = pivot_row;
    }
    for (long j = r.rank; j < r.h.cols(); ++j) CHECK(r.h.col_is_zero(j));
}

} // namespace

TEST_CASE("hnf of the identity and of the zero matrix") {
    HnfResult id = hnf(IntMatrix::identity(2));
    CHECK(id.h == IntMatrix::identity(2));
    CHECK(id.u == IntMatrix::identity(2));
    CHECK(id.rank == 2);

    IntMatrix z(2, 2);
    HnfResult zr = hnf(z);
    CHECK(zr.h == z);
    CHECK(zr.u == IntMatrix::identity(2));
    CHECK(zr.rank == 0);
}

TEST_CASE("hnf of [[2,1],[0,1]] preserves the column span") {
    IntMatrix m = im(2, 2, {2, 1, 0, 1});
    check_hnf_contract(m);
    HnfResult r = hnf(m);
    // |det| = 2, so the pivots multiply to 2; the span has index 2 in Z^2
    CHECK(r.rank == 2);
    CHECK(r.h.at(0, 0) * r.h.at(1, 1) == 2);
    CHECK(oracle::int_span_in_ball(m, 8, 5) == oracle::int_span_in_ball(r.h, 8, 5));
}

TEST_CASE("hnf contract on random small matrices") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> dim(1, 3);
    std::uniform_int_distribution<long> entry(-4, 4);
    for (int t = 0; t < 200; ++t) {
        IntMatrix m(dim(rng), dim(rng));
        for (long i = 0; i < m.rows(); ++i)
            for (long j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
        check_hnf_contract(m);
    }
    // independent span comparison on a few instances; coefficient range 48
    // is complete for a radius-6 ball when entries are bounded by 4
    for (int t = 0; t < 6; ++t) {
        IntMatrix m(2, 2);
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j) m.at(i, j) = entry(rng);
        HnfResult r = hnf(m);
        CHECK(oracle::int_span_in_ball(m, 48, 6) == oracle::int_span_in_ball(r.h, 48, 6));
    }
}

TEST_CASE("integer kernel on the documented cases") {
    IntMatrix k1 = integer_kernel(im(1, 2, {1, -1}));
    REQUIRE(k1.cols() == 1);
    CHECK(abs(k1.at(0, 0)) == 1);
    CHECK(k1.at(0, 0) == k1.at(1, 0)); // the x = y line

    CHECK(integer_kernel(IntMatrix::identity(3)).cols() == 0);

    IntMatrix k3 = integer_kernel(im(1, 2, {2, 4}));
    REQUIRE(k3.cols() == 1);
    CHECK(abs(k3.at(0, 0)) == 2);
    CHECK(abs(k3.at(1, 0)) == 1);
    CHECK(sgn(k3.at(0, 0)) != sgn(k3.at(1, 0)));
}

TEST_CASE("kernel columns solve the system and generate all bounded solutions") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int t = 0; t < 100; ++t) {
        IntMatrix m(2, 3);
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 3; ++j) m.at(i, j) = entry(rng);
        IntMatrix ker = integer_kernel(m);
        for (long j = 0; j < ker.cols(); ++j) {
            std::vector<Integer> x = ker.col(j);
            for (const auto& v : m.apply(x)) CHECK(sgn(v) == 0);
        }
        // every brute-force solution in [-3,3]^3 must be a combination of the basis
        for (const auto& k : oracle::coeff_range(3, 3)) {
            std::vector<Integer> img = m.apply(k);
            bool solves = sgn(img[0]) == 0 && sgn(img[1]) == 0;
            if (!solves) continue;
            bool reachable = false;
            for (const auto& c : oracle::coeff_range(ker.cols(), 9)) {
                std::vector<Integer> cand(3, Integer(0));
                for (long j = 0; j < ker.cols(); ++j)
                    for (long i = 0; i < 3; ++i) cand[i] += c[j] * ker.at(i, j);
                if (cand == k) {
                    reachable = true;
                    break;
                }
            }
            CHECK(reachable);
        }
    }
}
