#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tilepack/construct.hpp"

using namespace tilepack;
using oracle::fe;
using oracle::fe2;

namespace {

Matrix fm(long rows, long cols, std::initializer_list<FieldElement> entries) {
    Matrix m(rows, cols);
    auto it = entries.begin();
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m.at(i, j) = *it++;
    return m;
}

Lattice lat1(const FieldElement& step) { return Lattice(fm(1, 1, {step})); }

Lattice sqrt2_z() { return lat1(fe2("0", "1")); }

// Z^2 and diag(2, sqrt 2) Z^2: the reference intermediate pair
Lattice mixed_m() { return Lattice(fm(2, 2, {fe("2"), fe("0"), fe("0"), fe2("0", "1")})); }

} // namespace

TEST_CASE("grid parameters for sqrt(2) Z") {
    GridParams gp = choose_grid_params(sqrt2_z());
    CHECK(gp.n_grid == 3);
    CHECK(gp.side == Rational(4, 9));
    CHECK(gp.large_cells.size() == 3);
    // N = 2 fails: side 3/4 leaves one whole cell only
}

TEST_CASE("grid parameters for 10 Z") {
    GridParams gp = choose_grid_params(lat1(fe("10")));
    CHECK(gp.n_grid == 2);
    CHECK(gp.side == Rational(3, 4));
    CHECK(gp.large_cells.size() == 13); // floor(10 / (3/4))
}

TEST_CASE("grid cells sit inside the closed parallelepiped and are disjoint") {
    Lattice m = mixed_m();
    GridParams gp = choose_grid_params(m);
    Matrix inv = m.basis().inverse();
    for (const auto& cell : gp.large_cells)
        for (long mask = 0; mask < 4; ++mask) {
            FVec v{mask & 1 ? cell.hi[0] : cell.lo[0], mask & 2 ? cell.hi[1] : cell.lo[1]};
            for (const auto& c : inv.apply(v)) {
                CHECK(c.sign() >= 0);
                CHECK((c - fe("1")).sign() <= 0);
            }
        }
    for (std::size_t i = 0; i < gp.large_cells.size(); ++i)
        for (std::size_t j = i + 1; j < gp.large_cells.size(); ++j)
            CHECK(!boxes_overlap(gp.large_cells[i], gp.large_cells[j]));
    CHECK(choose_grid_params(lat1(fe("10"))).large_cells.size() >= 2);
    CHECK_THROWS_AS(choose_grid_params(lat1(fe("1/2"))), VolumeOrderError);
}

TEST_CASE("sumset approximation") {
    Lattice m = sqrt2_z();
    SumsetApprox zero = approximate_in_sumset(m, {fe("0")}, fe("1/10"), 8);
    CHECK(zero.radius == 0);
    CHECK(zero.l[0] == 0);
    CHECK(zero.m_coeffs[0] == 0);

    // |l + k sqrt 2 - 1/2| < 1/18 must be solvable within radius 20
    SumsetApprox ap = approximate_in_sumset(m, {fe("1/2")}, fe("1/18"), 20);
    CHECK(abs(ap.m_coeffs[0]) <= 20);
    FieldElement got = fe(ap.l[0].get_str()) + fe2("0", ap.m_coeffs[0].get_str()) - fe("1/2");
    CHECK((got.abs() - fe("1/18")).sign() < 0);
    // brute scan oracle: some k in [-20, 20] works, and none smaller than the hit
    bool exists = false;
    for (long k = -20; k <= 20 && !exists; ++k) {
        FieldElement mp = fe2("0", std::to_string(k));
        FieldElement l{Rational((fe("1/2") - mp).nearest())};
        if (((l + mp - fe("1/2")).abs() - fe("1/18")).sign() < 0) exists = true;
    }
    CHECK(exists);

    // a margin of 1/2 is satisfied by plain rounding
    SumsetApprox easy = approximate_in_sumset(m, {fe("7/3")}, fe("1/2"), 8);
    CHECK(easy.radius == 0);
    CHECK(easy.m_coeffs[0] == 0);

    CHECK_THROWS_AS(approximate_in_sumset(m, {fe("1/2")}, fe("1/18"), 2), SearchExhaustedError);
}

TEST_CASE("dense construction on the line") {
    auto [f, trace] = dense_construct(sqrt2_z(), 64);
    CHECK(trace.n_grid == 3);
    CHECK(trace.side == Rational(4, 9));
    CHECK(trace.margin == fe("1/18"));
    REQUIRE(f.boxes.size() == 3);
    CHECK(f.volume() == fe("1"));
    CHECK(trace.small_cells.size() == 3);
    CHECK(trace.large_cells.size() >= 3);

    // F mod Z^d is exactly [0,1)^d: the boxes carry distinct residues
    std::set<std::string> residues;
    for (const auto& b : f.boxes) {
        FieldElement r = b.lo[0] - FieldElement(Rational(b.lo[0].floor()));
        residues.insert(r.str());
    }
    CHECK(residues == std::set<std::string>{fe("0").str(), fe("1/3").str(), fe("2/3").str()});

    // R_j + l_j + m_j lands inside Q_j, distinct cells pairwise disjoint
    for (std::size_t j = 0; j < f.boxes.size(); ++j) {
        FieldElement shift = fe(trace.shifts_l[j][0].get_str()) +
                             fe2("0", trace.shifts_m[j][0].get_str());
        const Box& small = trace.small_cells[j];
        const Box& large = trace.large_cells[j];
        CHECK((small.lo[0] + shift - large.lo[0]).sign() >= 0);
        CHECK((small.hi[0] + shift - large.hi[0]).sign() <= 0);
    }
}

TEST_CASE("dense construction in the plane with a sheared target lattice") {
    Lattice m(fm(2, 2, {fe2("0", "1"), fe("1"), fe("0"), fe2("0", "1")}));
    auto [f, trace] = dense_construct(m, 64);
    CHECK(f.volume() == fe("1"));
    CHECK(verify_tiling(f, Lattice::standard(2)).is_tiling);
    CHECK(verify_packing(f, m).is_packing);
    CHECK(Integer(static_cast<long>(trace.large_cells.size())) >=
          Integer(trace.n_grid) * Integer(trace.n_grid));

    // distinct cells are steered into distinct target cells with disjoint images
    std::vector<Box> images;
    for (std::size_t j = 0; j < trace.small_cells.size(); ++j) {
        FVec shift = lattice_point(m, trace.shifts_m[j]);
        for (std::size_t i = 0; i < shift.size(); ++i)
            shift[i] += FieldElement(Rational(trace.shifts_l[j][i]));
        images.push_back(trace.small_cells[j].shifted(shift));
        const Box& target = trace.large_cells[j];
        for (std::size_t i = 0; i < shift.size(); ++i) {
            CHECK((images.back().lo[i] - target.lo[i]).sign() >= 0);
            CHECK((images.back().hi[i] - target.hi[i]).sign() <= 0);
        }
    }
    for (std::size_t a = 0; a < images.size(); ++a)
        for (std::size_t b = a + 1; b < images.size(); ++b)
            CHECK(!boxes_overlap(images[a], images[b]));
}

TEST_CASE("commensurable construction on documented pairs") {
    Lattice z2 = Lattice::standard(2);
    Lattice two_z2(fm(2, 2, {fe("2"), fe("0"), fe("0"), fe("2")}));
    auto [f, trace] = commensurable_construct(z2, two_z2);
    REQUIRE(trace.e_points.size() == 1);
    CHECK(trace.e_points[0] == std::vector<Integer>{0, 0});
    CHECK(f.volume() == fe("1"));
    CHECK(trace.group_order == 4); // |Z^2 / (L cap M)| with H = 2Z^2

    auto [f1, trace1] = commensurable_construct(Lattice::standard(1), lat1(fe("3")));
    CHECK(trace1.e_points.size() == 1);
    CHECK(f1.volume() == fe("1"));
    CHECK(verify_tiling(f1, Lattice::standard(1)).is_tiling);
    CHECK(verify_packing(f1, lat1(fe("3"))).is_packing);
}

TEST_CASE("commensurable case with several cosets") {
    Lattice l(fm(2, 2, {fe("1"), fe("0"), fe("0"), fe("2")}));
    Lattice m(fm(2, 2, {fe("2"), fe("0"), fe("1"), fe("2")})); // columns (2,1), (0,2)
    auto [f, trace] = commensurable_construct(l, m);
    CHECK(trace.e_points.size() == 2);
    CHECK(f.volume() == fe("2"));
    CHECK(verify_tiling(f, l).is_tiling);
    CHECK(verify_packing(f, m).is_packing);
    // representatives are pairwise incongruent modulo L and modulo M
    for (std::size_t i = 0; i < trace.e_points.size(); ++i)
        for (std::size_t j = i + 1; j < trace.e_points.size(); ++j) {
            Integer d0 = trace.e_points[i][0] - trace.e_points[j][0];
            Integer d1 = trace.e_points[i][1] - trace.e_points[j][1];
            FVec diff{FieldElement(Rational(d0)), FieldElement(Rational(d1))};
            CHECK(!lattice_membership(l, diff).has_value());
            CHECK(!lattice_membership(m, diff).has_value());
        }
    // volumes may be equal in this case
    Lattice l_eq(fm(2, 2, {fe("1"), fe("0"), fe("0"), fe("2")}));
    Lattice m_eq(fm(2, 2, {fe("2"), fe("0"), fe("0"), fe("1")}));
    auto [f_eq, trace_eq] = commensurable_construct(l_eq, m_eq);
    CHECK(f_eq.volume() == fe("2"));
    CHECK(verify_tiling(f_eq, l_eq).is_tiling);
    CHECK(verify_tiling(f_eq, m_eq).is_tiling); // equal volumes: packing is tiling
}

TEST_CASE("commensurable preconditions") {
    Lattice z2 = Lattice::standard(2);
    Lattice checker(fm(2, 2, {fe("1"), fe("1"), fe("1"), fe("-1")}));
    // checker + 2Z^2 = checker, not Z^2: rejected outside canonical coordinates
    Lattice two_z2(fm(2, 2, {fe("2"), fe("0"), fe("0"), fe("2")}));
    CHECK_THROWS_AS(commensurable_construct(checker, two_z2), GeometryError);
    Lattice three_z2(fm(2, 2, {fe("3"), fe("0"), fe("0"), fe("1")}));
    CHECK_THROWS_AS(commensurable_construct(three_z2, z2), VolumeOrderError);
}

TEST_CASE("intermediate construction on the reference pair") {
    Lattice z2 = Lattice::standard(2);
    auto [f, trace] = intermediate_construct(z2, mixed_m(), 1, 64);

    CHECK(trace.l2.rank() == 1);
    CHECK(trace.m2.rank() == 1);
    CHECK(trace.l2.basis().at(0, 0).is_zero()); // L2 inside {0} x R
    CHECK(trace.m2.basis().at(0, 0).is_zero());

    CHECK(sublattice_index(trace.l2, trace.l2_prime) == Rational(2)); // det(M1)
    CHECK(sublattice_index(trace.m2, trace.m2_prime) == Rational(1)); // det(L1)
    CHECK(trace.j1.size() == 2);
    CHECK(trace.j2.size() == 2);
    CHECK(trace.k1.size() == 1);
    CHECK(trace.k2.size() == 1);

    CHECK(trace.l2_prime.covolume() == fe("1/2"));
    CHECK(trace.m2_prime.covolume() == fe2("0", "1"));
    CHECK((trace.l2_prime.covolume() - trace.m2_prime.covolume()).sign() < 0);

    // vol_n(E) = det(L2) / det(M1) = 1/2, exactly
    CHECK(trace.e_body.volume() == fe("1/2"));
    CHECK(f.volume() == fe("1")); // = covolume(L)

    CHECK(verify_tiling(f, z2).is_tiling);
    CHECK(verify_packing(f, mixed_m()).is_packing);
}

TEST_CASE("intermediate construction with the dense direction first") {
    Lattice z2 = Lattice::standard(2);
    Lattice m(fm(2, 2, {fe2("0", "1"), fe("0"), fe("0"), fe("2")}));
    // W is generated by (0,1): canonical coordinates swap the axes
    ClosureDecomposition dec = closure_decomposition(z2, m);
    REQUIRE(dec.case_tag == CaseTag::Intermediate);
    Lattice lc(dec.t * z2.basis(), 2);
    Lattice mc(dec.t * m.basis(), 2);
    auto [f, trace] = intermediate_construct(lc, mc, dec.m, 64);
    CHECK(f.volume() == lc.covolume());
    CHECK(verify_tiling(f, lc).is_tiling);
    CHECK(verify_packing(f, mc).is_packing);
}

TEST_CASE("intermediate preconditions") {
    Lattice z2 = Lattice::standard(2);
    Lattice shrunk(fm(2, 2, {fe("1/2"), fe("0"), fe("0"), fe2("0", "1/2")}));
    CHECK_THROWS_AS(intermediate_construct(z2, shrunk, 1, 64), VolumeOrderError);
    CHECK_THROWS_AS(intermediate_construct(z2, mixed_m(), 0, 64), GeometryError);
    CHECK_THROWS_AS(intermediate_construct(z2, mixed_m(), 2, 64), GeometryError);
}

TEST_CASE("construct dispatches and certifies all three cases") {
    // dense
    ConstructionResult dense = construct(Lattice::standard(1), sqrt2_z(), 64);
    CHECK(dense.case_tag == CaseTag::Dense);
    CHECK(dense.body.volume() == fe("1"));
    CHECK(dense.report_l.is_tiling);
    CHECK(dense.report_m.is_packing);

    // commensurable, with the deterministic single-box output
    ConstructionResult comm = construct(Lattice::standard(1), lat1(fe("2")), 64);
    CHECK(comm.case_tag == CaseTag::Commensurable);
    REQUIRE(comm.body.boxes.size() == 1);
    CHECK(comm.body.boxes[0].lo[0] == fe("0"));
    CHECK(comm.body.boxes[0].hi[0] == fe("1"));

    // intermediate
    ConstructionResult inter = construct(Lattice::standard(2), mixed_m(), 64);
    CHECK(inter.case_tag == CaseTag::Intermediate);
    CHECK(inter.m == 1);
    CHECK(inter.body.volume() == fe("1"));
}

TEST_CASE("construct rejects bad volume orders") {
    CHECK_THROWS_AS(construct(Lattice::standard(1), lat1(fe2("0", "1/2")), 64), VolumeOrderError);
    CHECK_THROWS_AS(construct(lat1(fe("3")), lat1(fe("2")), 64), VolumeOrderError);
    // equal volumes outside the commensurable case are rejected
    Lattice equal_vol(fm(2, 2, {fe2("0", "1"), fe("0"), fe("0"), fe2("0", "1/2")}));
    CHECK_THROWS_AS(construct(Lattice::standard(2), equal_vol, 64), VolumeOrderError);
    // equal volumes in the commensurable case succeed
    ConstructionResult ok = construct(Lattice::standard(1), Lattice::standard(1), 64);
    CHECK(ok.report_l.is_tiling);
    CHECK(ok.report_m.is_tiling);
}

TEST_CASE("search caps propagate") {
    CHECK_THROWS_AS(construct(Lattice::standard(1), sqrt2_z(), 0), SearchExhaustedError);
}

TEST_CASE("three-dimensional instances") {
    // commensurable
    Lattice z3 = Lattice::standard(3);
    Matrix bm = Matrix::identity(3);
    bm.at(0, 0) = fe("2");
    bm.at(1, 0) = fe("1");
    ConstructionResult comm = construct(z3, Lattice(bm), 64);
    CHECK(comm.case_tag == CaseTag::Commensurable);
    CHECK(comm.body.volume() == fe("1"));

    // intermediate with one discrete and two dense directions
    Matrix mixed = Matrix::identity(3);
    mixed.at(0, 0) = fe("2");
    mixed.at(1, 1) = fe2("0", "1");
    mixed.at(2, 2) = fe2("0", "3/2"); // covolume 2 * sqrt2 * 3sqrt2/2 = 6
    ConstructionResult inter = construct(z3, Lattice(mixed), 64);
    CHECK(inter.case_tag == CaseTag::Intermediate);
    CHECK(inter.m == 1);
    CHECK(inter.n == 2);
    CHECK(inter.body.volume() == fe("1"));
    CHECK(inter.report_l.is_tiling);
    CHECK(inter.report_m.is_packing);
    const auto& trace = std::get<IntermediateTrace>(inter.trace);
    CHECK(trace.l2.rank() == 2);
    CHECK(trace.e_body.dim == 2);
    CHECK(trace.e_body.volume() == trace.l2_prime.covolume());
}

TEST_CASE("normalization happens inside construct for the dense case") {
    ConstructionResult res = construct(lat1(fe("1/2")), lat1(fe2("0", "1")), 64);
    CHECK(res.case_tag == CaseTag::Dense);
    CHECK(res.l_canonical.basis() == Matrix::identity(1));
    CHECK(res.body.volume() == fe("1"));
    // transform back to original coordinates scales volumes by det = 1/2
    CHECK(res.body.transform_to_original.at(0, 0) == fe("1/2"));
    CHECK(res.body.volume() * res.body.transform_to_original.determinant().abs() ==
          lat1(fe("1/2")).covolume());
}
