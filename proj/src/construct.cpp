#include "tilepack/construct.hpp"

#include <map>

#include "tilepack/enumerate.hpp"
#include "tilepack/errors.hpp"

namespace tilepack {

// ---------------------------------------------------------------- dense case

GridParams choose_grid_params(const Lattice& m_lat) {
    if (!m_lat.full_rank()) throw GeometryError("grid selection requires a full-rank lattice");
    const long d = m_lat.dim();
    if ((m_lat.covolume() - FieldElement(1)).sign() <= 0)
        throw VolumeOrderError("grid selection requires covolume > 1");

    Matrix inv = m_lat.basis().inverse();
    // bounding box of the fundamental parallelepiped basis * [0,1]^d
    FVec plo(d, FieldElement(0)), phi(d, FieldElement(0));
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            const FieldElement& e = m_lat.basis().at(i, j);
            if (e.sign() < 0)
                plo[i] += e;
            else
                phi[i] += e;
        }

    for (long n = 2; n <= 100000; ++n) {
        Rational side(n + 1, static_cast<long>(n) * n);
        side.canonicalize();
        FieldElement s{side};
        Integer needed = 1;
        for (long i = 0; i < d; ++i) needed *= n;

        std::vector<Integer> k_lo(d), k_hi(d);
        for (long i = 0; i < d; ++i) {
            k_lo[i] = (plo[i] / s).floor() - 1;
            k_hi[i] = (phi[i] / s).floor() + 1;
        }
        std::vector<Box> cells;
        for_each_box_vector(k_lo, k_hi, [&](const std::vector<Integer>& k) {
            // keep the cell iff all 2^d vertices lie in the closed parallelepiped
            FVec vertex(d);
            for (long mask = 0; mask < (1L << d); ++mask) {
                for (long i = 0; i < d; ++i)
                    vertex[i] = FieldElement(Rational(k[i] + ((mask >> i) & 1))) * s;
                FVec y = inv.apply(vertex);
                for (long i = 0; i < d; ++i)
                    if (y[i].sign() < 0 || (y[i] - FieldElement(1)).sign() > 0) return true;
            }
            Box cell;
            cell.lo.resize(d);
            cell.hi.resize(d);
            for (long i = 0; i < d; ++i) {
                cell.lo[i] = FieldElement(Rational(k[i])) * s;
                cell.hi[i] = FieldElement(Rational(k[i] + 1)) * s;
            }
            cells.push_back(std::move(cell));
            return true;
        });
        if (Integer(static_cast<long>(cells.size())) >= needed)
            return GridParams{n, side, std::move(cells)};
    }
    throw GeometryError("grid selection did not terminate within bounds");
}

namespace {

// Shell-ordered search candidates for one lattice, shared across the many
// per-cell searches of a dense construction. Storing the fractional parts of
// the lattice points lets each search test the reduced condition
// dist(m - target, Z^d) < margin with a couple of comparisons per candidate.
class SumsetCandidates {
public:
    explicit SumsetCandidates(const Lattice& lat) : lat_(lat), d_(lat.dim()) {}

    const Lattice& lat() const { return lat_; }
    long dim() const { return d_; }

    void extend_to(long radius) {
        if (radius <= built_) return;
        if (!shell_start_.empty()) shell_start_.pop_back(); // drop the end sentinel
        for (long r = built_ + 1; r <= radius; ++r) {
            shell_start_.push_back(coeffs_.size());
            for_each_shell_vector(d_, r, [&](const std::vector<long>& k) {
                std::vector<Integer> c(d_);
                for (long i = 0; i < d_; ++i) c[i] = k[i];
                FVec point = lattice_point(lat_, c);
                FVec frac(d_);
                for (long i = 0; i < d_; ++i)
                    frac[i] = point[i] - FieldElement(Rational(point[i].floor()));
                coeffs_.push_back(std::move(c));
                fracs_.push_back(std::move(frac));
                return true;
            });
            built_ = r;
        }
        shell_start_.push_back(coeffs_.size());
    }

    std::pair<std::size_t, std::size_t> shell_range(long radius) const {
        return {shell_start_[radius], shell_start_[radius + 1]};
    }

    const std::vector<Integer>& coeffs(std::size_t i) const { return coeffs_[i]; }
    const FVec& frac(std::size_t i) const { return fracs_[i]; }

private:
    const Lattice& lat_;
    long d_;
    long built_ = -1;
    std::vector<std::size_t> shell_start_;
    std::vector<std::vector<Integer>> coeffs_;
    std::vector<FVec> fracs_;
};

SumsetApprox search_sumset(SumsetCandidates& cands, const FVec& target, const FieldElement& margin,
                           long search_cap) {
    if (margin.sign() <= 0) throw GeometryError("approximation margin must be positive");
    const long d = cands.dim();
    if (static_cast<long>(target.size()) != d) throw DimensionError("target dimension mismatch");

    // reduce the target to [0,1)^d; the test needs only circle distances
    FVec tau(d);
    for (long i = 0; i < d; ++i) tau[i] = target[i] - FieldElement(Rational(target[i].floor()));
    FieldElement one(1);

    for (long radius = 0; radius <= search_cap; ++radius) {
        cands.extend_to(radius);
        auto [begin, end] = cands.shell_range(radius);
        for (std::size_t idx = begin; idx < end; ++idx) {
            bool ok = true;
            for (long i = 0; i < d && ok; ++i) {
                FieldElement phi = (cands.frac(idx)[i] - tau[i]).abs(); // in [0, 1)
                ok = (phi - margin).sign() < 0 || (phi - (one - margin)).sign() > 0;
            }
            if (!ok) continue;
            std::vector<Integer> coeffs = cands.coeffs(idx);
            FVec m_point = lattice_point(cands.lat(), coeffs);
            std::vector<Integer> l(d);
            for (long i = 0; i < d; ++i) l[i] = (target[i] - m_point[i]).nearest();
            return SumsetApprox{std::move(l), std::move(coeffs), radius};
        }
    }
    throw SearchExhaustedError("sumset approximation exhausted at shell radius " +
                               std::to_string(search_cap));
}

} // namespace

SumsetApprox approximate_in_sumset(const Lattice& m_lat, const FVec& target,
                                   const FieldElement& margin, long search_cap) {
    SumsetCandidates cands(m_lat);
    return search_sumset(cands, target, margin, search_cap);
}

std::pair<BodyF, DenseTrace> dense_construct(const Lattice& m_lat, long search_cap) {
    const long d = m_lat.dim();
    if (!m_lat.full_rank()) throw GeometryError("dense construction requires a full-rank lattice");
    if (closure_decomposition(Lattice::standard(d), m_lat).case_tag != CaseTag::Dense)
        throw GeometryError("dense construction requires Z^d + M to be dense");

    GridParams gp = choose_grid_params(m_lat);
    const long n = gp.n_grid;
    FieldElement s{gp.side};
    FieldElement inv_n{Rational(1, n)};
    FieldElement margin = (s - inv_n) / FieldElement(2);

    long count = 1;
    for (long i = 0; i < d; ++i) count *= n;

    DenseTrace trace;
    trace.n_grid = n;
    trace.side = gp.side;
    trace.large_cells = gp.large_cells;
    trace.margin = margin;

    BodyF body;
    body.dim = d;
    body.frame = Frame::Canonical;
    body.transform_to_original = Matrix::identity(d);

    SumsetCandidates cands(m_lat); // shared across all cell searches
    std::vector<long> digits(d, 0);
    for (long j = 0; j < count; ++j) {
        Box small;
        small.lo.resize(d);
        small.hi.resize(d);
        for (long i = 0; i < d; ++i) {
            small.lo[i] = FieldElement(Rational(digits[i]) / n);
            small.hi[i] = FieldElement(Rational(digits[i] + 1) / n);
        }
        const Box& large = gp.large_cells[j];
        FVec target(d);
        for (long i = 0; i < d; ++i) target[i] = large.lo[i] - small.lo[i] + margin;
        SumsetApprox ap = search_sumset(cands, target, margin, search_cap);

        // R_j + l_j + m_j must land strictly inside Q_j
        FVec m_point = lattice_point(m_lat, ap.m_coeffs);
        for (long i = 0; i < d; ++i) {
            FieldElement shift = FieldElement(Rational(ap.l[i])) + m_point[i];
            if ((small.lo[i] + shift - large.lo[i]).sign() < 0 ||
                (small.hi[i] + shift - large.hi[i]).sign() > 0)
                throw GeometryError("internal: approximated cell escapes its target cell");
        }

        FVec l_shift(d);
        for (long i = 0; i < d; ++i) l_shift[i] = FieldElement(Rational(ap.l[i]));
        body.boxes.push_back(small.shifted(l_shift));
        trace.small_cells.push_back(std::move(small));
        trace.shifts_l.push_back(ap.l);
        trace.shifts_m.push_back(ap.m_coeffs);

        for (long i = d - 1; i >= 0; --i) {
            if (++digits[i] < n) break;
            digits[i] = 0;
        }
    }
    body.validate();
    return {std::move(body), std::move(trace)};
}

// -------------------------------------------------------- commensurable case

static IntMatrix to_int_matrix(const Matrix& m, const char* what) {
    IntMatrix out(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) {
            if (!m.at(i, j).is_integer()) throw GeometryError(std::string(what) + ": entry is not an integer");
            out.at(i, j) = m.at(i, j).rat().get_num();
        }
    return out;
}

static Integer int_abs_det(const IntMatrix& m) {
    FieldElement det = Matrix::from_int(m).determinant().abs();
    return det.rat().get_num();
}

// canonical residue of v modulo the column span of a full-rank HNF matrix
static std::vector<Integer> residue_mod_hnf(std::vector<Integer> v, const IntMatrix& h) {
    const long r = h.cols();
    for (long j = 0; j < r; ++j) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v[j].get_mpz_t(), h.at(j, j).get_mpz_t());
        if (sgn(q) == 0) continue;
        for (long i = j; i < r; ++i) v[i] -= q * h.at(i, j);
    }
    return v;
}

std::pair<BodyF, CommensurableTrace> commensurable_construct(const Lattice& l, const Lattice& m_lat) {
    if (l.dim() != m_lat.dim()) throw DimensionError("lattice dimensions differ");
    if (!l.full_rank() || !m_lat.full_rank()) throw GeometryError("full-rank lattices required");
    const long d = l.dim();
    IntMatrix bl = to_int_matrix(l.basis(), "commensurable construction (L)");
    IntMatrix bm = to_int_matrix(m_lat.basis(), "commensurable construction (M)");

    // canonical coordinates demand L + M = Z^d
    IntMatrix cat(d, 2 * d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            cat.at(i, j) = bl.at(i, j);
            cat.at(i, d + j) = bm.at(i, j);
        }
    HnfResult sum = hnf(cat);
    bool is_unit = sum.rank == d;
    for (long i = 0; i < d && is_unit; ++i)
        for (long j = 0; j < d && is_unit; ++j)
            if (sum.h.at(i, j) != Integer(i == j ? 1 : 0)) is_unit = false;
    if (!is_unit) throw GeometryError("commensurable construction requires L + M = Z^d");

    Integer covol_l = int_abs_det(bl);
    Integer covol_m = int_abs_det(bm);
    if (covol_l > covol_m)
        throw VolumeOrderError("commensurable construction requires covolume(L) <= covolume(M)");

    IntMatrix h_l = hnf(bl).h;
    IntMatrix h_m = hnf(bm).h;

    // first representative of every residue class, enumerating source lattice
    // coefficients by l-infinity shells (lexicographic inside a shell)
    auto collect = [d](const IntMatrix& source, const IntMatrix& mod_h, const Integer& classes) {
        std::vector<std::vector<Integer>> reps;
        std::map<std::vector<Integer>, bool> seen;
        for (long radius = 0; Integer(static_cast<long>(reps.size())) < classes; ++radius) {
            if (radius > 100000) throw GeometryError("internal: coset enumeration did not close");
            for_each_shell_vector(d, radius, [&](const std::vector<long>& k) {
                std::vector<Integer> coeffs(d);
                for (long i = 0; i < d; ++i) coeffs[i] = k[i];
                std::vector<Integer> point = source.apply(coeffs);
                auto key = residue_mod_hnf(point, mod_h);
                if (!seen.count(key)) {
                    seen[key] = true;
                    reps.push_back(std::move(point));
                    if (Integer(static_cast<long>(reps.size())) == classes) return false;
                }
                return true;
            });
        }
        return reps;
    };

    CommensurableTrace trace;
    trace.g_reps = collect(bm, h_l, covol_l); // points of M, classes of Z^d/L
    trace.h_reps = collect(bl, h_m, covol_m); // points of L, classes of Z^d/M
    trace.h = lattice_intersection(l, m_lat);
    trace.group_order = int_abs_det(to_int_matrix(trace.h.basis(), "H = L cap M"));

    long e_count = static_cast<long>(covol_l.get_si());
    for (long i = 0; i < e_count; ++i) {
        std::vector<Integer> e(d);
        for (long c = 0; c < d; ++c) e[c] = trace.g_reps[i][c] + trace.h_reps[i][c];
        trace.e_points.push_back(std::move(e));
    }

    BodyF body;
    body.dim = d;
    body.frame = Frame::Canonical;
    body.transform_to_original = Matrix::identity(d);
    for (const auto& e : trace.e_points) {
        Box cube;
        cube.lo.resize(d);
        cube.hi.resize(d);
        for (long i = 0; i < d; ++i) {
            cube.lo[i] = FieldElement(Rational(e[i]));
            cube.hi[i] = FieldElement(Rational(e[i] + 1));
        }
        body.boxes.push_back(std::move(cube));
    }
    body.validate();
    return {std::move(body), std::move(trace)};
}

// --------------------------------------------------------- intermediate case

namespace {

struct Split {
    Lattice part1; // rank m, integer first-m coordinates
    Lattice part2; // rank n, zero first-m coordinates
};

Split split_by_projection(const Lattice& lat, long m, long tag) {
    const long d = lat.dim();
    const long n = d - m;
    IntMatrix top(m, d);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < d; ++j) {
            if (!lat.basis().at(i, j).is_integer())
                throw GeometryError("intermediate construction: first coordinates must be integers");
            top.at(i, j) = lat.basis().at(i, j).rat().get_num();
        }
    HnfResult hr = hnf(top);
    if (hr.rank != m) throw GeometryError("internal: projection of the lattice is rank deficient");
    Matrix u = Matrix::from_int(hr.u);
    Matrix b1(d, m), b2(d, n);
    Matrix image = lat.basis() * u;
    for (long i = 0; i < d; ++i) {
        for (long j = 0; j < m; ++j) b1.at(i, j) = image.at(i, j);
        for (long j = 0; j < n; ++j) b2.at(i, j) = image.at(i, m + j);
    }
    // the kernel columns must vanish on the first m coordinates
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < n; ++j)
            if (!b2.at(i, j).is_zero()) throw GeometryError("internal: kernel column with nonzero projection");
    // flip monomial column signs in the dense block so boxes map forward
    for (long j = 0; j < n; ++j) {
        long nonzero = 0, row = -1;
        for (long i = 0; i < n; ++i)
            if (!b2.at(m + i, j).is_zero()) {
                ++nonzero;
                row = i;
            }
        if (nonzero == 1 && b2.at(m + row, j).sign() < 0)
            for (long i = 0; i < d; ++i) b2.at(i, j) = -b2.at(i, j);
    }
    return Split{Lattice(std::move(b1), tag), Lattice(std::move(b2), tag)};
}

Matrix lower_block(const Matrix& b, long m, long n) {
    Matrix out(n, b.cols());
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < b.cols(); ++j) out.at(i, j) = b.at(m + i, j);
    return out;
}

// true when each column and each row carries exactly one (positive) entry
bool is_positive_monomial(const Matrix& t) {
    std::vector<bool> row_used(t.rows(), false);
    for (long j = 0; j < t.cols(); ++j) {
        long hits = 0, row = -1;
        for (long i = 0; i < t.rows(); ++i)
            if (!t.at(i, j).is_zero()) {
                ++hits;
                row = i;
            }
        if (hits != 1 || row_used[row] || t.at(row, j).sign() <= 0) return false;
        row_used[row] = true;
    }
    return true;
}

} // namespace

std::pair<BodyF, IntermediateTrace> intermediate_construct(const Lattice& l, const Lattice& m_lat,
                                                           long m_split, long search_cap) {
    if (l.dim() != m_lat.dim()) throw DimensionError("lattice dimensions differ");
    const long d = l.dim();
    const long m = m_split;
    const long n = d - m;
    if (m < 1 || m > d - 1) throw GeometryError("intermediate construction needs 1 <= m <= d-1");
    if (!l.full_rank() || !m_lat.full_rank()) throw GeometryError("full-rank lattices required");
    if ((l.covolume() - m_lat.covolume()).sign() >= 0)
        throw VolumeOrderError("intermediate construction requires covolume(L) < covolume(M)");
    long tag = l.field_d() != 0 ? l.field_d() : m_lat.field_d();

    Split sl = split_by_projection(l, m, tag);
    Split sm = split_by_projection(m_lat, m, tag);
    if (sl.part2.rank() != n || sm.part2.rank() != n)
        throw GeometryError("internal: dense parts do not have rank n");

    IntMatrix pi_l1(m, m), pi_m1(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            pi_l1.at(i, j) = sl.part1.basis().at(i, j).rat().get_num();
            pi_m1.at(i, j) = sm.part1.basis().at(i, j).rat().get_num();
        }
    Integer det_l1 = int_abs_det(pi_l1);
    Integer det_m1 = int_abs_det(pi_m1);

    // superlattices: divide the first basis vector
    auto widen = [tag](const Lattice& base, const Integer& q) {
        Matrix b = base.basis();
        FieldElement divisor{Rational(q)};
        for (long i = 0; i < b.rows(); ++i) b.at(i, 0) = b.at(i, 0) / divisor;
        return Lattice(std::move(b), tag);
    };
    Lattice l2_prime = widen(sl.part2, det_m1);
    Lattice m2_prime = widen(sm.part2, det_l1);

    // coset representatives along the divided vector
    auto progression = [d](const Lattice& base, const Integer& q) {
        std::vector<FVec> reps;
        FVec step(d);
        for (long i = 0; i < d; ++i) step[i] = base.basis().at(i, 0) / FieldElement(Rational(q));
        for (Integer k = 0; k < q; ++k) reps.push_back(fvec_scale(step, FieldElement(Rational(k))));
        return reps;
    };
    std::vector<FVec> j2 = progression(sl.part2, det_m1);
    std::vector<FVec> k2 = progression(sm.part2, det_l1);

    Matrix ln_prime = lower_block(l2_prime.basis(), m, n);
    Matrix mn_prime = lower_block(m2_prime.basis(), m, n);
    Lattice l2p_block{ln_prime, tag};
    Lattice m2p_block{mn_prime, tag};
    if ((l2p_block.covolume() - m2p_block.covolume()).sign() >= 0)
        throw GeometryError("internal: superlattice covolume inequality failed");

    if (!is_positive_monomial(ln_prime))
        throw GeometryError("intermediate construction needs an axis-aligned dense block for L");
    Matrix back = ln_prime;           // maps normalized boxes to canonical boxes
    Matrix norm = ln_prime.inverse(); // normalizes L2' to Z^n
    Lattice m_norm{norm * mn_prime, tag};

    auto [e_norm, sub_trace] = dense_construct(m_norm, search_cap);
    (void)sub_trace;

    BodyF e_body;
    e_body.dim = n;
    e_body.frame = Frame::Canonical;
    e_body.transform_to_original = Matrix::identity(n);
    for (const auto& b : e_norm.boxes) {
        Box mapped;
        mapped.lo.resize(n);
        mapped.hi.resize(n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                if (!back.at(i, j).is_zero()) {
                    mapped.lo[i] = back.at(i, j) * b.lo[j];
                    mapped.hi[i] = back.at(i, j) * b.hi[j];
                }
        e_body.boxes.push_back(std::move(mapped));
    }
    e_body.validate();

    // representatives of Z^m modulo the projected blocks, found inside L1 / M1
    auto collect_reps = [m](const Lattice& source, const IntMatrix& mod_block, const Integer& classes) {
        IntMatrix mod_h = hnf(mod_block).h;
        std::vector<FVec> reps;
        std::map<std::vector<Integer>, bool> seen;
        const long rank = source.rank();
        for (long radius = 0; Integer(static_cast<long>(reps.size())) < classes; ++radius) {
            if (radius > 100000) throw GeometryError("internal: class enumeration did not close");
            for_each_shell_vector(rank, radius, [&](const std::vector<long>& k) {
                std::vector<Integer> coeffs(rank);
                for (long i = 0; i < rank; ++i) coeffs[i] = k[i];
                FVec point = lattice_point(source, coeffs);
                std::vector<Integer> pi(m);
                for (long i = 0; i < m; ++i) {
                    if (!point[i].is_integer())
                        throw GeometryError("internal: non-integer projection in class enumeration");
                    pi[i] = point[i].rat().get_num();
                }
                auto key = residue_mod_hnf(std::move(pi), mod_h);
                if (!seen.count(key)) {
                    seen[key] = true;
                    reps.push_back(std::move(point));
                    if (Integer(static_cast<long>(reps.size())) == classes) return false;
                }
                return true;
            });
        }
        return reps;
    };
    std::vector<FVec> j1 = collect_reps(sl.part1, pi_m1, det_m1);
    std::vector<FVec> k1 = collect_reps(sm.part1, pi_l1, det_l1);

    BodyF body;
    body.dim = d;
    body.frame = Frame::Canonical;
    body.transform_to_original = Matrix::identity(d);
    for (std::size_t xi = 0; xi < k1.size(); ++xi)
        for (std::size_t yi = 0; yi < j1.size(); ++yi) {
            FVec v = fvec_add(fvec_add(k1[xi], k2[xi]), fvec_add(j1[yi], j2[yi]));
            for (const auto& b : e_body.boxes) {
                Box box;
                box.lo.resize(d);
                box.hi.resize(d);
                for (long i = 0; i < m; ++i) {
                    box.lo[i] = v[i];
                    box.hi[i] = v[i] + FieldElement(1);
                }
                for (long i = 0; i < n; ++i) {
                    box.lo[m + i] = v[m + i] + b.lo[i];
                    box.hi[m + i] = v[m + i] + b.hi[i];
                }
                body.boxes.push_back(std::move(box));
            }
        }
    body.validate(); // the union of translated copies must be direct

    IntermediateTrace trace;
    trace.l1 = sl.part1;
    trace.l2 = sl.part2;
    trace.m1 = sm.part1;
    trace.m2 = sm.part2;
    trace.l2_prime = l2_prime;
    trace.m2_prime = m2_prime;
    trace.j1 = std::move(j1);
    trace.k1 = std::move(k1);
    trace.j2 = std::move(j2);
    trace.k2 = std::move(k2);
    for (std::size_t i = 0; i < trace.j1.size(); ++i) trace.pairing_l.push_back(i);
    for (std::size_t i = 0; i < trace.k1.size(); ++i) trace.pairing_m.push_back(i);
    trace.e_body = std::move(e_body);
    return {std::move(body), std::move(trace)};
}

// ------------------------------------------------------------------ dispatch

ConstructionResult construct(const Lattice& l, const Lattice& m_lat, long search_cap) {
    if (l.dim() != m_lat.dim()) throw DimensionError("lattice dimensions differ");
    if (!l.full_rank() || !m_lat.full_rank()) throw GeometryError("full-rank lattices required");
    long tag = l.field_d() != 0 ? l.field_d() : m_lat.field_d();

    ClosureDecomposition dec = closure_decomposition(l, m_lat);
    int vol_cmp = (l.covolume() - m_lat.covolume()).sign();
    if (dec.case_tag == CaseTag::Commensurable) {
        if (vol_cmp > 0) throw VolumeOrderError("covolume(L) must not exceed covolume(M)");
    } else if (vol_cmp >= 0) {
        throw VolumeOrderError("covolume(L) must be strictly below covolume(M)");
    }

    ConstructionResult res;
    res.case_tag = dec.case_tag;
    res.m = dec.m;
    res.n = dec.n;

    switch (dec.case_tag) {
    case CaseTag::Dense: {
        UnitNormalization un = normalize_to_unit_lattice(l, m_lat);
        auto [body, trace] = dense_construct(un.m_image, search_cap);
        res.body = std::move(body);
        res.trace = std::move(trace);
        res.l_canonical = un.l_image;
        res.m_canonical = un.m_image;
        res.to_canonical = un.s;
        break;
    }
    case CaseTag::Commensurable: {
        Lattice lc{dec.t * l.basis(), tag};
        Lattice mc{dec.t * m_lat.basis(), tag};
        auto [body, trace] = commensurable_construct(lc, mc);
        res.body = std::move(body);
        res.trace = std::move(trace);
        res.l_canonical = std::move(lc);
        res.m_canonical = std::move(mc);
        res.to_canonical = dec.t;
        break;
    }
    case CaseTag::Intermediate: {
        Lattice lc{dec.t * l.basis(), tag};
        Lattice mc{dec.t * m_lat.basis(), tag};
        auto [body, trace] = intermediate_construct(lc, mc, dec.m, search_cap);
        res.body = std::move(body);
        res.trace = std::move(trace);
        res.l_canonical = std::move(lc);
        res.m_canonical = std::move(mc);
        res.to_canonical = dec.t;
        break;
    }
    }

    res.body.transform_to_original = res.to_canonical.inverse();
    res.report_l = verify_tiling(res.body, res.l_canonical);
    res.report_m = verify_packing(res.body, res.m_canonical);
    if (!res.report_l.is_tiling || !res.report_m.is_packing)
        throw Error(ErrorCode::Generic, "internal: constructed body failed certification");
    return res;
}

} // namespace tilepack
