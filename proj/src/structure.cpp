#include "tilepack/structure.hpp"

#include "tilepack/errors.hpp"

namespace tilepack {

const char* case_name(CaseTag tag) {
    switch (tag) {
    case CaseTag::Dense: return "Dense";
    case CaseTag::Commensurable: return "Commensurable";
    case CaseTag::Intermediate: return "Intermediate";
    }
    return "?";
}

static void check_pair(const Lattice& l, const Lattice& m_lat) {
    if (l.dim() != m_lat.dim()) throw DimensionError("lattice dimensions differ");
    if (!l.full_rank() || !m_lat.full_rank()) throw GeometryError("both lattices must be full rank");
    if (l.field_d() != 0 && m_lat.field_d() != 0 && l.field_d() != m_lat.field_d())
        throw FieldError("lattices live in different fields");
}

ClosureDecomposition closure_decomposition(const Lattice& l, const Lattice& m_lat) {
    check_pair(l, m_lat);
    const long d = l.dim();

    Lattice w = lattice_intersection(lattice_dual(l), lattice_dual(m_lat));
    const long m = w.rank();
    const long n = d - m;

    Matrix t(d, d);
    long filled = 0;
    for (long i = 0; i < m; ++i, ++filled)
        for (long j = 0; j < d; ++j) t.at(i, j) = w.basis().at(j, i);
    // complete with standard coordinate rows, greedily keeping full rank
    for (long i = 0; i < d && filled < d; ++i) {
        Matrix probe(filled + 1, d);
        for (long r = 0; r < filled; ++r)
            for (long j = 0; j < d; ++j) probe.at(r, j) = t.at(r, j);
        probe.at(filled, i) = FieldElement(1);
        if (probe.rank() == filled + 1) {
            t.at(filled, i) = FieldElement(1);
            ++filled;
        }
    }
    if (filled != d) throw GeometryError("internal: could not complete the coordinate change");

    ClosureDecomposition dec;
    dec.t = t;
    dec.t_inverse = t.inverse();
    dec.m = m;
    dec.n = n;
    dec.w_basis = w.basis();
    dec.case_tag = m == 0 ? CaseTag::Dense : (m == d ? CaseTag::Commensurable : CaseTag::Intermediate);

    // every generator of L and M must land on integer first-m coordinates
    for (const Lattice* lat : {&l, &m_lat})
        for (long j = 0; j < d; ++j) {
            FVec img = t.apply(lat->basis().col(j));
            for (long i = 0; i < m; ++i)
                if (!img[i].is_integer())
                    throw GeometryError("internal: non-integer pairing in closure decomposition");
        }
    return dec;
}

UnitNormalization normalize_to_unit_lattice(const Lattice& l, const Lattice& m_lat) {
    check_pair(l, m_lat);
    UnitNormalization out{l.basis().inverse(), Lattice::standard(l.dim()),
                          Lattice::trivial(l.dim())};
    long tag = l.field_d() != 0 ? l.field_d() : m_lat.field_d();
    out.m_image = Lattice(out.s * m_lat.basis(), tag);
    return out;
}

} // namespace tilepack
