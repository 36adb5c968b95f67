#include "tilepack/body.hpp"

#include "tilepack/errors.hpp"

namespace tilepack {

FieldElement Box::volume() const {
    FieldElement v(1);
    for (long i = 0; i < dim(); ++i) v *= hi[i] - lo[i];
    return v;
}

bool Box::contains(const FVec& x) const {
    for (long i = 0; i < dim(); ++i)
        if ((x[i] - lo[i]).sign() < 0 || (x[i] - hi[i]).sign() >= 0) return false;
    return true;
}

Box Box::shifted(const FVec& v) const { return Box{fvec_add(lo, v), fvec_add(hi, v)}; }

bool boxes_overlap(const Box& a, const Box& b) {
    for (long i = 0; i < a.dim(); ++i)
        if ((a.lo[i] - b.hi[i]).sign() >= 0 || (b.lo[i] - a.hi[i]).sign() >= 0) return false;
    return true;
}

bool boxes_overlap_shifted(const Box& a, const FVec& shift, const Box& b) {
    for (long i = 0; i < a.dim(); ++i) {
        if ((a.lo[i] + shift[i] - b.hi[i]).sign() >= 0) return false;
        if ((b.lo[i] - a.hi[i] - shift[i]).sign() >= 0) return false;
    }
    return true;
}

FieldElement BodyF::volume() const {
    FieldElement v(0);
    for (const auto& b : boxes) v += b.volume();
    return v;
}

Box BodyF::bounding_box() const {
    if (boxes.empty()) throw GeometryError("bounding box of an empty body");
    Box bb = boxes.front();
    for (const auto& b : boxes)
        for (long i = 0; i < dim; ++i) {
            if (b.lo[i] < bb.lo[i]) bb.lo[i] = b.lo[i];
            if (b.hi[i] > bb.hi[i]) bb.hi[i] = b.hi[i];
        }
    return bb;
}

void BodyF::validate() const {
    for (const auto& b : boxes) {
        if (b.dim() != dim || static_cast<long>(b.hi.size()) != dim)
            throw GeometryError("box dimension mismatch");
        for (long i = 0; i < dim; ++i)
            if ((b.lo[i] - b.hi[i]).sign() >= 0) throw GeometryError("degenerate box: lo must be < hi");
    }
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j)
            if (boxes_overlap(boxes[i], boxes[j]))
                throw GeometryError("body boxes overlap at indices " + std::to_string(i) + "," +
                                    std::to_string(j));
}

} // namespace tilepack
