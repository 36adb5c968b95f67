#pragma once

#include "tilepack/matrix.hpp"

namespace tilepack {

enum class Frame { Canonical, Original };

// Half-open axis-aligned box: prod_i [lo[i], hi[i]).
struct Box {
    FVec lo;
    FVec hi;

    long dim() const { return static_cast<long>(lo.size()); }
    FieldElement volume() const;
    bool contains(const FVec& x) const;
    Box shifted(const FVec& v) const;
};

bool boxes_overlap(const Box& a, const Box& b);
// overlap of (a + shift) with b
bool boxes_overlap_shifted(const Box& a, const FVec& shift, const Box& b);

// Finite disjoint union of half-open boxes, tagged with the frame the
// coordinates live in and the map back to original coordinates.
struct BodyF {
    long dim = 0;
    std::vector<Box> boxes;
    Frame frame = Frame::Canonical;
    Matrix transform_to_original; // dim x dim

    FieldElement volume() const;
    Box bounding_box() const; // requires at least one box
    void validate() const;    // lo < hi everywhere, boxes pairwise disjoint
};

} // namespace tilepack
