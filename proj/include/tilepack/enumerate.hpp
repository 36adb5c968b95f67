#pragma once

#include <vector>

#include "tilepack/field.hpp"

namespace tilepack {

// Visit every integer vector of l-infinity norm exactly `radius`,
// lexicographically. fn returns false to stop; the function then
// returns false as well.
template <typename Fn>
bool for_each_shell_vector(long dim, long radius, Fn&& fn) {
    std::vector<long> v(dim, 0);
    // at the last free coordinate, skip the interior unless the bound was hit
    auto rec = [&](auto&& self, long pos, bool boundary) -> bool {
        if (pos == dim) return boundary || radius == 0 ? fn(const_cast<const std::vector<long>&>(v)) : true;
        if (pos == dim - 1 && !boundary && radius > 0) {
            v[pos] = -radius;
            if (!fn(const_cast<const std::vector<long>&>(v))) return false;
            v[pos] = radius;
            return fn(const_cast<const std::vector<long>&>(v));
        }
        for (long x = -radius; x <= radius; ++x) {
            v[pos] = x;
            if (!self(self, pos + 1, boundary || x == radius || x == -radius)) return false;
        }
        return true;
    };
    return rec(rec, 0, false);
}

// Visit every integer vector in the box [lo, hi] (componentwise), in
// lexicographic order. Empty box (some lo > hi) visits nothing.
template <typename Fn>
bool for_each_box_vector(const std::vector<Integer>& lo, const std::vector<Integer>& hi, Fn&& fn) {
    const long d = static_cast<long>(lo.size());
    for (long i = 0; i < d; ++i)
        if (lo[i] > hi[i]) return true;
    std::vector<Integer> v = lo;
    for (;;) {
        if (!fn(const_cast<const std::vector<Integer>&>(v))) return false;
        long i = d - 1;
        while (i >= 0) {
            v[i] += 1;
            if (v[i] <= hi[i]) break;
            v[i] = lo[i];
            --i;
        }
        if (i < 0) return true;
    }
}

} // namespace tilepack
