#pragma once

#include <string>

#include "tilepack/construct.hpp"

namespace tilepack {

// 2-D picture of a construction in canonical coordinates: the body filled,
// a window of L-translates outlined, the fundamental parallelepiped of M
// dashed, and lattice points of both lattices. Decimal output only here.
std::string construction_svg(const ConstructionResult& res);

} // namespace tilepack
