#pragma once

#include <vector>

#include "puiseux/rat.hpp"

namespace puiseux::detail {

using ZPoly = std::vector<Integer>;  // ascending, trimmed

/// Irreducible factors over Z of a primitive squarefree polynomial of degree >= 1
/// with positive leading coefficient. Factors are primitive with positive leading coefficient.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f);

}  // namespace puiseux::detail
