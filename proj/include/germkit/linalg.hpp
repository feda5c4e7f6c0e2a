#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "germkit/rational.hpp"

namespace germkit::linalg {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Determinant by Bareiss elimination; pivot = first nonzero row in order.
BigInt determinant(IntMatrix a);

// Unique solution of a·x = b via fraction-free elimination, or nullopt when
// a is singular.
std::optional<std::vector<Rational>> solve(IntMatrix a, std::vector<BigInt> b);

}  // namespace germkit::linalg
