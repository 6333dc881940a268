#pragma once

#include <vector>

#include "sl2lab/scalar.hpp"

namespace sl2lab {

using Vec = std::vector<GaussianRational>;
using Mat = std::vector<Vec>;

/// Basis of the right nullspace of a (rows x cols) matrix over Q(i),
/// by exact Gauss-Jordan elimination. Rows may be ragged; missing entries
/// are zero.
std::vector<Vec> nullspace(Mat a, int cols);

}  // namespace sl2lab
