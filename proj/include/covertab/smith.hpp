#pragma once

#include <cstdint>
#include <vector>

namespace covertab {

// Diagonal of the Smith normal form of an integer matrix: non-negative
// entries d_1 | d_2 | ... (zeros trailing), length min(rows, cols).
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> mat);

}  // namespace covertab
