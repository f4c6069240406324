#pragma once

#include <cstdint>
#include <vector>

namespace partlat {

struct Assignment {
    std::int64_t total_weight = 0;
    /// row_to_col[r] is the column matched to row r of the padded square matrix.
    std::vector<std::size_t> row_to_col;
};

/// Maximum-weight perfect assignment (Hungarian method with potentials).
/// A rectangular matrix is padded with zero weights to a square one.
/// Runs in O(k^3) for k = max(rows, cols); deterministic.
Assignment max_weight_assignment(const std::vector<std::vector<std::int64_t>> &weights);

}  // namespace partlat
