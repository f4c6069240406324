#pragma once

#include <optional>
#include <vector>

namespace partlat::detail {

/// Finds x >= 0 with A x = b for b >= 0 by phase-one revised simplex (Bland's rule).
/// `columns[c]` is column c of A. Returns nullopt when the least total
/// infeasibility exceeds `tol`. A basic solution has at most rows() non-zeros.
std::optional<std::vector<double>> find_nonnegative_solution(const std::vector<std::vector<double>> &columns,
                                                             const std::vector<double> &b, double tol);

}  // namespace partlat::detail
