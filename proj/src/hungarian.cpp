#include "partlat/hungarian.hpp"

#include <algorithm>
#include <limits>

namespace partlat {

Assignment max_weight_assignment(const std::vector<std::vector<std::int64_t>> &weights) {
    const std::size_t rows = weights.size();
    std::size_t cols = 0;
    for (const auto &row : weights) {
        cols = std::max(cols, row.size());
    }
    const std::size_t k = std::max(rows, cols);
    Assignment out;
    if (k == 0) {
        return out;
    }

    // Minimise cost = -weight on the padded square matrix, 1-based indices.
    auto cost = [&](std::size_t r, std::size_t c) -> std::int64_t {
        if (r - 1 < rows && c - 1 < weights[r - 1].size()) {
            return -weights[r - 1][c - 1];
        }
        return 0;
    };

    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(k + 1, 0), v(k + 1, 0);
    std::vector<std::size_t> match(k + 1, 0), way(k + 1, 0);

    for (std::size_t r = 1; r <= k; ++r) {
        match[0] = r;
        std::size_t c0 = 0;
        std::vector<std::int64_t> minv(k + 1, kInf);
        std::vector<char> used(k + 1, 0);
        do {
            used[c0] = 1;
            const std::size_t r0 = match[c0];
            std::int64_t delta = kInf;
            std::size_t c1 = 0;
            for (std::size_t c = 1; c <= k; ++c) {
                if (used[c]) {
                    continue;
                }
                const std::int64_t cur = cost(r0, c) - u[r0] - v[c];
                if (cur < minv[c]) {
                    minv[c] = cur;
                    way[c] = c0;
                }
                if (minv[c] < delta) {
                    delta = minv[c];
                    c1 = c;
                }
            }
            for (std::size_t c = 0; c <= k; ++c) {
                if (used[c]) {
                    u[match[c]] += delta;
                    v[c] -= delta;
                } else {
                    minv[c] -= delta;
                }
            }
            c0 = c1;
        } while (match[c0] != 0);
        do {
            const std::size_t c1 = way[c0];
            match[c0] = match[c1];
            c0 = c1;
        } while (c0 != 0);
    }

    out.row_to_col.assign(k, 0);
    for (std::size_t c = 1; c <= k; ++c) {
        out.row_to_col[match[c] - 1] = c - 1;
        out.total_weight -= cost(match[c], c);
    }
    return out;
}

}  // namespace partlat
