#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "partlat/fuzzy.hpp"
#include "partlat/partition.hpp"

namespace fixtures {

/// "123|456|7" with 1-based digits; for n > 9 use commas inside blocks: "1,10|2,3".
inline partlat::Partition parse(std::string_view text) {
    std::vector<std::vector<std::size_t>> blocks(1);
    const bool commas = text.find(',') != std::string_view::npos;
    std::string number;
    auto flush = [&] {
        if (!number.empty()) {
            blocks.back().push_back(std::stoul(number) - 1);
            number.clear();
        }
    };
    for (char c : text) {
        if (c == '|') {
            flush();
            blocks.emplace_back();
        } else if (c == ',') {
            flush();
        } else if (commas) {
            number += c;
        } else {
            blocks.back().push_back(static_cast<std::size_t>(c - '1'));
        }
    }
    flush();
    std::size_t n = 0;
    for (const auto &b : blocks) {
        n += b.size();
    }
    return partlat::Partition::from_blocks(n, blocks);
}

inline partlat::Partition random_partition(std::size_t n, std::mt19937 &rng) {
    std::vector<long long> labels(n);
    std::uniform_int_distribution<long long> pick(0, static_cast<long long>(n) - 1);
    for (auto &l : labels) {
        l = pick(rng);
    }
    return partlat::Partition::canonicalize(labels);
}

/// Membership matrices of the two clusterings compared in the fuzzy worked
/// example (n = 4, 0-based supports).
inline partlat::MembershipMatrix example3_first() {
    return partlat::MembershipMatrix(4, 3,
                                     {0.7, 0.3, 0.0,  //
                                      0.4, 0.0, 0.6,  //
                                      0.2, 0.0, 0.8,  //
                                      0.0, 0.5, 0.5},
                                     std::vector<std::vector<std::size_t>>{{0, 1, 2}, {0, 3}, {1, 2, 3}});
}

inline partlat::MembershipMatrix example3_second() {
    return partlat::MembershipMatrix(4, 4,
                                     {0.4, 0.0, 0.0, 0.6,  //
                                      0.2, 0.3, 0.0, 0.5,  //
                                      0.0, 0.3, 0.4, 0.3,  //
                                      0.0, 0.0, 0.8, 0.2},
                                     std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}, {2, 3}, {0, 1, 2, 3}});
}

/// Random row-stochastic matrix with random supports; every element lies in
/// at least one support.
inline partlat::MembershipMatrix random_membership(std::size_t n, std::size_t m, std::mt19937 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::bernoulli_distribution keep(0.6);
    std::uniform_int_distribution<std::size_t> any(0, m - 1);
    std::vector<std::vector<std::size_t>> supports(m);
    std::vector<double> values(n * m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> mine;
        for (std::size_t l = 0; l < m; ++l) {
            if (keep(rng)) {
                mine.push_back(l);
            }
        }
        if (mine.empty()) {
            mine.push_back(any(rng));
        }
        double total = 0.0;
        for (auto l : mine) {
            supports[l].push_back(i);
            values[i * m + l] = u(rng) + 1e-3;
            total += values[i * m + l];
        }
        for (auto l : mine) {
            values[i * m + l] /= total;
        }
    }
    return partlat::MembershipMatrix(n, m, std::move(values), std::move(supports));
}

inline partlat::FuzzyPartition random_fuzzy(std::size_t n, std::mt19937 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    partlat::FuzzyPartition y{n, std::vector<double>(partlat::num_atoms(n))};
    for (auto &c : y.coords) {
        c = u(rng);
    }
    return y;
}

}  // namespace fixtures
