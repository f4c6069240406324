#include "partlat/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "partlat/errors.hpp"
#include "partlat/lattice.hpp"
#include "simplex.hpp"

namespace partlat {

MembershipMatrix::MembershipMatrix(std::size_t n, std::size_t m, std::vector<double> values,
                                   std::optional<std::vector<std::vector<std::size_t>>> supports, double row_tol)
    : n_(n), m_(m), values_(std::move(values)) {
    if (n == 0 || m == 0) {
        throw std::invalid_argument("membership matrix: n and m must be positive");
    }
    if (values_.size() != n * m) {
        throw std::invalid_argument("membership matrix: expected " + std::to_string(n * m) + " entries");
    }
    if (supports) {
        if (supports->size() != m) {
            throw std::invalid_argument("membership matrix: one support per cluster required");
        }
        support_.assign(m, std::vector<bool>(n, false));
        for (std::size_t l = 0; l < m; ++l) {
            for (auto e : (*supports)[l]) {
                if (e >= n) {
                    throw std::invalid_argument("membership matrix: support element out of range");
                }
                support_[l][e] = true;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t l = 0; l < m; ++l) {
            const double x = (*this)(i, l);
            if (!(x >= 0.0 && x <= 1.0)) {
                throw std::invalid_argument("membership matrix: entry (" + std::to_string(i) + ", " +
                                            std::to_string(l) + ") outside [0, 1]");
            }
            if (x > 0.0 && !in_support(i, l)) {
                throw std::invalid_argument("membership matrix: element " + std::to_string(i) +
                                            " has positive membership outside the support of cluster " +
                                            std::to_string(l));
            }
            row += x;
        }
        if (std::abs(row - 1.0) > row_tol) {
            throw std::invalid_argument("membership matrix: row " + std::to_string(i) + " sums to " +
                                        std::to_string(row));
        }
    }
}

MembershipMatrix MembershipMatrix::from_partition(const Partition &p) {
    std::vector<double> values(p.n() * p.num_blocks(), 0.0);
    for (std::size_t i = 0; i < p.n(); ++i) {
        values[i * p.num_blocks() + p.label(i)] = 1.0;
    }
    return MembershipMatrix(p.n(), p.num_blocks(), std::move(values));
}

bool MembershipMatrix::in_support(std::size_t i, std::size_t l) const {
    return support_.empty() || support_[l][i];
}

FuzzyPartition FuzzyPartition::from_partition(const Partition &p) {
    const auto ind = indicator(p);
    return {p.n(), std::vector<double>(ind.bits.begin(), ind.bits.end())};
}

FuzzyPartition embed(const MembershipMatrix &x) {
    const std::size_t n = x.n();
    FuzzyPartition y{n, std::vector<double>(num_atoms(n), 0.0)};
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++k) {
            double sum = 0.0;
            for (std::size_t l = 0; l < x.m(); ++l) {
                if (x.in_support(i, l) && x.in_support(j, l)) {
                    sum += x(i, l) * x(j, l);
                }
            }
            y.coords[k] = std::min(sum, 1.0);
        }
    }
    return y;
}

double combination_residual(const std::vector<std::pair<Partition, double>> &terms, const FuzzyPartition &y) {
    std::vector<double> acc(y.coords.size(), 0.0);
    double total = 0.0;
    for (const auto &[p, alpha] : terms) {
        if (p.n() != y.n) {
            throw SizeMismatch(p.n(), y.n);
        }
        if (!(alpha > 0.0)) {
            return std::numeric_limits<double>::infinity();
        }
        total += alpha;
        const auto ind = indicator(p);
        for (std::size_t k = 0; k < acc.size(); ++k) {
            acc[k] += alpha * ind.bits[k];
        }
    }
    double worst = std::abs(total - 1.0);
    for (std::size_t k = 0; k < acc.size(); ++k) {
        worst = std::max(worst, std::abs(acc[k] - y.coords[k]));
    }
    return worst;
}

namespace {

void require_same_n(const FuzzyPartition &y, const FuzzyPartition &z) {
    if (y.n != z.n) {
        throw SizeMismatch(y.n, z.n);
    }
}

void require_unit_cube(const FuzzyPartition &y) {
    if (y.n == 0 || y.coords.size() != num_atoms(y.n)) {
        throw std::invalid_argument("fuzzy partition: expected C(n,2) coordinates");
    }
    for (double c : y.coords) {
        if (!(c >= 0.0 && c <= 1.0)) {
            throw std::invalid_argument("fuzzy partition: coordinate outside [0, 1]");
        }
    }
}

// Coarsest partition holding the pair (i, j) together while keeping every
// forbidden pair apart, grown by merging blocks in lexicographic order.
Partition coarsest_avoiding(std::size_t n, std::size_t i, std::size_t j,
                            const std::vector<std::uint8_t> &forbidden) {
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t e = 0; e < n; ++e) {
        if (e == j) {
            continue;
        }
        blocks.push_back(e == i ? std::vector<std::size_t>{i, j} : std::vector<std::size_t>{e});
    }
    auto compatible = [&](const std::vector<std::size_t> &a, const std::vector<std::size_t> &b) {
        for (auto u : a) {
            for (auto v : b) {
                if (forbidden[AtomIndex::linear(n, std::min(u, v), std::max(u, v))]) {
                    return false;
                }
            }
        }
        return true;
    };
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t x = 0; x < blocks.size() && !merged; ++x) {
            for (std::size_t y = x + 1; y < blocks.size() && !merged; ++y) {
                if (compatible(blocks[x], blocks[y])) {
                    blocks[x].insert(blocks[x].end(), blocks[y].begin(), blocks[y].end());
                    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(y));
                    merged = true;
                }
            }
        }
    }
    return Partition::from_blocks(n, blocks);
}

ConvexCombination decompose_exhaustive(const FuzzyPartition &y, double tol) {
    const auto parts = enumerate(y.n, std::max(y.n, kEnumerationCap));
    // Rows: one per atom, plus the coefficient sum.
    std::vector<std::vector<double>> columns;
    columns.reserve(parts.size());
    for (const auto &p : parts) {
        const auto ind = indicator(p);
        std::vector<double> col(ind.bits.begin(), ind.bits.end());
        col.push_back(1.0);
        columns.push_back(std::move(col));
    }
    std::vector<double> rhs(y.coords);
    rhs.push_back(1.0);

    ConvexCombination out;
    out.method = DecompositionMethod::Exhaustive;
    auto solution = detail::find_nonnegative_solution(columns, rhs, tol);
    if (!solution) {
        out.residual_norm = std::numeric_limits<double>::infinity();
        return out;
    }
    for (std::size_t c = 0; c < parts.size(); ++c) {
        if ((*solution)[c] > 0.0) {
            out.terms.emplace_back(parts[c], (*solution)[c]);
        }
    }
    out.residual_norm = combination_residual(out.terms, y);
    out.success = out.residual_norm <= tol;
    return out;
}

}  // namespace

ConvexCombination decompose_greedy(const FuzzyPartition &y, double tol) {
    require_unit_cube(y);
    const std::size_t n = y.n;
    const std::size_t atoms = num_atoms(n);
    ConvexCombination out;
    out.method = DecompositionMethod::Greedy;

    std::vector<double> residual(y.coords);
    double mass = 1.0;
    while (true) {
        // Next atom: smallest residual still above tolerance (lowest index on ties).
        std::size_t next = atoms;
        for (std::size_t k = 0; k < atoms; ++k) {
            if (residual[k] > tol && (next == atoms || residual[k] < residual[next])) {
                next = k;
            }
        }
        if (next == atoms || mass <= tol) {
            break;
        }
        std::vector<std::uint8_t> forbidden(atoms, 0);
        for (std::size_t k = 0; k < atoms; ++k) {
            forbidden[k] = residual[k] <= tol ? 1 : 0;
        }
        const auto [i, j] = AtomIndex::from_linear(n, next);
        const Partition p = coarsest_avoiding(n, i, j, forbidden);
        const auto ind = indicator(p);
        double alpha = mass;
        for (std::size_t k = 0; k < atoms; ++k) {
            if (ind.bits[k]) {
                alpha = std::min(alpha, residual[k]);
            }
        }
        for (std::size_t k = 0; k < atoms; ++k) {
            if (ind.bits[k]) {
                residual[k] -= alpha;
                if (residual[k] <= tol) {
                    residual[k] = 0.0;
                }
            }
        }
        mass -= alpha;
        out.terms.emplace_back(p, alpha);
    }
    if (mass > tol) {
        out.terms.emplace_back(Partition::bottom(n), mass);
    }
    out.residual_norm = combination_residual(out.terms, y);
    out.success = out.residual_norm <= tol;
    return out;
}

ConvexCombination decompose(const FuzzyPartition &y, double tol, std::size_t exhaustive_cap) {
    ConvexCombination greedy = decompose_greedy(y, tol);
    if (greedy.success || y.n > exhaustive_cap) {
        return greedy;
    }
    ConvexCombination exhaustive = decompose_exhaustive(y, tol);
    if (exhaustive.success) {
        return exhaustive;
    }
    return exhaustive.residual_norm < greedy.residual_norm ? exhaustive : greedy;
}

double fuzzy_distance(const FuzzyPartition &y, const FuzzyPartition &z, Norm norm) {
    require_same_n(y, z);
    double acc = 0.0;
    for (std::size_t k = 0; k < y.coords.size(); ++k) {
        const double d = y.coords[k] - z.coords[k];
        acc += norm == Norm::L1 ? std::abs(d) : d * d;
    }
    return norm == Norm::L1 ? acc : std::sqrt(acc);
}

bool fuzzy_leq(const FuzzyPartition &y, const FuzzyPartition &z) {
    require_same_n(y, z);
    for (std::size_t k = 0; k < y.coords.size(); ++k) {
        if (y.coords[k] > z.coords[k]) {
            return false;
        }
    }
    return true;
}

FuzzyPartition fuzzy_meet(const FuzzyPartition &y, const FuzzyPartition &z) {
    require_same_n(y, z);
    FuzzyPartition out{y.n, y.coords};
    for (std::size_t k = 0; k < out.coords.size(); ++k) {
        out.coords[k] *= z.coords[k];
    }
    return out;
}

FuzzyPartition fuzzy_join(const FuzzyPartition &y, const FuzzyPartition &z, JoinMode mode) {
    require_same_n(y, z);
    const std::size_t n = y.n;
    auto coord = [n](const FuzzyPartition &v, std::size_t a, std::size_t b) {
        return v.coords[AtomIndex::linear(n, std::min(a, b), std::max(a, b))];
    };

    if (mode == JoinMode::OneStep) {
        FuzzyPartition out{n, std::vector<double>(y.coords.size(), 0.0)};
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j, ++k) {
                double best = std::max(y.coords[k], z.coords[k]);
                for (std::size_t via = 0; via < n; ++via) {
                    if (via != i && via != j) {
                        best = std::max(best, coord(y, i, via) * coord(z, j, via));
                    }
                }
                out.coords[k] = best;
            }
        }
        return out;
    }

    FuzzyPartition t{n, y.coords};
    for (std::size_t k = 0; k < t.coords.size(); ++k) {
        t.coords[k] = std::max(t.coords[k], z.coords[k]);
    }
    constexpr double kFixpointEps = 1e-12;
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j, ++k) {
                double best = t.coords[k];
                for (std::size_t via = 0; via < n; ++via) {
                    if (via != i && via != j) {
                        best = std::max(best, coord(t, i, via) * coord(t, j, via));
                    }
                }
                if (best > t.coords[k] + kFixpointEps) {
                    changed = true;
                }
                t.coords[k] = best;
            }
        }
    }
    return t;
}

}  // namespace partlat
