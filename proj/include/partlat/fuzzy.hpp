#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "partlat/partition.hpp"

namespace partlat {

/// n x m row-stochastic matrix: entry (i, l) is the membership of element i in
/// cluster l. Cluster l may carry an explicit support A_l; without one every
/// element may belong to it.
class MembershipMatrix {
public:
    /// `values` is row-major n x m. Throws std::invalid_argument when a row does
    /// not sum to 1 within `row_tol`, an entry leaves [0, 1], or an element has
    /// positive membership in a cluster whose support excludes it.
    MembershipMatrix(std::size_t n, std::size_t m, std::vector<double> values,
                     std::optional<std::vector<std::vector<std::size_t>>> supports = std::nullopt,
                     double row_tol = 1e-9);

    /// Hard matrix with one column per block of P.
    static MembershipMatrix from_partition(const Partition &p);

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    double operator()(std::size_t i, std::size_t l) const { return values_[i * m_ + l]; }
    bool in_support(std::size_t i, std::size_t l) const;

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<double> values_;
    std::vector<std::vector<bool>> support_;  // empty: full supports
};

/// Point of [0,1]^C(n,2) indexed by atoms in lexicographic pair order.
struct FuzzyPartition {
    std::size_t n = 0;
    std::vector<double> coords;

    static FuzzyPartition from_partition(const Partition &p);
    double at(std::size_t i, std::size_t j) const { return coords[AtomIndex::linear(n, i, j)]; }
};

/// y_[ij] = sum over clusters l whose support holds i and j of x_il * x_jl.
FuzzyPartition embed(const MembershipMatrix &x);

enum class DecompositionMethod { Greedy, Exhaustive };

struct ConvexCombination {
    std::vector<std::pair<Partition, double>> terms;
    /// Largest absolute reconstruction error over coordinates and the coefficient sum.
    double residual_norm = 0.0;
    bool success = false;
    DecompositionMethod method = DecompositionMethod::Greedy;
};

/// max(|sum alpha - 1|, max_k |sum alpha I_P[k] - y_k|); also rejects non-positive
/// coefficients by returning +infinity.
double combination_residual(const std::vector<std::pair<Partition, double>> &terms, const FuzzyPartition &y);

inline constexpr std::size_t kExhaustiveDecompositionCap = 7;

/// Writes y as a convex combination of partition indicators. Tries the greedy
/// descent from the top partition first; if it leaves a residual above `tol`,
/// falls back to an exact vertex-subset feasibility search (phase-one simplex
/// over all B_n indicators) when n <= `exhaustive_cap`. On failure the returned
/// combination has success == false and the residual of the best attempt.
ConvexCombination decompose(const FuzzyPartition &y, double tol = 1e-9,
                            std::size_t exhaustive_cap = kExhaustiveDecompositionCap);

/// The greedy descent alone.
ConvexCombination decompose_greedy(const FuzzyPartition &y, double tol = 1e-9);

enum class Norm { L1, L2 };

double fuzzy_distance(const FuzzyPartition &y, const FuzzyPartition &z, Norm norm);

/// Coordinate-wise y <= z.
bool fuzzy_leq(const FuzzyPartition &y, const FuzzyPartition &z);

/// Coordinate-wise product.
FuzzyPartition fuzzy_meet(const FuzzyPartition &y, const FuzzyPartition &z);

enum class JoinMode {
    /// (y v z)_[ij] = max{ y_ij, z_ij, max_k y_ik z_jk } applied once.
    OneStep,
    /// Merge both inputs by coordinate max, then repeat the max-product update
    /// until no coordinate moves by 1e-12. Agrees with the hard join on vertices.
    Closure,
};

FuzzyPartition fuzzy_join(const FuzzyPartition &y, const FuzzyPartition &z, JoinMode mode);

}  // namespace partlat
