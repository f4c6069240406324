#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "partlat/functionals.hpp"
#include "partlat/partition.hpp"

namespace partlat {

inline constexpr std::size_t kHasseCap = 9;
inline constexpr std::size_t kClassifyCap = 6;

using PartitionFunction = std::function<double(const Partition &)>;

/// Covering graph of the partition lattice of an n-set. Vertices are indexed
/// in enumeration order; each undirected covering pair is stored once per side
/// of the adjacency lists.
class HasseGraph {
public:
    static HasseGraph build(std::size_t n, std::size_t cap = kHasseCap);

    std::size_t n() const { return n_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    const Partition &vertex(std::size_t v) const { return vertices_[v]; }
    const std::vector<Partition> &vertices() const { return vertices_; }
    const std::vector<std::size_t> &neighbors(std::size_t v) const { return adjacency_[v]; }
    std::optional<std::size_t> index_of(const Partition &p) const;

private:
    std::size_t n_ = 0;
    std::size_t num_edges_ = 0;
    std::vector<Partition> vertices_;
    std::unordered_map<Partition, std::size_t> index_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

struct WeightedPath {
    std::vector<Partition> vertices;
    double weight = 0.0;

    bool visits(const Partition &p) const;
};

/// Single-source minimum-weight paths under edge weights |f(P) - f(Q)|.
/// Dijkstra with a binary heap; ties go to the lower vertex index so paths are
/// reproducible. Throws std::invalid_argument on a zero-weight edge.
class MinWeightPaths {
public:
    MinWeightPaths(const HasseGraph &graph, const PartitionFunction &f);

    /// Runs from `source`; a vertex in `avoid` is treated as deleted.
    void run(std::size_t source, std::optional<std::size_t> avoid = std::nullopt);

    double distance_to(std::size_t target) const { return dist_[target]; }
    bool reachable(std::size_t target) const;
    WeightedPath path_to(std::size_t target) const;

    double value(std::size_t v) const { return values_[v]; }

private:
    const HasseGraph *graph_;
    std::vector<double> values_;
    std::vector<double> dist_;
    std::vector<std::size_t> parent_;
    std::size_t source_ = 0;
};

/// Minimum-f-weight path between P and Q. Throws std::invalid_argument if either
/// is not a vertex of `graph` or an edge has zero weight.
WeightedPath min_weight_path(const HasseGraph &graph, const FunctionalDescriptor &f,
                             const Partition &p, const Partition &q);

/// Cheapest path from P to Q that visits `via`.
WeightedPath min_weight_path_via(const HasseGraph &graph, const FunctionalDescriptor &f,
                                 const Partition &p, const Partition &via, const Partition &q);

/// Cheapest path from P to Q that never visits `avoid`; nullopt if none exists.
std::optional<WeightedPath> min_weight_path_avoiding(const HasseGraph &graph,
                                                     const FunctionalDescriptor &f,
                                                     const Partition &p, const Partition &avoid,
                                                     const Partition &q);

/// Closed form of the minimum-weight distance selected by the declared order
/// direction and modularity class of f:
///   preserving + supermodular: f(P) + f(Q) - 2 f(P ^ Q)
///   preserving + submodular:   2 f(P v Q) - f(P) - f(Q)
///   inverting  + supermodular: f(P) + f(Q) - 2 f(P v Q)
///   inverting  + submodular:   2 f(P ^ Q) - f(P) - f(Q)
/// Throws std::invalid_argument if f declares no modularity class.
double closed_form_delta(const FunctionalDescriptor &f, const Partition &p, const Partition &q);

enum class Monotonicity { StrictlyPreserving, StrictlyInverting, Neither };

struct Classification {
    bool symmetric = false;
    Monotonicity order_direction = Monotonicity::Neither;
    bool supermodular = false;
    bool submodular = false;
    bool totally_positive = false;
};

/// Exhaustive empirical classification over every partition and pair for an n-set.
/// Comparisons use absolute tolerance `tol`.
Classification classify(std::size_t n, const PartitionFunction &f, double tol = 1e-12,
                        std::size_t cap = kClassifyCap);

enum class MoebiusDirection { FromBelow, FromAbove };

struct MoebiusInversion {
    std::vector<Partition> domain;  // enumeration order
    std::vector<double> mu;

    double at(const Partition &p) const;
};

/// FromBelow: f(P) = sum_{Q <= P} mu(Q).  FromAbove: f(P) = sum_{Q >= P} mu(Q).
MoebiusInversion moebius_inversion(std::size_t n, const PartitionFunction &f,
                                   MoebiusDirection direction, std::size_t cap = kClassifyCap);

}  // namespace partlat
