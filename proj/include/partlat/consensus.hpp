#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "partlat/fuzzy.hpp"
#include "partlat/lattice.hpp"
#include "partlat/metrics.hpp"
#include "partlat/partition.hpp"

namespace partlat {

/// Multiset of at least two partitions of a common n-set.
class Instance {
public:
    /// Throws std::invalid_argument when fewer than two partitions are given
    /// and SizeMismatch when their ground sets differ.
    explicit Instance(std::vector<Partition> partitions);

    std::size_t n() const { return partitions_.front().n(); }
    std::size_t size() const { return partitions_.size(); }
    const std::vector<Partition> &partitions() const { return partitions_; }

private:
    std::vector<Partition> partitions_;
};

/// Sum of d(q, P_k) over the instance.
double consensus_objective(const Instance &inst, DistanceKind kind, const Partition &q);

struct ConsensusResult {
    Partition partition;
    double objective;
};

/// Closed-form consensus: the meet of the instance for HD, VI and the logical
/// entropy distance, the join for the rank and co-size distances. Other
/// metrics (MMD, relation matrix) throw UnsupportedMetric.
ConsensusResult consensus(const Instance &inst, DistanceKind kind);

/// True when consensus() accepts `kind`.
bool has_closed_form_consensus(DistanceKind kind);

struct BruteForceConsensus {
    std::vector<Partition> minimizers;  // canonical (label) order
    double objective;
};

/// Exhaustive scan over every partition of the n-set. Real-valued objectives are
/// tied within `tie_tol`.
BruteForceConsensus brute_force_consensus(const Instance &inst, DistanceKind kind,
                                          std::size_t cap = kExhaustiveCap, double tie_tol = 1e-9);

/// (1/(m-1)) sum_{k<k'} [HD(P_k, Q) + HD(Q, P_k') - HD(P_k, P_k')].
double dispersion(const Partition &q, const Instance &inst);

/// Coordinate mean of the instance indicators, kept as integer counts out of m.
struct FuzzyConsensus {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::size_t> counts;  // per atom: how many partitions join it

    double at(std::size_t k) const { return static_cast<double>(counts[k]) / static_cast<double>(m); }
    FuzzyPartition coords() const;
};

/// Throws std::invalid_argument on an empty collection.
FuzzyConsensus fuzzy_consensus(std::span<const Partition> partitions);

/// Join of the atoms on which every partition agrees (count == m); bottom if none.
Partition strong_patterns(const FuzzyConsensus &t);

}  // namespace partlat
