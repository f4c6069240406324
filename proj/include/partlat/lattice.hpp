#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <vector>

#include "partlat/partition.hpp"

namespace partlat {

inline constexpr std::size_t kEnumerationCap = 12;
inline constexpr std::size_t kExhaustiveCap = 7;

/// P <= Q: every block of P lies inside a block of Q (Q coarsens P).
bool leq(const Partition &p, const Partition &q);

/// Coarsest common refinement: non-empty intersections of blocks.
Partition meet(const Partition &p, const Partition &q);

/// Finest common coarsening: connected components of the union of block relations.
Partition join(const Partition &p, const Partition &q);

Partition meet_all(std::span<const Partition> ps);
Partition join_all(std::span<const Partition> ps);

/// The atom [ij]: {i, j} together and every other element alone.
Partition atom(std::size_t n, std::size_t i, std::size_t j);

/// Bell number via B_n = sum_k C(n-1, k) B_k. Exact for n <= 25.
std::uint64_t bell_number(std::size_t n);

/// Calls `visit` once per partition of an n-set in restricted-growth lexicographic order.
void for_each_partition(std::size_t n, const std::function<void(const Partition &)> &visit);

/// All B_n partitions in restricted-growth lexicographic order.
std::vector<Partition> enumerate(std::size_t n, std::size_t cap = kEnumerationCap);

struct CoveringNeighbors {
    std::vector<Partition> coarsenings;  // two blocks merged
    std::vector<Partition> refinements;  // one block split in two
};

CoveringNeighbors covering_neighbors(const Partition &p);

/// Every Q with meet(P, Q) = bottom and join(P, Q) = top.
std::vector<Partition> complements(const Partition &p, std::size_t cap = kExhaustiveCap);

/// At most one non-singleton block.
bool is_modular(const Partition &p);

/// Partition of `subset` induced by P, re-indexed by position in the sorted subset.
Partition induced(const Partition &p, std::span<const std::size_t> subset);

/// { s(P) : P a partition of an n-set }.
std::set<std::uint64_t> available_sizes(std::size_t n, std::size_t cap = kEnumerationCap);

}  // namespace partlat
