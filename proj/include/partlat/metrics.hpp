#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "partlat/partition.hpp"

namespace partlat {

enum class DistanceKind { HD, VI, MMD, DeltaRank, DeltaLogical, DeltaCosize, RelationMatrix };

/// Lower-case CLI name: hd, vi, mmd, rank, logical, cosize, relation.
std::string_view name_of(DistanceKind kind);
/// Accepts the CLI names plus delta_rank / delta_logical / delta_cosize / relation_matrix.
std::optional<DistanceKind> distance_kind_by_name(std::string_view name);
bool is_integral(DistanceKind kind);

/// Number of atoms below exactly one of P and Q: s(P) + s(Q) - 2 s(P ^ Q).
std::uint64_t hd(const Partition &p, const Partition &q);

/// 2 e(P ^ Q) - e(P) - e(Q), base-2 entropy.
double vi(const Partition &p, const Partition &q);

/// Fewest elements whose deletion makes the induced partitions equal, computed
/// as n minus a maximum-weight assignment of blocks weighted by |A n B|.
std::uint64_t mmd(const Partition &p, const Partition &q);

inline constexpr std::size_t kMmdOracleCap = 20;

/// MMD by scanning every non-empty subset A of the ground set for P^A = Q^A.
std::uint64_t mmd_oracle(const Partition &p, const Partition &q, std::size_t cap = kMmdOracleCap);

/// |P| + |Q| - 2 |P v Q|.
std::uint64_t delta_rank(const Partition &p, const Partition &q);

/// 2 h(P ^ Q) - h(P) - h(Q) with h the logical entropy.
double delta_logical(const Partition &p, const Partition &q);

/// cs(P) + cs(Q) - 2 cs(P v Q).
std::uint64_t delta_cosize(const Partition &p, const Partition &q);

/// Ones in the symmetric difference of the two equivalence relations, taken over
/// ordered pairs including the diagonal.
std::uint64_t relation_matrix_distance(const Partition &p, const Partition &q);

/// Dispatches on `kind`; integral distances are returned exactly as doubles.
double distance(DistanceKind kind, const Partition &p, const Partition &q);

struct ComplementHdBounds {
    std::uint64_t lower;
    std::uint64_t upper;
    /// c_1(P) <= 2 + sum_{k>1} (k-2) c_k(P): some complement reaches `lower`.
    bool lower_tight;
};

/// Bounds on HD(P, Q) over complements Q of P.
ComplementHdBounds complement_hd_bounds(const Partition &p);

/// 1 + sum_{k>1} c_k(P) (k - 1).
std::uint64_t theta(const Partition &p);

/// Least size of a complement of P in closed form. Only defined when
/// 2 + sum_{k>1} (k-2) c_k(P) < c_1(P); throws ConditionNotMet otherwise, in
/// which case the lower bound of complement_hd_bounds applies instead.
std::uint64_t min_complement_size(const Partition &p);

}  // namespace partlat
