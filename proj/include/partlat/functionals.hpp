#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "partlat/partition.hpp"

namespace partlat {

/// n - |P|.
std::uint64_t rank(const Partition &p);

/// Number of atoms below P: sum over blocks of C(|A|, 2).
std::uint64_t size(const Partition &p);

/// Shannon entropy of the block proportions, base 2.
double entropy(const Partition &p);

/// (n(n-1) - 2 s(P)) / n^2.
double logical_entropy(const Partition &p);

/// Number of two-block partitions coarser than P, 2^(|P|-1) - 1.
/// Throws std::overflow_error when |P| > 64.
std::uint64_t cosize(const Partition &p);

struct Functionals {
    std::uint64_t rank;
    std::uint64_t size;
    double entropy;
    double logical_entropy;
    std::uint64_t cosize;
    ClassVector class_vector;
};

Functionals functionals(const Partition &p);

enum class FunctionalKind { Size, Rank, Entropy, LogicalEntropy, Cosize };
enum class OrderDirection { Preserving, Inverting };
enum class Modularity { Supermodular, Submodular };

/// A symmetric, strictly monotone partition functional with its declared
/// monotonicity and modularity class. The declared class selects the
/// closed form of the induced minimum-weight distance.
struct FunctionalDescriptor {
    FunctionalKind kind;
    std::string_view name;
    OrderDirection order_direction;
    std::optional<Modularity> modularity;

    double evaluate(const Partition &p) const;

    static const FunctionalDescriptor &of(FunctionalKind kind);
    /// Accepts size, rank, entropy, logical_entropy (or logical), cosize.
    static std::optional<FunctionalDescriptor> by_name(std::string_view name);
};

}  // namespace partlat
