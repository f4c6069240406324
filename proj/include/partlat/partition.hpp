#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace partlat {

using Label = std::uint32_t;

/// Set partition of {0, ..., n-1} stored as a restricted-growth string:
/// labels[0] == 0 and every label is at most one above the running maximum.
/// Two partitions are equal iff their label sequences are equal.
class Partition {
public:
    /// Relabels arbitrary integer labels in first-occurrence order.
    /// Throws std::invalid_argument on an empty sequence.
    static Partition canonicalize(std::span<const long long> raw_labels);
    static Partition canonicalize(std::initializer_list<long long> raw_labels);

    /// Builds from explicit blocks; every element of [0, n) must appear exactly once.
    static Partition from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>> &blocks);

    /// Trusts that `labels` is already a restricted-growth string.
    static Partition from_canonical(std::vector<Label> labels, std::size_t num_blocks);

    static Partition bottom(std::size_t n);
    static Partition top(std::size_t n);

    std::size_t n() const { return labels_.size(); }
    std::size_t num_blocks() const { return num_blocks_; }
    const std::vector<Label> &labels() const { return labels_; }
    Label label(std::size_t i) const { return labels_[i]; }

    /// Blocks ordered by smallest element; elements ascending inside each block.
    std::vector<std::vector<std::size_t>> blocks() const;
    std::vector<std::size_t> block_sizes() const;

    bool same_block(std::size_t i, std::size_t j) const { return labels_[i] == labels_[j]; }
    bool is_bottom() const { return num_blocks_ == labels_.size(); }
    bool is_top() const { return num_blocks_ == 1; }

    friend bool operator==(const Partition &, const Partition &) = default;
    friend std::strong_ordering operator<=>(const Partition &a, const Partition &b) {
        return a.labels_ <=> b.labels_;
    }

private:
    Partition(std::vector<Label> labels, std::size_t num_blocks)
        : labels_(std::move(labels)), num_blocks_(num_blocks) {}

    std::vector<Label> labels_;
    std::size_t num_blocks_ = 0;
};

/// Block notation with 1-based element names, e.g. "123|456|7".
/// Elements are comma-separated when n > 9.
std::string to_block_string(const Partition &p);

/// Number of atoms [ij], i < j, of an n-set.
constexpr std::size_t num_atoms(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Lexicographic position of the pair (i, j), i < j, among all pairs of an n-set.
struct AtomIndex {
    std::size_t i;
    std::size_t j;

    static std::size_t linear(std::size_t n, std::size_t i, std::size_t j) {
        return i * (2 * n - i - 1) / 2 + (j - i - 1);
    }
    static AtomIndex from_linear(std::size_t n, std::size_t k);
};

/// Boolean vector over atoms; bit k is set iff the two elements of atom k share a block.
struct IndicatorVector {
    std::size_t n = 0;
    std::vector<std::uint8_t> bits;

    bool at(std::size_t i, std::size_t j) const { return bits[AtomIndex::linear(n, i, j)] != 0; }
    /// bits[ij] and bits[jk] imply bits[ik] for all distinct i, j, k.
    bool is_transitively_closed() const;

    friend bool operator==(const IndicatorVector &, const IndicatorVector &) = default;
};

IndicatorVector indicator(const Partition &p);

/// Inverse of indicator(); throws std::invalid_argument if the vector is not closed.
Partition from_indicator(const IndicatorVector &v);

/// counts[k-1] = number of k-cardinal blocks.
struct ClassVector {
    std::vector<std::size_t> counts;

    std::size_t operator[](std::size_t k) const { return k >= 1 && k <= counts.size() ? counts[k - 1] : 0; }
    friend bool operator==(const ClassVector &, const ClassVector &) = default;
    friend auto operator<=>(const ClassVector &, const ClassVector &) = default;
};

ClassVector class_vector(const Partition &p);

}  // namespace partlat

template <>
struct std::hash<partlat::Partition> {
    std::size_t operator()(const partlat::Partition &p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto l : p.labels()) {
            h ^= l + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};
