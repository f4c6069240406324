#include "partlat/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace partlat {

Partition Partition::canonicalize(std::span<const long long> raw_labels) {
    if (raw_labels.empty()) {
        throw std::invalid_argument("canonicalize: empty label sequence");
    }
    std::unordered_map<long long, Label> seen;
    std::vector<Label> labels;
    labels.reserve(raw_labels.size());
    for (long long raw : raw_labels) {
        auto [it, inserted] = seen.try_emplace(raw, static_cast<Label>(seen.size()));
        labels.push_back(it->second);
    }
    return Partition(std::move(labels), seen.size());
}

Partition Partition::canonicalize(std::initializer_list<long long> raw_labels) {
    return canonicalize(std::span<const long long>(raw_labels.begin(), raw_labels.size()));
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>> &blocks) {
    std::vector<long long> raw(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
            throw std::invalid_argument("from_blocks: empty block");
        }
        for (auto e : blocks[b]) {
            if (e >= n || raw[e] != -1) {
                throw std::invalid_argument("from_blocks: element out of range or repeated");
            }
            raw[e] = static_cast<long long>(b);
        }
    }
    if (std::find(raw.begin(), raw.end(), -1) != raw.end()) {
        throw std::invalid_argument("from_blocks: blocks do not cover the ground set");
    }
    return canonicalize(raw);
}

Partition Partition::from_canonical(std::vector<Label> labels, std::size_t num_blocks) {
    return Partition(std::move(labels), num_blocks);
}

Partition Partition::bottom(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("bottom: n must be positive");
    }
    std::vector<Label> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = static_cast<Label>(i);
    }
    return Partition(std::move(labels), n);
}

Partition Partition::top(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("top: n must be positive");
    }
    return Partition(std::vector<Label>(n, 0), 1);
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
    std::vector<std::vector<std::size_t>> out(num_blocks_);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        out[labels_[i]].push_back(i);
    }
    return out;
}

std::vector<std::size_t> Partition::block_sizes() const {
    std::vector<std::size_t> out(num_blocks_, 0);
    for (auto l : labels_) {
        ++out[l];
    }
    return out;
}

std::string to_block_string(const Partition &p) {
    std::string out;
    const bool wide = p.n() > 9;
    bool first_block = true;
    for (const auto &block : p.blocks()) {
        if (!first_block) {
            out += '|';
        }
        first_block = false;
        bool first = true;
        for (auto e : block) {
            if (wide && !first) {
                out += ',';
            }
            first = false;
            out += std::to_string(e + 1);
        }
    }
    return out;
}

AtomIndex AtomIndex::from_linear(std::size_t n, std::size_t k) {
    std::size_t i = 0;
    while (k >= n - i - 1) {
        k -= n - i - 1;
        ++i;
    }
    return {i, i + 1 + k};
}

bool IndicatorVector::is_transitively_closed() const {
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (b == a) {
                continue;
            }
            if (!at(std::min(a, b), std::max(a, b))) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                if (c == a || c == b) {
                    continue;
                }
                if (at(std::min(b, c), std::max(b, c)) && !at(std::min(a, c), std::max(a, c))) {
                    return false;
                }
            }
        }
    }
    return true;
}

IndicatorVector indicator(const Partition &p) {
    const std::size_t n = p.n();
    IndicatorVector v{n, std::vector<std::uint8_t>(num_atoms(n), 0)};
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++k) {
            v.bits[k] = p.same_block(i, j) ? 1 : 0;
        }
    }
    return v;
}

Partition from_indicator(const IndicatorVector &v) {
    if (v.n == 0 || v.bits.size() != num_atoms(v.n)) {
        throw std::invalid_argument("from_indicator: malformed vector");
    }
    if (!v.is_transitively_closed()) {
        throw std::invalid_argument("from_indicator: vector is not transitively closed");
    }
    std::vector<long long> raw(v.n);
    for (std::size_t j = 0; j < v.n; ++j) {
        raw[j] = static_cast<long long>(j);
        for (std::size_t i = 0; i < j; ++i) {
            if (v.at(i, j)) {
                raw[j] = raw[i];
                break;
            }
        }
    }
    return Partition::canonicalize(raw);
}

ClassVector class_vector(const Partition &p) {
    ClassVector c{std::vector<std::size_t>(p.n(), 0)};
    for (auto s : p.block_sizes()) {
        ++c.counts[s - 1];
    }
    return c;
}

}  // namespace partlat
