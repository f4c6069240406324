#include "partlat/functionals.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace partlat {

std::uint64_t rank(const Partition &p) { return p.n() - p.num_blocks(); }

std::uint64_t size(const Partition &p) {
    std::uint64_t s = 0;
    for (auto b : p.block_sizes()) {
        s += static_cast<std::uint64_t>(b) * (b - 1) / 2;
    }
    return s;
}

double entropy(const Partition &p) {
    const double n = static_cast<double>(p.n());
    double e = 0.0;
    for (auto b : p.block_sizes()) {
        if (b == p.n()) {
            continue;  // ratio 1 contributes nothing
        }
        const double ratio = static_cast<double>(b) / n;
        e -= ratio * std::log2(ratio);
    }
    return e;
}

double logical_entropy(const Partition &p) {
    const double n = static_cast<double>(p.n());
    return (n * (n - 1.0) - 2.0 * static_cast<double>(size(p))) / (n * n);
}

std::uint64_t cosize(const Partition &p) {
    if (p.num_blocks() > 64) {
        throw std::overflow_error("cosize: more than 64 blocks");
    }
    if (p.num_blocks() == 64) {
        return ~std::uint64_t{0} >> 1;
    }
    return (std::uint64_t{1} << (p.num_blocks() - 1)) - 1;
}

Functionals functionals(const Partition &p) {
    return {rank(p), size(p), entropy(p), logical_entropy(p), cosize(p), class_vector(p)};
}

double FunctionalDescriptor::evaluate(const Partition &p) const {
    switch (kind) {
    case FunctionalKind::Size:
        return static_cast<double>(size(p));
    case FunctionalKind::Rank:
        return static_cast<double>(rank(p));
    case FunctionalKind::Entropy:
        return entropy(p);
    case FunctionalKind::LogicalEntropy:
        return logical_entropy(p);
    case FunctionalKind::Cosize:
        return static_cast<double>(cosize(p));
    }
    throw std::logic_error("unknown functional");
}

namespace {

const std::array<FunctionalDescriptor, 5> kDescriptors{{
    {FunctionalKind::Size, "size", OrderDirection::Preserving, Modularity::Supermodular},
    {FunctionalKind::Rank, "rank", OrderDirection::Preserving, Modularity::Submodular},
    {FunctionalKind::Entropy, "entropy", OrderDirection::Inverting, Modularity::Submodular},
    {FunctionalKind::LogicalEntropy, "logical_entropy", OrderDirection::Inverting, Modularity::Submodular},
    {FunctionalKind::Cosize, "cosize", OrderDirection::Inverting, Modularity::Supermodular},
}};

}  // namespace

const FunctionalDescriptor &FunctionalDescriptor::of(FunctionalKind kind) {
    return kDescriptors[static_cast<std::size_t>(kind)];
}

std::optional<FunctionalDescriptor> FunctionalDescriptor::by_name(std::string_view name) {
    if (name == "logical") {
        return of(FunctionalKind::LogicalEntropy);
    }
    for (const auto &d : kDescriptors) {
        if (d.name == name) {
            return d;
        }
    }
    return std::nullopt;
}

}  // namespace partlat
