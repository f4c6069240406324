#include "partlat/metrics.hpp"

#include <array>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "partlat/errors.hpp"
#include "partlat/functionals.hpp"
#include "partlat/hungarian.hpp"
#include "partlat/lattice.hpp"

namespace partlat {

namespace {

void require_same_n(const Partition &p, const Partition &q) {
    if (p.n() != q.n()) {
        throw SizeMismatch(p.n(), q.n());
    }
}

std::uint64_t sum_of_squares(const Partition &p) {
    std::uint64_t s = 0;
    for (auto b : p.block_sizes()) {
        s += static_cast<std::uint64_t>(b) * b;
    }
    return s;
}

std::uint64_t binom2(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

constexpr std::array<std::pair<std::string_view, DistanceKind>, 11> kNames{{
    {"hd", DistanceKind::HD},
    {"vi", DistanceKind::VI},
    {"mmd", DistanceKind::MMD},
    {"rank", DistanceKind::DeltaRank},
    {"logical", DistanceKind::DeltaLogical},
    {"cosize", DistanceKind::DeltaCosize},
    {"relation", DistanceKind::RelationMatrix},
    {"delta_rank", DistanceKind::DeltaRank},
    {"delta_logical", DistanceKind::DeltaLogical},
    {"delta_cosize", DistanceKind::DeltaCosize},
    {"relation_matrix", DistanceKind::RelationMatrix},
}};

}  // namespace

std::string_view name_of(DistanceKind kind) {
    for (const auto &[name, k] : kNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::optional<DistanceKind> distance_kind_by_name(std::string_view name) {
    for (const auto &[n, k] : kNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

bool is_integral(DistanceKind kind) {
    return kind != DistanceKind::VI && kind != DistanceKind::DeltaLogical;
}

std::uint64_t hd(const Partition &p, const Partition &q) {
    require_same_n(p, q);
    return size(p) + size(q) - 2 * size(meet(p, q));
}

double vi(const Partition &p, const Partition &q) {
    require_same_n(p, q);
    return 2.0 * entropy(meet(p, q)) - (entropy(p) + entropy(q));
}

std::uint64_t mmd(const Partition &p, const Partition &q) {
    require_same_n(p, q);
    std::vector<std::vector<std::int64_t>> overlap(p.num_blocks(),
                                                   std::vector<std::int64_t>(q.num_blocks(), 0));
    for (std::size_t i = 0; i < p.n(); ++i) {
        ++overlap[p.label(i)][q.label(i)];
    }
    const auto matched = max_weight_assignment(overlap).total_weight;
    return p.n() - static_cast<std::uint64_t>(matched);
}

std::uint64_t mmd_oracle(const Partition &p, const Partition &q, std::size_t cap) {
    require_same_n(p, q);
    const std::size_t n = p.n();
    if (n > cap || n >= 64) {
        throw CapExceeded("mmd_oracle", n, cap);
    }
    std::uint64_t best = n - 1;  // any singleton A agrees
    std::vector<std::size_t> subset;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const auto kept = static_cast<std::uint64_t>(__builtin_popcountll(mask));
        if (n - kept >= best) {
            continue;
        }
        subset.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) {
                subset.push_back(i);
            }
        }
        if (induced(p, subset) == induced(q, subset)) {
            best = n - kept;
        }
    }
    return best;
}

std::uint64_t delta_rank(const Partition &p, const Partition &q) {
    require_same_n(p, q);
    return p.num_blocks() + q.num_blocks() - 2 * join(p, q).num_blocks();
}

double delta_logical(const Partition &p, const Partition &q) {
    require_same_n(p, q);
    return 2.0 * logical_entropy(meet(p, q)) - (logical_entropy(p) + logical_entropy(q));
}

std::uint64_t delta_cosize(const Partition &p, const Partition &q) {
    require_same_n(p, q);
    return cosize(p) + cosize(q) - 2 * cosize(join(p, q));
}

std::uint64_t relation_matrix_distance(const Partition &p, const Partition &q) {
    require_same_n(p, q);
    return sum_of_squares(p) + sum_of_squares(q) - 2 * sum_of_squares(meet(p, q));
}

double distance(DistanceKind kind, const Partition &p, const Partition &q) {
    switch (kind) {
    case DistanceKind::HD:
        return static_cast<double>(hd(p, q));
    case DistanceKind::VI:
        return vi(p, q);
    case DistanceKind::MMD:
        return static_cast<double>(mmd(p, q));
    case DistanceKind::DeltaRank:
        return static_cast<double>(delta_rank(p, q));
    case DistanceKind::DeltaLogical:
        return delta_logical(p, q);
    case DistanceKind::DeltaCosize:
        return static_cast<double>(delta_cosize(p, q));
    case DistanceKind::RelationMatrix:
        return static_cast<double>(relation_matrix_distance(p, q));
    }
    throw std::logic_error("unknown distance kind");
}

ComplementHdBounds complement_hd_bounds(const Partition &p) {
    const auto c = class_vector(p);
    std::int64_t available = 2;
    for (std::size_t k = 2; k <= p.n(); ++k) {
        available += static_cast<std::int64_t>(k - 2) * static_cast<std::int64_t>(c[k]);
    }
    const std::uint64_t s = size(p);
    return {s + p.num_blocks() - 1, s + binom2(p.num_blocks()),
            static_cast<std::int64_t>(c[1]) <= available};
}

std::uint64_t theta(const Partition &p) {
    const auto c = class_vector(p);
    std::uint64_t t = 1;
    for (std::size_t k = 2; k <= p.n(); ++k) {
        t += c[k] * (k - 1);
    }
    return t;
}

std::uint64_t min_complement_size(const Partition &p) {
    if (complement_hd_bounds(p).lower_tight) {
        throw ConditionNotMet("min_complement_size: c_1(P) <= 2 + sum (k-2) c_k(P); "
                              "the complement HD lower bound applies instead");
    }
    const std::uint64_t n = p.n();
    const std::uint64_t t = theta(p);
    const std::uint64_t lo = n / t;
    const std::uint64_t hi = (n + t - 1) / t;
    return (t * (lo + 1) - n) * binom2(lo) + (n - t * lo) * binom2(hi);
}

}  // namespace partlat
