#include "partlat/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "partlat/errors.hpp"

namespace partlat {

Instance::Instance(std::vector<Partition> partitions) : partitions_(std::move(partitions)) {
    if (partitions_.size() < 2) {
        throw std::invalid_argument("instance needs at least two partitions");
    }
    for (const auto &p : partitions_) {
        if (p.n() != partitions_.front().n()) {
            throw SizeMismatch(partitions_.front().n(), p.n());
        }
    }
}

double consensus_objective(const Instance &inst, DistanceKind kind, const Partition &q) {
    double total = 0.0;
    for (const auto &p : inst.partitions()) {
        total += distance(kind, q, p);
    }
    return total;
}

bool has_closed_form_consensus(DistanceKind kind) {
    switch (kind) {
    case DistanceKind::HD:
    case DistanceKind::VI:
    case DistanceKind::DeltaLogical:
    case DistanceKind::DeltaRank:
    case DistanceKind::DeltaCosize:
        return true;
    default:
        return false;
    }
}

ConsensusResult consensus(const Instance &inst, DistanceKind kind) {
    if (!has_closed_form_consensus(kind)) {
        throw UnsupportedMetric("consensus: no closed-form consensus for metric " + std::string(name_of(kind)) +
                                "; use brute_force_consensus");
    }
    const bool via_join = kind == DistanceKind::DeltaRank || kind == DistanceKind::DeltaCosize;
    Partition result = via_join ? join_all(inst.partitions()) : meet_all(inst.partitions());
    const double objective = consensus_objective(inst, kind, result);
    return {std::move(result), objective};
}

BruteForceConsensus brute_force_consensus(const Instance &inst, DistanceKind kind, std::size_t cap,
                                          double tie_tol) {
    if (inst.n() > cap) {
        throw CapExceeded("brute_force_consensus", inst.n(), cap);
    }
    const double tol = is_integral(kind) ? 0.0 : tie_tol;
    std::vector<std::pair<Partition, double>> scored;
    for_each_partition(inst.n(), [&](const Partition &q) {
        scored.emplace_back(q, consensus_objective(inst, kind, q));
    });
    BruteForceConsensus out{{}, scored.front().second};
    for (const auto &[q, obj] : scored) {
        out.objective = std::min(out.objective, obj);
    }
    for (const auto &[q, obj] : scored) {
        if (obj <= out.objective + tol) {
            out.minimizers.push_back(q);
        }
    }
    std::sort(out.minimizers.begin(), out.minimizers.end());
    return out;
}

double dispersion(const Partition &q, const Instance &inst) {
    if (q.n() != inst.n()) {
        throw SizeMismatch(q.n(), inst.n());
    }
    const auto &ps = inst.partitions();
    const std::size_t m = ps.size();
    std::vector<std::uint64_t> to_q(m);
    for (std::size_t k = 0; k < m; ++k) {
        to_q[k] = hd(ps[k], q);
    }
    double total = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = k + 1; l < m; ++l) {
            total += static_cast<double>(to_q[k] + to_q[l]) - static_cast<double>(hd(ps[k], ps[l]));
        }
    }
    return total / static_cast<double>(m - 1);
}

FuzzyPartition FuzzyConsensus::coords() const {
    FuzzyPartition y{n, std::vector<double>(counts.size())};
    for (std::size_t k = 0; k < counts.size(); ++k) {
        y.coords[k] = at(k);
    }
    return y;
}

FuzzyConsensus fuzzy_consensus(std::span<const Partition> partitions) {
    if (partitions.empty()) {
        throw std::invalid_argument("fuzzy_consensus: empty instance");
    }
    FuzzyConsensus t;
    t.n = partitions.front().n();
    t.m = partitions.size();
    t.counts.assign(num_atoms(t.n), 0);
    for (const auto &p : partitions) {
        if (p.n() != t.n) {
            throw SizeMismatch(t.n, p.n());
        }
        const auto ind = indicator(p);
        for (std::size_t k = 0; k < t.counts.size(); ++k) {
            t.counts[k] += ind.bits[k];
        }
    }
    return t;
}

Partition strong_patterns(const FuzzyConsensus &t) {
    Partition result = Partition::bottom(t.n);
    for (std::size_t k = 0; k < t.counts.size(); ++k) {
        if (t.counts[k] == t.m) {
            const auto [i, j] = AtomIndex::from_linear(t.n, k);
            result = join(result, atom(t.n, i, j));
        }
    }
    return result;
}

}  // namespace partlat
