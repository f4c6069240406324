#include "partlat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "partlat/errors.hpp"
#include "partlat/functionals.hpp"

namespace partlat {

namespace {

void require_same_n(const Partition &p, const Partition &q) {
    if (p.n() != q.n()) {
        throw SizeMismatch(p.n(), q.n());
    }
}

// Relabels arbitrary non-negative ids into a restricted-growth string.
Partition relabel(const std::vector<std::size_t> &ids, std::size_t id_bound) {
    std::vector<Label> map(id_bound, static_cast<Label>(-1));
    std::vector<Label> labels(ids.size());
    Label next = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (map[ids[i]] == static_cast<Label>(-1)) {
            map[ids[i]] = next++;
        }
        labels[i] = map[ids[i]];
    }
    return Partition::from_canonical(std::move(labels), next);
}

struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
};

}  // namespace

bool leq(const Partition &p, const Partition &q) {
    require_same_n(p, q);
    std::vector<Label> image(p.num_blocks(), static_cast<Label>(-1));
    for (std::size_t i = 0; i < p.n(); ++i) {
        Label &slot = image[p.label(i)];
        if (slot == static_cast<Label>(-1)) {
            slot = q.label(i);
        } else if (slot != q.label(i)) {
            return false;
        }
    }
    return true;
}

Partition meet(const Partition &p, const Partition &q) {
    require_same_n(p, q);
    std::unordered_map<std::uint64_t, std::size_t> cell;
    std::vector<std::size_t> ids(p.n());
    for (std::size_t i = 0; i < p.n(); ++i) {
        const std::uint64_t key = (static_cast<std::uint64_t>(p.label(i)) << 32) | q.label(i);
        auto [it, inserted] = cell.try_emplace(key, cell.size());
        ids[i] = it->second;
    }
    return relabel(ids, cell.size());
}

Partition join(const Partition &p, const Partition &q) {
    require_same_n(p, q);
    const std::size_t n = p.n();
    DisjointSets sets(n);
    std::vector<std::size_t> first_p(p.num_blocks(), n), first_q(q.num_blocks(), n);
    for (std::size_t i = 0; i < n; ++i) {
        auto &fp = first_p[p.label(i)];
        auto &fq = first_q[q.label(i)];
        if (fp == n) {
            fp = i;
        } else {
            sets.unite(fp, i);
        }
        if (fq == n) {
            fq = i;
        } else {
            sets.unite(fq, i);
        }
    }
    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
        ids[i] = sets.find(i);
    }
    return relabel(ids, n);
}

Partition meet_all(std::span<const Partition> ps) {
    if (ps.empty()) {
        throw std::invalid_argument("meet_all: empty collection");
    }
    Partition acc = ps.front();
    for (const auto &p : ps.subspan(1)) {
        acc = meet(acc, p);
    }
    return acc;
}

Partition join_all(std::span<const Partition> ps) {
    if (ps.empty()) {
        throw std::invalid_argument("join_all: empty collection");
    }
    Partition acc = ps.front();
    for (const auto &p : ps.subspan(1)) {
        acc = join(acc, p);
    }
    return acc;
}

Partition atom(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= n || j >= n || i == j) {
        throw std::invalid_argument("atom: need two distinct elements below n");
    }
    std::vector<long long> raw(n);
    std::iota(raw.begin(), raw.end(), 0);
    raw[std::max(i, j)] = static_cast<long long>(std::min(i, j));
    return Partition::canonicalize(raw);
}

std::uint64_t bell_number(std::size_t n) {
    if (n > 25) {
        throw CapExceeded("bell_number", n, 25);
    }
    std::vector<std::uint64_t> bell(n + 1, 0);
    bell[0] = 1;
    // binom holds C(m-1, k) for the current m
    std::vector<std::uint64_t> binom{1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::uint64_t sum = 0;
        for (std::size_t k = 0; k < m; ++k) {
            sum += binom[k] * bell[k];
        }
        bell[m] = sum;
        std::vector<std::uint64_t> next(m + 1, 1);
        for (std::size_t k = 1; k < m; ++k) {
            next[k] = binom[k - 1] + binom[k];
        }
        binom = std::move(next);
    }
    return bell[n];
}

void for_each_partition(std::size_t n, const std::function<void(const Partition &)> &visit) {
    if (n == 0) {
        throw std::invalid_argument("for_each_partition: n must be positive");
    }
    std::vector<Label> a(n, 0);
    // prefix_max[i] = max(a[0..i])
    std::vector<Label> prefix_max(n, 0);
    while (true) {
        visit(Partition::from_canonical(a, prefix_max[n - 1] + 1));
        // rightmost position that can still grow
        std::size_t i = n - 1;
        while (i > 0 && a[i] == prefix_max[i - 1] + 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (std::size_t k = i + 1; k < n; ++k) {
            a[k] = 0;
            prefix_max[k] = prefix_max[i];
        }
    }
}

std::vector<Partition> enumerate(std::size_t n, std::size_t cap) {
    if (n == 0 || n > cap) {
        throw CapExceeded("enumerate", n, cap);
    }
    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(bell_number(n)));
    for_each_partition(n, [&](const Partition &p) { out.push_back(p); });
    return out;
}

CoveringNeighbors covering_neighbors(const Partition &p) {
    CoveringNeighbors out;
    const auto blocks = p.blocks();
    const std::size_t b = blocks.size();
    std::vector<long long> raw(p.labels().begin(), p.labels().end());

    for (std::size_t x = 0; x < b; ++x) {
        for (std::size_t y = x + 1; y < b; ++y) {
            auto merged = raw;
            for (auto e : blocks[y]) {
                merged[e] = static_cast<long long>(x);
            }
            out.coarsenings.push_back(Partition::canonicalize(merged));
        }
    }

    for (std::size_t x = 0; x < b; ++x) {
        const auto &block = blocks[x];
        const std::size_t rest = block.size() - 1;
        if (rest == 0) {
            continue;
        }
        if (rest >= 63) {
            throw std::overflow_error("covering_neighbors: block too large to split exhaustively");
        }
        // The smallest element stays put; a non-empty subset of the others moves out.
        const std::uint64_t full = (std::uint64_t{1} << rest) - 1;
        for (std::uint64_t mask = 1; mask <= full; ++mask) {
            auto split = raw;
            for (std::size_t t = 0; t < rest; ++t) {
                if ((mask >> t) & 1u) {
                    split[block[t + 1]] = static_cast<long long>(b);
                }
            }
            out.refinements.push_back(Partition::canonicalize(split));
        }
    }
    return out;
}

std::vector<Partition> complements(const Partition &p, std::size_t cap) {
    if (p.n() > cap) {
        throw CapExceeded("complements", p.n(), cap);
    }
    std::vector<Partition> out;
    for_each_partition(p.n(), [&](const Partition &q) {
        if (meet(p, q).is_bottom() && join(p, q).is_top()) {
            out.push_back(q);
        }
    });
    return out;
}

bool is_modular(const Partition &p) {
    std::size_t non_singletons = 0;
    for (auto s : p.block_sizes()) {
        non_singletons += s > 1 ? 1 : 0;
    }
    return non_singletons <= 1;
}

Partition induced(const Partition &p, std::span<const std::size_t> subset) {
    if (subset.empty()) {
        throw std::invalid_argument("induced: empty subset");
    }
    std::vector<std::size_t> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.back() >= p.n()) {
        throw std::invalid_argument("induced: subset has repeated or out-of-range elements");
    }
    std::vector<long long> raw;
    raw.reserve(sorted.size());
    for (auto e : sorted) {
        raw.push_back(p.label(e));
    }
    return Partition::canonicalize(raw);
}

std::set<std::uint64_t> available_sizes(std::size_t n, std::size_t cap) {
    if (n == 0 || n > cap) {
        throw CapExceeded("available_sizes", n, cap);
    }
    std::set<std::uint64_t> out;
    for_each_partition(n, [&](const Partition &p) { out.insert(size(p)); });
    return out;
}

}  // namespace partlat
