#include "partlat/hasse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

#include "partlat/errors.hpp"
#include "partlat/lattice.hpp"

namespace partlat {

HasseGraph HasseGraph::build(std::size_t n, std::size_t cap) {
    if (n == 0 || n > cap) {
        throw CapExceeded("build_hasse", n, cap);
    }
    HasseGraph g;
    g.n_ = n;
    g.vertices_ = enumerate(n, std::max(cap, n));
    g.index_.reserve(g.vertices_.size());
    for (std::size_t v = 0; v < g.vertices_.size(); ++v) {
        g.index_.emplace(g.vertices_[v], v);
    }
    g.adjacency_.assign(g.vertices_.size(), {});
    for (std::size_t v = 0; v < g.vertices_.size(); ++v) {
        for (const auto &c : covering_neighbors(g.vertices_[v]).coarsenings) {
            const std::size_t w = g.index_.at(c);
            g.adjacency_[v].push_back(w);
            g.adjacency_[w].push_back(v);
            ++g.num_edges_;
        }
    }
    for (auto &adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
    }
    return g;
}

std::optional<std::size_t> HasseGraph::index_of(const Partition &p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool WeightedPath::visits(const Partition &p) const {
    return std::find(vertices.begin(), vertices.end(), p) != vertices.end();
}

namespace {

constexpr double kUnreached = std::numeric_limits<double>::infinity();
constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

std::size_t require_vertex(const HasseGraph &g, const Partition &p) {
    auto v = g.index_of(p);
    if (!v) {
        throw std::invalid_argument("partition " + to_block_string(p) + " is not a vertex of the graph");
    }
    return *v;
}

}  // namespace

MinWeightPaths::MinWeightPaths(const HasseGraph &graph, const PartitionFunction &f) : graph_(&graph) {
    values_.reserve(graph.num_vertices());
    for (const auto &p : graph.vertices()) {
        values_.push_back(f(p));
    }
    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
        for (auto w : graph.neighbors(v)) {
            if (values_[v] == values_[w]) {
                throw std::invalid_argument("zero-weight edge between " + to_block_string(graph.vertex(v)) +
                                            " and " + to_block_string(graph.vertex(w)) +
                                            ": f is not strictly monotone");
            }
        }
    }
}

void MinWeightPaths::run(std::size_t source, std::optional<std::size_t> avoid) {
    const std::size_t count = graph_->num_vertices();
    source_ = source;
    dist_.assign(count, kUnreached);
    parent_.assign(count, kNoParent);
    if (avoid && *avoid == source) {
        return;
    }
    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist_[source] = 0.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist_[v]) {
            continue;
        }
        for (auto w : graph_->neighbors(v)) {
            if (avoid && w == *avoid) {
                continue;
            }
            const double nd = d + std::abs(values_[v] - values_[w]);
            if (nd < dist_[w]) {
                dist_[w] = nd;
                parent_[w] = v;
                heap.emplace(nd, w);
            }
        }
    }
}

bool MinWeightPaths::reachable(std::size_t target) const { return dist_[target] != kUnreached; }

WeightedPath MinWeightPaths::path_to(std::size_t target) const {
    if (!reachable(target)) {
        throw std::invalid_argument("path_to: target not reachable");
    }
    std::vector<std::size_t> chain;
    for (std::size_t v = target; v != kNoParent; v = parent_[v]) {
        chain.push_back(v);
    }
    std::reverse(chain.begin(), chain.end());
    WeightedPath path;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        path.vertices.push_back(graph_->vertex(chain[k]));
        if (k > 0) {
            path.weight += std::abs(values_[chain[k]] - values_[chain[k - 1]]);
        }
    }
    return path;
}

WeightedPath min_weight_path(const HasseGraph &graph, const FunctionalDescriptor &f, const Partition &p,
                             const Partition &q) {
    const std::size_t s = require_vertex(graph, p);
    const std::size_t t = require_vertex(graph, q);
    MinWeightPaths paths(graph, [&](const Partition &x) { return f.evaluate(x); });
    paths.run(s);
    return paths.path_to(t);
}

WeightedPath min_weight_path_via(const HasseGraph &graph, const FunctionalDescriptor &f, const Partition &p,
                                 const Partition &via, const Partition &q) {
    WeightedPath first = min_weight_path(graph, f, p, via);
    WeightedPath second = min_weight_path(graph, f, via, q);
    first.vertices.insert(first.vertices.end(), second.vertices.begin() + 1, second.vertices.end());
    first.weight += second.weight;
    return first;
}

std::optional<WeightedPath> min_weight_path_avoiding(const HasseGraph &graph, const FunctionalDescriptor &f,
                                                     const Partition &p, const Partition &avoid,
                                                     const Partition &q) {
    const std::size_t s = require_vertex(graph, p);
    const std::size_t t = require_vertex(graph, q);
    const std::size_t a = require_vertex(graph, avoid);
    MinWeightPaths paths(graph, [&](const Partition &x) { return f.evaluate(x); });
    paths.run(s, a);
    if (!paths.reachable(t)) {
        return std::nullopt;
    }
    return paths.path_to(t);
}

double closed_form_delta(const FunctionalDescriptor &f, const Partition &p, const Partition &q) {
    if (!f.modularity) {
        throw std::invalid_argument("closed_form_delta: functional " + std::string(f.name) +
                                    " has no declared modularity class");
    }
    const double fp = f.evaluate(p);
    const double fq = f.evaluate(q);
    const bool preserving = f.order_direction == OrderDirection::Preserving;
    const bool super = *f.modularity == Modularity::Supermodular;
    if (preserving == super) {
        // preserving+supermodular or inverting+submodular: the path runs through the meet
        const double fm = f.evaluate(meet(p, q));
        return preserving ? fp + fq - 2.0 * fm : 2.0 * fm - fp - fq;
    }
    const double fj = f.evaluate(join(p, q));
    return preserving ? 2.0 * fj - fp - fq : fp + fq - 2.0 * fj;
}

Classification classify(std::size_t n, const PartitionFunction &f, double tol, std::size_t cap) {
    if (n == 0 || n > cap) {
        throw CapExceeded("classify", n, cap);
    }
    const auto parts = enumerate(n, std::max(cap, n));
    std::vector<double> values;
    values.reserve(parts.size());
    for (const auto &p : parts) {
        values.push_back(f(p));
    }
    std::unordered_map<Partition, std::size_t> index;
    for (std::size_t v = 0; v < parts.size(); ++v) {
        index.emplace(parts[v], v);
    }

    Classification out;

    std::map<ClassVector, double> by_class;
    out.symmetric = true;
    for (std::size_t v = 0; v < parts.size(); ++v) {
        auto [it, inserted] = by_class.try_emplace(class_vector(parts[v]), values[v]);
        if (!inserted && std::abs(it->second - values[v]) > tol) {
            out.symmetric = false;
        }
    }

    bool up = true;
    bool down = true;
    for (std::size_t v = 0; v < parts.size(); ++v) {
        for (const auto &c : covering_neighbors(parts[v]).coarsenings) {
            const double diff = values[index.at(c)] - values[v];
            up = up && diff > tol;
            down = down && diff < -tol;
        }
    }
    out.order_direction = up ? Monotonicity::StrictlyPreserving
                             : (down ? Monotonicity::StrictlyInverting : Monotonicity::Neither);

    out.supermodular = true;
    out.submodular = true;
    for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
            const double gap = values[index.at(join(parts[a], parts[b]))] +
                               values[index.at(meet(parts[a], parts[b]))] - values[a] - values[b];
            out.supermodular = out.supermodular && gap >= -tol;
            out.submodular = out.submodular && gap <= tol;
        }
    }

    const auto inversion = moebius_inversion(n, f, MoebiusDirection::FromBelow, cap);
    out.totally_positive =
        std::all_of(inversion.mu.begin(), inversion.mu.end(), [&](double m) { return m >= -tol; });
    return out;
}

double MoebiusInversion::at(const Partition &p) const {
    auto it = std::find(domain.begin(), domain.end(), p);
    if (it == domain.end()) {
        throw std::invalid_argument("MoebiusInversion::at: partition outside the domain");
    }
    return mu[static_cast<std::size_t>(it - domain.begin())];
}

MoebiusInversion moebius_inversion(std::size_t n, const PartitionFunction &f, MoebiusDirection direction,
                                   std::size_t cap) {
    if (n == 0 || n > cap) {
        throw CapExceeded("moebius_inversion", n, cap);
    }
    MoebiusInversion out;
    out.domain = enumerate(n, std::max(cap, n));
    const std::size_t count = out.domain.size();
    out.mu.assign(count, 0.0);

    // Visit in rank order so every strictly smaller (or larger) element is already done.
    std::vector<std::size_t> order(count);
    for (std::size_t v = 0; v < count; ++v) {
        order[v] = v;
    }
    const bool below = direction == MoebiusDirection::FromBelow;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ba = out.domain[a].num_blocks();
        const auto bb = out.domain[b].num_blocks();
        return below ? ba > bb : ba < bb;
    });

    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t x = order[k];
        double m = f(out.domain[x]);
        for (std::size_t t = 0; t < k; ++t) {
            const std::size_t y = order[t];
            const bool related = below ? leq(out.domain[y], out.domain[x]) : leq(out.domain[x], out.domain[y]);
            if (related) {
                m -= out.mu[y];
            }
        }
        out.mu[x] = m;
    }
    return out;
}

}  // namespace partlat
