#include <doctest.h>

#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "partlat/functionals.hpp"
#include "partlat/hasse.hpp"
#include "partlat/lattice.hpp"
#include "partlat/metrics.hpp"

using namespace partlat;
using fixtures::parse;

namespace {

const FunctionalKind kAll[] = {FunctionalKind::Size, FunctionalKind::Rank, FunctionalKind::Entropy,
                               FunctionalKind::LogicalEntropy, FunctionalKind::Cosize};

bool covers(const Partition &a, const Partition &b) {
    const auto lo = a.num_blocks() > b.num_blocks() ? a : b;
    const auto hi = a.num_blocks() > b.num_blocks() ? b : a;
    return lo.num_blocks() == hi.num_blocks() + 1 && leq(lo, hi);
}

// all-pairs minimum weights by Floyd-Warshall over pairwise covering tests
std::vector<std::vector<double>> floyd(const std::vector<Partition> &vs, const FunctionalDescriptor &f) {
    const double inf = std::numeric_limits<double>::infinity();
    const std::size_t m = vs.size();
    std::vector<std::vector<double>> d(m, std::vector<double>(m, inf));
    for (std::size_t a = 0; a < m; ++a) {
        d[a][a] = 0.0;
        for (std::size_t b = 0; b < m; ++b) {
            if (covers(vs[a], vs[b])) {
                d[a][b] = std::abs(f.evaluate(vs[a]) - f.evaluate(vs[b]));
            }
        }
    }
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                d[a][b] = std::min(d[a][b], d[a][k] + d[k][b]);
            }
        }
    }
    return d;
}

}  // namespace

TEST_CASE("hasse graph sizes") {
    CHECK(HasseGraph::build(1).num_vertices() == 1);
    CHECK(HasseGraph::build(1).num_edges() == 0);
    CHECK(HasseGraph::build(3).num_vertices() == 5);
    CHECK(HasseGraph::build(3).num_edges() == 6);
    CHECK(HasseGraph::build(4).num_edges() == 31);
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto g = HasseGraph::build(n);
        std::size_t expected = 0;
        for (const auto &p : g.vertices()) {
            expected += p.num_blocks() * (p.num_blocks() - 1) / 2;
        }
        CHECK(g.num_vertices() == bell_number(n));
        CHECK(g.num_edges() == expected);
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            for (auto u : g.neighbors(v)) {
                CHECK(covers(g.vertex(u), g.vertex(v)));
            }
        }
    }
}

TEST_CASE("dijkstra agrees with floyd-warshall and the closed forms on a 4-set") {
    const auto g = HasseGraph::build(4);
    for (auto kind : kAll) {
        const auto &f = FunctionalDescriptor::of(kind);
        CAPTURE(f.name);
        const auto oracle = floyd(g.vertices(), f);
        MinWeightPaths paths(g, [&](const Partition &p) { return f.evaluate(p); });
        for (std::size_t s = 0; s < g.num_vertices(); ++s) {
            paths.run(s);
            for (std::size_t t = 0; t < g.num_vertices(); ++t) {
                CHECK(paths.distance_to(t) == doctest::Approx(oracle[s][t]).epsilon(1e-12));
                CHECK(closed_form_delta(f, g.vertex(s), g.vertex(t)) ==
                      doctest::Approx(oracle[s][t]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("returned paths are covering chains with the stated weight") {
    const auto g = HasseGraph::build(5);
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, g.num_vertices() - 1);
    for (auto kind : kAll) {
        const auto &f = FunctionalDescriptor::of(kind);
        for (int t = 0; t < 100; ++t) {
            const auto &p = g.vertex(pick(rng));
            const auto &q = g.vertex(pick(rng));
            const auto path = min_weight_path(g, f, p, q);
            REQUIRE(!path.vertices.empty());
            CHECK(path.vertices.front() == p);
            CHECK(path.vertices.back() == q);
            double w = 0.0;
            for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k) {
                CHECK(covers(path.vertices[k], path.vertices[k + 1]));
                w += std::abs(f.evaluate(path.vertices[k]) - f.evaluate(path.vertices[k + 1]));
            }
            CHECK(path.weight == doctest::Approx(w).epsilon(1e-12));
        }
    }
}

TEST_CASE("closed forms coincide with the named distances") {
    std::mt19937 rng(17);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + t % 8;
        const auto p = fixtures::random_partition(n, rng);
        const auto q = fixtures::random_partition(n, rng);
        CHECK(closed_form_delta(FunctionalDescriptor::of(FunctionalKind::Size), p, q) == double(hd(p, q)));
        CHECK(closed_form_delta(FunctionalDescriptor::of(FunctionalKind::Rank), p, q) == double(delta_rank(p, q)));
        CHECK(closed_form_delta(FunctionalDescriptor::of(FunctionalKind::Entropy), p, q) ==
              doctest::Approx(vi(p, q)).epsilon(1e-12));
        CHECK(closed_form_delta(FunctionalDescriptor::of(FunctionalKind::LogicalEntropy), p, q) ==
              doctest::Approx(delta_logical(p, q)).epsilon(1e-12));
        CHECK(closed_form_delta(FunctionalDescriptor::of(FunctionalKind::Cosize), p, q) ==
              double(delta_cosize(p, q)));
    }
}

TEST_CASE("rank distance is the unweighted shortest path length") {
    const auto g = HasseGraph::build(5);
    for (std::size_t s = 0; s < g.num_vertices(); s += 7) {
        std::vector<std::size_t> hops(g.num_vertices(), SIZE_MAX);
        std::queue<std::size_t> frontier;
        hops[s] = 0;
        frontier.push(s);
        while (!frontier.empty()) {
            const auto v = frontier.front();
            frontier.pop();
            for (auto u : g.neighbors(v)) {
                if (hops[u] == SIZE_MAX) {
                    hops[u] = hops[v] + 1;
                    frontier.push(u);
                }
            }
        }
        for (std::size_t t = 0; t < g.num_vertices(); ++t) {
            CHECK(hops[t] == delta_rank(g.vertex(s), g.vertex(t)));
        }
    }
}

TEST_CASE("entropy distance between overlapping atoms") {
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto g = HasseGraph::build(n);
        const auto a = atom(n, 0, 1);
        const auto b = atom(n, 0, 2);
        const auto &e = FunctionalDescriptor::of(FunctionalKind::Entropy);
        const double nn = static_cast<double>(n);
        CHECK(min_weight_path(g, e, a, b).weight == doctest::Approx(4.0 / nn).epsilon(1e-12));
        CHECK(vi(a, b) == doctest::Approx(4.0 / nn).epsilon(1e-12));
        const double through_join = min_weight_path_via(g, e, a, join(a, b), b).weight;
        CHECK(through_join == doctest::Approx(2.0 / nn * (3.0 * std::log2(3.0) - 2.0)).epsilon(1e-12));
        CHECK(4.0 / nn < through_join);
    }
}

TEST_CASE("rank distance for a complementary pair of a 7-set") {
    const auto g = HasseGraph::build(7);
    const auto p = parse("135|27|46");
    const auto q = parse("1|23|47|56");
    const auto &r = FunctionalDescriptor::of(FunctionalKind::Rank);
    const auto path = min_weight_path(g, r, p, q);
    CHECK(path.weight == 5.0);
    CHECK(path.visits(Partition::top(7)));
    CHECK(min_weight_path_via(g, r, p, Partition::bottom(7), q).weight == 7.0);
}

TEST_CASE("a minimum size-weight path can avoid both meet and join") {
    const auto g = HasseGraph::build(4);
    const auto &s = FunctionalDescriptor::of(FunctionalKind::Size);
    const auto p = parse("123|4");
    const auto q = parse("14|2|3");
    const std::vector<Partition> chain{p, parse("1|23|4"), parse("14|23"), q};
    double w = 0.0;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        REQUIRE(covers(chain[k], chain[k + 1]));
        w += std::abs(s.evaluate(chain[k]) - s.evaluate(chain[k + 1]));
    }
    CHECK(w == double(hd(p, q)));
    CHECK(min_weight_path(g, s, p, q).weight == w);
    const auto avoiding = min_weight_path_avoiding(g, s, p, meet(p, q), q);
    REQUIRE(avoiding.has_value());
    CHECK(avoiding->weight == w);
}

TEST_CASE("zero-weight edges are rejected") {
    const auto g = HasseGraph::build(3);
    CHECK_THROWS_AS(MinWeightPaths(g, [](const Partition &) { return 1.0; }), std::invalid_argument);
}

TEST_CASE("classification of the bundled functionals") {
    const auto size_cls = classify(5, [](const Partition &p) { return double(size(p)); });
    CHECK(size_cls.symmetric);
    CHECK(size_cls.order_direction == Monotonicity::StrictlyPreserving);
    CHECK(size_cls.supermodular);
    CHECK_FALSE(size_cls.submodular);
    CHECK(size_cls.totally_positive);

    const auto rank_cls = classify(5, [](const Partition &p) { return double(rank(p)); });
    CHECK(rank_cls.submodular);
    CHECK_FALSE(rank_cls.supermodular);
    CHECK(rank_cls.order_direction == Monotonicity::StrictlyPreserving);

    const auto e3 = classify(3, [](const Partition &p) { return entropy(p); });
    CHECK(e3.submodular);
    CHECK(e3.order_direction == Monotonicity::StrictlyInverting);

    for (std::size_t n = 2; n <= 5; ++n) {
        for (auto kind : kAll) {
            const auto &f = FunctionalDescriptor::of(kind);
            const auto cls = classify(n, [&](const Partition &p) { return f.evaluate(p); });
            CAPTURE(f.name);
            CAPTURE(n);
            CHECK(cls.symmetric);
            CHECK(cls.order_direction == (f.order_direction == OrderDirection::Preserving
                                              ? Monotonicity::StrictlyPreserving
                                              : Monotonicity::StrictlyInverting));
            CHECK((*f.modularity == Modularity::Supermodular ? cls.supermodular : cls.submodular));
            if (cls.totally_positive) {
                CHECK(cls.supermodular);
            }
        }
    }
}

TEST_CASE("totally positive functions are supermodular") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 3 + t % 3;
        const auto all = enumerate(n);
        std::vector<double> mu(all.size());
        const bool positive = t % 2 == 0;
        for (auto &x : mu) {
            x = positive ? u(rng) : u(rng) - 0.3;
        }
        const PartitionFunction f = [&](const Partition &p) {
            double v = 0.0;
            for (std::size_t k = 0; k < all.size(); ++k) {
                if (leq(all[k], p)) {
                    v += mu[k];
                }
            }
            return v;
        };
        const auto cls = classify(n, f, 1e-9);
        if (positive) {
            CHECK(cls.totally_positive);
        }
        if (cls.totally_positive) {
            CHECK(cls.supermodular);
        }
        const auto inv = moebius_inversion(n, f, MoebiusDirection::FromBelow);
        for (std::size_t k = 0; k < all.size(); ++k) {
            CHECK(inv.at(all[k]) == doctest::Approx(mu[k]).epsilon(1e-9));
        }
    }
}

TEST_CASE("moebius inversions of size and cosize") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto s = moebius_inversion(n, [](const Partition &p) { return double(size(p)); },
                                         MoebiusDirection::FromBelow);
        const auto cs = moebius_inversion(n, [](const Partition &p) { return double(cosize(p)); },
                                          MoebiusDirection::FromAbove);
        const auto zero = moebius_inversion(n, [](const Partition &) { return 0.0; }, MoebiusDirection::FromBelow);
        for (std::size_t k = 0; k < s.domain.size(); ++k) {
            const auto &p = s.domain[k];
            CHECK(s.mu[k] == (size(p) == 1 ? 1.0 : 0.0));
            CHECK(cs.at(p) == (p.num_blocks() == 2 ? 1.0 : 0.0));
            CHECK(zero.at(p) == 0.0);
        }
    }
}
