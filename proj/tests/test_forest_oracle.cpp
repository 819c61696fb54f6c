#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fva/forest_oracle.hpp"
#include "fva/generators.hpp"
#include "fva/structure.hpp"
#include "oracles.hpp"

using namespace fva;

namespace {

std::vector<Rational> random_weights(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(0, 12), den(1, 7);
    std::vector<Rational> w;
    for (int i = 0; i < n; ++i) w.push_back(Rational(num(rng), den(rng)));
    return w;
}

Rational weight_of(VertexSet s, const std::vector<Rational>& w) {
    Rational t = 0;
    for (Vertex v : s.members()) t += w[v];
    return t;
}

} // namespace

TEST_CASE("maximum-weight induced forest against brute force") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        auto g = oracle::random_graph(n, 0.45, rng);
        auto w = random_weights(n, rng);
        auto best = max_weight_induced_forest(g, w);
        CHECK(is_induced_forest(g, best.set));
        CHECK(best.weight == weight_of(best.set, w));
        CHECK(best.weight == oracle::max_weight(g, w, true));
    }
}

TEST_CASE("maximum-weight independent set against brute force") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        auto g = oracle::random_graph(n, 0.45, rng);
        auto w = random_weights(n, rng);
        auto best = max_weight_independent_set(g, w);
        CHECK(is_independent_set(g, best.set));
        CHECK(best.weight == weight_of(best.set, w));
        CHECK(best.weight == oracle::max_weight(g, w, false));
    }
}

TEST_CASE("large weights take the arbitrary-precision path") {
    auto g = named_graph("petersen");
    std::vector<Rational> w(10, parse_rational("1/340282366920938463463374607431768211457"));
    w[0] = parse_rational("340282366920938463463374607431768211457/3");
    auto best = max_weight_induced_forest(g, w);
    CHECK(best.weight == oracle::max_weight(g, w, true));
    CHECK(best.set.contains(0));
}

TEST_CASE("weight vector length and sign are checked") {
    auto g = named_graph("k4");
    std::vector<Rational> shorter(3, Rational(1));
    CHECK_THROWS(max_weight_induced_forest(g, shorter));
    std::vector<Rational> negative(4, Rational(-1));
    CHECK_THROWS(max_weight_induced_forest(g, negative));
}

TEST_CASE("maximum induced forest size") {
    CHECK(max_induced_forest_size(named_graph("k4")) == 2);
    CHECK(max_induced_forest_size(named_graph("petersen")) == 7);
    CHECK(max_induced_forest_size(named_graph("cube")) == 5);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracle::random_graph(std::uniform_int_distribution<int>(1, 13)(rng), 0.35, rng);
        CHECK(max_induced_forest_size(g) == oracle::max_forest(g));
    }
}

TEST_CASE("enumeration against brute force") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 9)(rng);
        auto g = oracle::random_graph(n, 0.4, rng);
        for (bool forest : {true, false}) {
            auto accept = [&](std::uint64_t m) {
                return forest ? oracle::is_forest(g, m) : oracle::is_independent(g, m);
            };
            std::vector<VertexSet> all, maximal;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                if (!accept(m)) continue;
                all.push_back(VertexSet(m));
                bool is_max = true;
                for (int v = 0; v < n && is_max; ++v)
                    if (!((m >> v) & 1u) && accept(m | (std::uint64_t{1} << v))) is_max = false;
                if (is_max) maximal.push_back(VertexSet(m));
            }
            std::sort(all.begin(), all.end());
            std::sort(maximal.begin(), maximal.end());
            if (forest) {
                CHECK(enumerate_induced_forests(g, false) == all);
                CHECK(enumerate_induced_forests(g, true) == maximal);
            } else {
                CHECK(enumerate_independent_sets(g, false) == all);
                CHECK(enumerate_independent_sets(g, true) == maximal);
            }
        }
    }
    CHECK_THROWS_AS(enumerate_induced_forests(named_graph("path", 21), true), GraphError);
}
