#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fva/offshoot.hpp"
#include "fva/serialize.hpp"

namespace fva {

struct CombinerInstance {
    Graph graph;
    OffshootAssignment assignment;
    DemandSchedule schedule;
};

/// Random local graph on 1..max_vertices vertices with lists inside [0, 2)
/// and greedily built certificates on a 1/8 grid. Returns nullopt when the
/// covering sum falls below 1 at some vertex.
std::optional<CombinerInstance> random_combiner_instance(std::mt19937_64& rng, int max_vertices = 4);

/// Fixed planar girth-five fixtures: cycles C5..C16, dodecahedron fragments
/// with at most 16 vertices, both gadget hosts, and the Petersen graph.
std::vector<std::pair<std::string, Graph>> theorem_fixtures();

/// Sparse random connected graphs for the discharging suite: average degree below 10/3.
Graph random_sparse_graph(int n, std::mt19937_64& rng);

struct CorpusOptions {
    std::string suite;
    std::uint64_t seed = 1;
    std::size_t random_count = 0;
    int random_max_n = 14;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct CorpusItem {
    std::string name;
    Graph graph;
};

struct CorpusReport {
    Json json;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

/// Suites: chain, chif, lemma4, acyclic5, combiner, theorem1. Items are
/// processed in parallel; the report lists them in input order.
CorpusReport run_corpus(const CorpusOptions& options, const std::vector<CorpusItem>& items);

/// Per-graph checks shared by the suites. Each returns a JSON record with an "ok" field
/// (true, false, or null for skipped).
Json chain_check(const Graph& g);
Json chif_check(const Graph& g);
Json lemma4_check(const Graph& g);
Json acyclic5_check(const Graph& g);
Json theorem1_check(const Graph& g);
Json combiner_check(const CombinerInstance& instance);

} // namespace fva
