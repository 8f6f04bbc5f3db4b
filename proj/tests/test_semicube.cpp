#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "media/families.hpp"
#include "media/partial_cube.hpp"
#include "media/semicube.hpp"
#include "oracles.hpp"

using namespace media;

namespace {

HypercubeEmbedding embed(const Graph& g) { return hypercube_embedding(g, theta_classes(g)); }

/// Canonical view of a semicube graph: edges as pairs of member sets.
std::set<std::pair<std::set<int>, std::set<int>>> canonical_edges(const SemicubeGraph& sg) {
    std::set<std::pair<std::set<int>, std::set<int>>> out;
    for (auto [a, b] : sg.edges) {
        std::set<int> ma(sg.nodes[a].members.begin(), sg.nodes[a].members.end());
        std::set<int> mb(sg.nodes[b].members.begin(), sg.nodes[b].members.end());
        if (mb < ma) std::swap(ma, mb);
        out.insert({ma, mb});
    }
    return out;
}

}  // namespace

TEST_CASE("semicube graph of the square has no edges") {
    auto sg = semicube_graph(embed(make_cycle(4)));
    CHECK(sg.tau == 2);
    CHECK(sg.nodes.size() == 4);
    CHECK(sg.edges.empty());
}

TEST_CASE("semicube graph of the path a-b-c has the single covering pair") {
    auto sg = semicube_graph(embed(make_path(3)));
    CHECK(sg.tau == 2);
    REQUIRE(sg.edges.size() == 1);
    auto [a, b] = sg.edges[0];
    std::set<int> ma(sg.nodes[a].members.begin(), sg.nodes[a].members.end());
    std::set<int> mb(sg.nodes[b].members.begin(), sg.nodes[b].members.end());
    CHECK(((ma == std::set<int>{1, 2} && mb == std::set<int>{0, 1}) ||
           (ma == std::set<int>{0, 1} && mb == std::set<int>{1, 2})));
}

TEST_CASE("semicube graphs of hypercubes are edgeless") {
    for (int d : {1, 2, 3, 4, 5, 6}) {
        auto sg = semicube_graph(embed(make_hypercube(d)));
        CHECK(sg.tau == d);
        CHECK(sg.edges.empty());
    }
}

TEST_CASE("semicube graph is independent of the producing isometry") {
    // Re-embedding from a permuted vertex order gives the same semicube
    // graph up to its member sets.
    Graph g = media::test::polyomino_graph({{0, 0}, {1, 0}, {0, 1}});
    auto sg1 = canonical_edges(semicube_graph(embed(g)));
    std::vector<int> perm(g.num_vertices());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = (static_cast<int>(i) + 3) % g.num_vertices();
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    Graph h(g.num_vertices(), edges);
    auto sg2_raw = semicube_graph(embed(h));
    // map h's members back through the permutation
    std::set<std::pair<std::set<int>, std::set<int>>> sg2;
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    for (auto [a, b] : sg2_raw.edges) {
        std::set<int> ma, mb;
        for (int v : sg2_raw.nodes[a].members) ma.insert(inv[v]);
        for (int v : sg2_raw.nodes[b].members) mb.insert(inv[v]);
        if (mb < ma) std::swap(ma, mb);
        sg2.insert({ma, mb});
    }
    CHECK(sg1 == sg2);
}

TEST_CASE("maximum matching on structured graphs") {
    CHECK(maximum_matching_mates(4, {}).size() == 4);  // no edges, trivially exposed
    auto mates = maximum_matching_mates(4, {});
    for (int x : mates) CHECK(x == -1);

    // Petersen graph has a perfect matching.
    std::vector<std::pair<int, int>> petersen = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                                 {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                                 {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
    auto pm = maximum_matching_mates(10, petersen);
    int matched = 0;
    for (int v = 0; v < 10; ++v)
        if (pm[v] != -1) ++matched;
    CHECK(matched == 10);

    // Odd cycle: floor(n/2).
    Graph c7 = make_cycle(7);
    auto cm = maximum_matching_mates(7, c7.edges());
    int size = 0;
    for (int v = 0; v < 7; ++v)
        if (cm[v] > v) ++size;
    CHECK(size == 3);
}

TEST_CASE("blossom matching equals exhaustive search on random graphs") {
    std::mt19937 rng(987654321);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 15);
        std::bernoulli_distribution coin(0.1 + 0.5 * (rng() % 100) / 100.0);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) edges.emplace_back(i, j);
        auto mates = maximum_matching_mates(n, edges);
        int size = 0;
        for (int v = 0; v < n; ++v) {
            if (mates[v] != -1) {
                CHECK(mates[mates[v]] == v);  // involution
                if (mates[v] > v) ++size;
            }
        }
        CAPTURE(n);
        CHECK(size == media::test::exhaustive_matching_size(n, edges));
    }
}

TEST_CASE("lattice dimension of small media") {
    auto dim_of = [](const Graph& g) {
        auto emb = embed(g);
        auto sg = semicube_graph(emb);
        return lattice_dimension(sg.tau, maximum_matching(sg));
    };
    CHECK(dim_of(make_path(3)) == 1);
    CHECK(dim_of(make_cycle(4)) == 2);
    CHECK(dim_of(make_hypercube(6)) == 6);
    CHECK(dim_of(make_star(3)) == 2);
    CHECK(dim_of(make_star(4)) == 2);
    CHECK(dim_of(make_star(5)) == 3);
    CHECK(dim_of(make_cycle(6)) == 3);
}

TEST_CASE("lattice embedding of the path follows the even-position rule") {
    Graph p3 = make_path(3);
    auto emb = embed(p3);
    auto sg = semicube_graph(emb);
    auto m = maximum_matching(sg);
    REQUIRE(m.size() == 1);
    auto lat = lattice_embedding(emb, m);
    REQUIRE(lat.dim == 1);
    CHECK(lat.coords[0] == std::vector<int>{2});
    CHECK(lat.coords[1] == std::vector<int>{1});
    CHECK(lat.coords[2] == std::vector<int>{0});
}

TEST_CASE("lattice embedding of the square is the hypercube labeling up to reflection") {
    Graph c4 = make_cycle(4);
    auto emb = embed(c4);
    auto sg = semicube_graph(emb);
    auto m = maximum_matching(sg);
    REQUIRE(m.size() == 0);
    auto lat = lattice_embedding(emb, m);
    REQUIRE(lat.dim == 2);
    for (int axis = 0; axis < 2; ++axis) {
        bool same = true, reflected = true;
        for (int v = 0; v < 4; ++v) {
            if (lat.coords[v][axis] != emb.coords[v][axis]) same = false;
            if (lat.coords[v][axis] != 1 - emb.coords[v][axis]) reflected = false;
        }
        CHECK((same || reflected));
    }
    CHECK(is_isometric_embedding(c4, lat.coords));
}

TEST_CASE("flipping path orientation reflects each axis") {
    Graph g = media::test::polyomino_graph({{0, 0}, {1, 0}, {0, 1}});
    auto emb = embed(g);
    auto m = maximum_matching(semicube_graph(emb));
    auto lat = lattice_embedding(emb, m);
    auto flipped = lattice_embedding(emb, m, /*flip_paths=*/true);
    REQUIRE(lat.dim == flipped.dim);
    for (int k = 0; k < lat.dim; ++k) {
        int hi = 0;
        for (const auto& c : lat.coords) hi = std::max(hi, c[k]);
        for (size_t v = 0; v < lat.coords.size(); ++v)
            CHECK(flipped.coords[v][k] == hi - lat.coords[v][k]);
    }
}

TEST_CASE("lattice embeddings are isometric with the matched dimension") {
    for (const auto& entry : media::test::partial_cube_corpus()) {
        if (entry.graph.num_vertices() == 0 || entry.graph.num_vertices() > 80) continue;
        CAPTURE(entry.name);
        auto emb = embed(entry.graph);
        auto sg = semicube_graph(emb);
        auto m = maximum_matching(sg);
        auto lat = lattice_embedding(emb, m);
        CHECK(lat.dim == lattice_dimension(sg.tau, m));
        CHECK(is_isometric_embedding(entry.graph, lat.coords));
        for (int k = 0; k < lat.dim; ++k) {
            int hi = 0;
            for (const auto& c : lat.coords) hi = std::max(hi, c[k]);
            CHECK(hi >= 1);  // every axis used with at least two values
        }
    }
}

TEST_CASE("trees with at most four leaves fit the planar lattice") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        Graph t = media::test::random_tree(3 + static_cast<int>(rng() % 8), rng);
        int leaves = 0;
        for (int v = 0; v < t.num_vertices(); ++v)
            if (t.degree(v) == 1) ++leaves;
        auto emb = embed(t);
        auto sg = semicube_graph(emb);
        int d = lattice_dimension(sg.tau, maximum_matching(sg));
        CAPTURE(trial);
        if (leaves <= 4) CHECK(d <= 2);
        CHECK(d == (leaves + 1) / 2);
    }
}
