#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "media/errors.hpp"
#include "media/families.hpp"
#include "media/partial_cube.hpp"
#include "media/projection.hpp"
#include "media/semicube.hpp"

using namespace media;

namespace {

LatticeEmbedding minimal_embedding(const Graph& g) {
    auto emb = hypercube_embedding(g, theta_classes(g));
    auto sg = semicube_graph(emb);
    return lattice_embedding(emb, maximum_matching(sg));
}

LatticeEmbedding hypercube_lattice(int d) {
    // the identity 0/1 embedding of Q_d
    LatticeEmbedding emb;
    emb.dim = d;
    for (int v = 0; v < (1 << d); ++v) {
        std::vector<int> c(d);
        for (int i = 0; i < d; ++i) c[i] = (v >> i) & 1;
        emb.coords.push_back(c);
    }
    return emb;
}

}  // namespace

TEST_CASE("hypercube projection vectors are powers of two") {
    for (int d = 2; d <= 8; ++d) {
        CAPTURE(d);
        auto pv = projection_vectors(hypercube_lattice(d));
        REQUIRE(static_cast<int>(pv.x.size()) == d);
        CHECK(pv.x[0] == 0);
        for (int i = 1; i < d; ++i) CHECK(pv.x[i] == (1LL << (i - 1)));
        CHECK(pv.y[d - 1] == 0);
        for (int i = 0; i < d - 1; ++i) CHECK(pv.y[i] == (1LL << (d - 2 - i)));
    }
}

TEST_CASE("3x3 grid projection vectors") {
    LatticeEmbedding grid;
    grid.dim = 2;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) grid.coords.push_back({x, y});
    auto pv = projection_vectors(grid);
    CHECK(pv.x == std::vector<long long>{0, 1});
    CHECK(pv.y == std::vector<long long>{1, 0});
}

TEST_CASE("one-dimensional media project onto the x axis") {
    auto emb = minimal_embedding(make_path(4));
    REQUIRE(emb.dim == 1);
    auto pv = projection_vectors(emb);
    CHECK(pv.x == std::vector<long long>{1});
    CHECK(pv.y == std::vector<long long>{0});
}

TEST_CASE("degenerate axes are rejected") {
    LatticeEmbedding bad;
    bad.dim = 2;
    bad.coords = {{0, 0}, {1, 0}};  // axis 1 constant
    CHECK_THROWS_AS(projection_vectors(bad), DegenerateAxis);
}

TEST_CASE("projection maps points by dot products") {
    Graph q2 = make_hypercube(2);
    auto emb = hypercube_lattice(2);
    ProjectionVectors pv{{0, 1}, {1, 0}};
    auto pp = project(q2, emb, pv);
    CHECK(pp.pos[0] == std::pair<long long, long long>{0, 0});   // 00
    CHECK(pp.pos[1] == std::pair<long long, long long>{0, 1});   // 10
    CHECK(pp.pos[2] == std::pair<long long, long long>{1, 0});   // 01
    CHECK(pp.pos[3] == std::pair<long long, long long>{1, 1});   // 11
}

TEST_CASE("Q6 projection: corners, bounding box, properties") {
    Graph q6 = make_hypercube(6);
    auto emb = hypercube_lattice(6);
    auto pv = projection_vectors(emb);
    auto pp = project(q6, emb, pv);
    // all-ones vertex lands at (31, 31)
    CHECK(pp.pos[63] == std::pair<long long, long long>{31, 31});
    CHECK(pp.pos[0] == std::pair<long long, long long>{0, 0});
    auto rep = verify_lattice_drawing(pp, emb);
    CHECK(rep.distinct_coordinates.pass);
    CHECK(rep.straight_edges.pass);
    CHECK(rep.vertex_edge_separation.pass);
    CHECK(rep.translates_iff_parallel.pass);
    CHECK(rep.product_area.applicable);
    CHECK(rep.product_area.pass);
    CHECK(rep.width == 32);
    CHECK(rep.height == 32);
    CHECK(rep.area <= 64LL * 64);
}

TEST_CASE("hypercube projections equal the bit-reversal point set") {
    for (int d = 2; d <= 8; ++d) {
        CAPTURE(d);
        Graph g = make_hypercube(d);
        auto emb = hypercube_lattice(d);
        auto pp = project(g, emb, projection_vectors(emb));
        std::multiset<std::pair<long long, long long>> projected(pp.pos.begin(), pp.pos.end());
        std::multiset<std::pair<long long, long long>> expected;
        for (int v = 0; v < (1 << d); ++v) {
            long long x = 0, y = 0;
            for (int i = 1; i < d; ++i)
                if ((v >> i) & 1) x += 1LL << (i - 1);
            for (int i = 0; i <= d - 2; ++i)
                if ((v >> i) & 1) y += 1LL << (d - 2 - i);
            expected.insert({x, y});
        }
        CHECK(projected == expected);
    }
}

TEST_CASE("interval products draw in contiguous quadratic area") {
    std::vector<std::vector<int>> shapes = {{2, 2},    {3, 4},       {5, 5},  {14, 14},
                                            {2, 2, 2}, {3, 4, 2},    {5, 5, 5},
                                            {2, 2, 2, 2}, {6, 6, 4}, {2, 3, 4, 2}};
    for (const auto& sides : shapes) {
        long long states = 1;
        for (int s : sides) states *= s;
        REQUIRE(states <= 200);
        CAPTURE(sides[0]);
        Graph g = make_grid(sides);
        auto emb = minimal_embedding(g);
        auto pp = project(g, emb, projection_vectors(emb));
        auto rep = verify_lattice_drawing(pp, emb);
        CHECK(rep.distinct_coordinates.pass);
        CHECK(rep.vertex_edge_separation.pass);
        CHECK(rep.translates_iff_parallel.pass);
        CHECK(rep.product_area.applicable);
        CHECK(rep.product_area.pass);
        CHECK(rep.area <= states * states);
    }
}

TEST_CASE("properties 1-4 hold across the corpus") {
    for (const auto& entry : media::test::partial_cube_corpus()) {
        if (entry.graph.num_vertices() < 2) continue;
        CAPTURE(entry.name);
        auto emb = minimal_embedding(entry.graph);
        auto pp = project(entry.graph, emb, projection_vectors(emb));
        auto rep = verify_lattice_drawing(pp, emb);
        CHECK(rep.distinct_coordinates.pass);
        CHECK(rep.straight_edges.pass);
        CHECK(rep.vertex_edge_separation.pass);
        CHECK(rep.translates_iff_parallel.pass);
    }
}

TEST_CASE("corrupting a placement trips property 1") {
    Graph c4 = make_cycle(4);
    auto emb = minimal_embedding(c4);
    auto pp = project(c4, emb, projection_vectors(emb));
    pp.pos[2] = pp.pos[0];
    auto rep = verify_lattice_drawing(pp, emb);
    CHECK_FALSE(rep.distinct_coordinates.pass);
    CHECK(rep.distinct_coordinates.witness.find("share") != std::string::npos);
}
