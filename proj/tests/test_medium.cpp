#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "media/axiom_oracle.hpp"
#include "media/errors.hpp"
#include "media/families.hpp"
#include "media/medium.hpp"
#include "media/partial_cube.hpp"

using namespace media;

namespace {

Medium square_medium() {
    // Two token pairs acting as opposite moves on a 4-cycle A-B-C-D.
    MediumBuilder b;
    for (auto* s : {"A", "B", "C", "D"}) b.add_state(s);
    b.add_token_pair("r", "l");
    b.add_token_pair("u", "d");
    b.set_action("A", "r", "B");
    b.set_action("B", "l", "A");
    b.set_action("D", "r", "C");
    b.set_action("C", "l", "D");
    b.set_action("B", "u", "C");
    b.set_action("C", "d", "B");
    b.set_action("A", "u", "D");
    b.set_action("D", "d", "A");
    return b.assemble();
}

Medium path3_medium() {
    MediumBuilder b;
    for (auto* s : {"a", "b", "c"}) b.add_state(s);
    b.add_token_pair("t", "t~");
    b.add_token_pair("u", "u~");
    b.set_action("a", "t", "b");
    b.set_action("b", "t~", "a");
    b.set_action("b", "u", "c");
    b.set_action("c", "u~", "b");
    return b.assemble();
}

Medium k23_medium_like() {
    // Bipartite K_{2,3} with one token pair per edge; satisfies the reverse
    // axiom but its transition graph is not a partial cube.
    MediumBuilder b;
    for (auto* s : {"A", "B", "x", "y", "z"}) b.add_state(s);
    int id = 0;
    for (const char* left : {"A", "B"}) {
        for (const char* right : {"x", "y", "z"}) {
            std::string t = "t" + std::to_string(id), r = "r" + std::to_string(id);
            ++id;
            b.add_token_pair(t, r);
            b.set_action(left, t, right);
            b.set_action(right, r, left);
        }
    }
    return b.assemble();
}

}  // namespace

TEST_CASE("four-cycle medium satisfies the axioms") {
    Medium m = square_medium();
    CHECK_FALSE(validate_medium_axioms(m).has_value());
    CHECK_FALSE(check_axioms_by_messages(m, 6).has_value());
}

TEST_CASE("three-state path medium validates and matches the message oracle") {
    Medium m = path3_medium();
    CHECK_FALSE(validate_medium_axioms(m).has_value());
    CHECK_FALSE(check_axioms_by_messages(m, 6).has_value());
}

TEST_CASE("broken reverse is an axiom 1 violation with a witness") {
    MediumBuilder b;
    b.add_state("A");
    b.add_state("B");
    b.add_token_pair("t", "t~");
    b.set_action("A", "t", "B");  // t~ left as identity on B
    Medium m = b.assemble();
    auto f = validate_medium_axioms(m);
    REQUIRE(f.has_value());
    CHECK(f->axiom == 1);
    CHECK(f->witness.find("t") != std::string::npos);
    CHECK_THROWS_AS(build_medium({"A", "B"}, {{"t", "t~"}}, {{0, 0, 1}}), AxiomViolation);
}

TEST_CASE("duplicated token actions break reverse uniqueness") {
    MediumBuilder b;
    b.add_state("A");
    b.add_state("B");
    b.add_token_pair("t1", "r1");
    b.add_token_pair("t2", "r2");
    for (auto* t : {"t1", "t2"}) b.set_action("A", t, "B");
    for (auto* r : {"r1", "r2"}) b.set_action("B", r, "A");
    Medium m = b.assemble();
    auto f = validate_medium_axioms(m);
    REQUIRE(f.has_value());
    CHECK(f->axiom == 1);
    auto g = check_axioms_by_messages(m, 4);
    REQUIRE(g.has_value());
    CHECK(g->axiom == 1);
}

TEST_CASE("hypercube media are media") {
    Medium q3 = medium_from_graph(make_hypercube(3));
    CHECK(q3.num_states() == 8);
    CHECK(q3.num_token_pairs() == 3);
    CHECK_FALSE(validate_medium_axioms(q3).has_value());
}

TEST_CASE("K_{2,3} action table is rejected and the oracle agrees") {
    Medium m = k23_medium_like();
    auto f = validate_medium_axioms(m);
    REQUIRE(f.has_value());
    CHECK(f->axiom >= 2);
    auto g = check_axioms_by_messages(m, 5);
    REQUIRE(g.has_value());
    CHECK(g->axiom == 3);
}

TEST_CASE("six-cycle medium passes the message oracle") {
    Medium m = medium_from_graph(make_cycle(6));
    CHECK_FALSE(validate_medium_axioms(m).has_value());
    CHECK_FALSE(check_axioms_by_messages(m, 6).has_value());
}

TEST_CASE("graph_from_medium reproduces the transition graph") {
    Graph c4 = graph_from_medium(square_medium());
    CHECK(c4.num_vertices() == 4);
    CHECK(c4.num_edges() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    Graph q3 = graph_from_medium(medium_from_graph(make_hypercube(3)));
    CHECK(q3.num_vertices() == 8);
    CHECK(q3.num_edges() == 12);

    Graph wo3 = graph_from_medium(medium_from_graph(weak_orders_graph(3)));
    CHECK(wo3.num_vertices() == 13);
}

TEST_CASE("medium_from_partial_cube token effectiveness") {
    auto effective_counts = [](const Medium& m) {
        std::vector<int> counts(m.num_tokens(), 0);
        for (int t = 0; t < m.num_tokens(); ++t)
            for (int s = 0; s < m.num_states(); ++s)
                if (m.effective(s, t)) ++counts[t];
        return counts;
    };

    Medium q3 = medium_from_graph(make_hypercube(3));
    CHECK(q3.num_tokens() == 6);
    for (int c : effective_counts(q3)) CHECK(c == 4);

    Medium c6 = medium_from_graph(make_cycle(6));
    CHECK(c6.num_tokens() == 6);
    for (int c : effective_counts(c6)) CHECK(c == 2);  // one per cut edge

    Medium p3 = medium_from_graph(make_path(3));
    CHECK(p3.num_tokens() == 4);
    for (int c : effective_counts(p3)) CHECK(c == 1);
}

TEST_CASE("round trip: medium -> graph -> classes -> embedding -> medium") {
    for (const auto& entry : media::test::partial_cube_corpus()) {
        if (entry.graph.num_vertices() > 60) continue;
        CAPTURE(entry.name);
        Medium m = medium_from_graph(entry.graph);
        Graph g = graph_from_medium(m);
        auto classes = theta_classes(g);
        CHECK(classes.class_count == m.num_token_pairs());
        Medium again = medium_from_partial_cube(hypercube_embedding(g, classes));
        CHECK(media_isomorphic_by_names(m, again));
    }
}

TEST_CASE("axiom checker and message oracle agree on small corpus media") {
    for (const auto& entry : media::test::partial_cube_corpus()) {
        if (entry.graph.num_vertices() > 20 || entry.graph.num_vertices() == 0) continue;
        CAPTURE(entry.name);
        Medium m = medium_from_graph(entry.graph);
        int diam = entry.graph.diameter();
        bool characterization_ok = !validate_medium_axioms(m).has_value();
        bool oracle_ok = !check_axioms_by_messages(m, diam, 80'000'000).has_value();
        CHECK(characterization_ok == oracle_ok);
        CHECK(characterization_ok);
    }
}
