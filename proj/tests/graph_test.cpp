#include <doctest.h>

#include "carc/error.hpp"
#include "carc/graph.hpp"
#include "carc/io.hpp"

using namespace carc;

namespace {

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected carc::Error");
    return Errc::malformed_input;
}

} // namespace

TEST_CASE("parse_graph accepts the fig1 document") {
    const auto g = parse_graph(
        R"({"n":8,"r":2,"part":[1,2,2,1,2,1,2,1],
            "edges":[[1,2],[1,3],[2,4],[3,4],[3,8],[4,5],[5,6],[6,7],[7,8]]})");
    CHECK(g.order() == 8);
    CHECK(g.part_count() == 2);
    CHECK(g.edges().size() == 9);
    for (int v : {1, 4, 6, 8})
        CHECK(g.part(v) == 1);
    for (int v : {2, 3, 5, 7})
        CHECK(g.part(v) == 2);
    CHECK(g == builtin_example("fig1"));
}

TEST_CASE("parse_graph error paths") {
    CHECK(error_of([] {
              parse_graph(R"({"n":8,"r":2,"part":[1,2,2,1,2,1,2,1],
                  "edges":[[1,2],[1,3],[2,4],[3,4],[3,8],[4,5],[5,6],[6,7],[7,8],[1,4]]})");
          }) == Errc::intra_part_edge);
    CHECK(error_of([] { parse_graph("{\"n\": 2, "); }) == Errc::malformed_input);
    CHECK(error_of([] { parse_graph(R"({"n":2,"r":2,"part":[1,3],"edges":[]})"); }) ==
          Errc::part_out_of_range);
    CHECK(error_of([] {
              parse_graph(R"({"n":2,"r":2,"part":[1,2],"edges":[[1,2],[2,1]]})");
          }) == Errc::duplicate_edge);
    CHECK(error_of([] {
              parse_graph(R"({"n":3,"r":3,"part":[1,2,3],"edges":[[1,3]],"host_edges":[[1,2],[2,3]]})");
          }) == Errc::host_edge_violation);
    CHECK(error_of([] { parse_graph(R"({"n":2,"r":2,"part":[1,2],"edges":[[1,5]]})"); }) ==
          Errc::invalid_vertex);

    try {
        parse_graph(R"({"n":3,"r":2,"part":[1,2,1],"edges":[[1,3]]})");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("{1,3}") != std::string::npos);
    }
}

TEST_CASE("empty graph") {
    const auto g = parse_graph(R"({"n":0,"r":1,"part":[],"edges":[]})");
    CHECK(g.order() == 0);
    CHECK(g.edges().empty());
}

TEST_CASE("serialization is key-ordered and round-trips") {
    const auto g = parse_graph(
        R"({"edges":[[3,2],[1,2]],"part":[1,2,1],"r":2,"n":3,"host_edges":[[2,1]]})");
    CHECK(serialize_graph(g) ==
          R"({"n":3,"r":2,"part":[1,2,1],"edges":[[1,2],[2,3]],"host_edges":[[1,2]]})");
    CHECK(parse_graph(serialize_graph(g)) == g);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto h = random_rpartite(3, {2, 3, 1}, 0.4, seed);
        CHECK(parse_graph(serialize_graph(h)) == h);
    }
}

TEST_CASE("builtin examples") {
    const auto fig2 = builtin_example("fig2");
    CHECK(fig2.order() == 10);
    for (int v : {2, 3, 6, 9})
        CHECK(fig2.part(v) == 1);
    for (int v : {1, 4, 5, 7, 8, 10})
        CHECK(fig2.part(v) == 2);
    CHECK(fig2.edges().size() == 15);
    CHECK(fig2.adjacent(6, 7));
    CHECK(error_of([] { builtin_example("fig3"); }) == Errc::unknown_example);
}

TEST_CASE("random_rpartite") {
    const auto empty = random_rpartite(3, {2, 2, 2}, 0.0, 7);
    CHECK(empty.edges().empty());

    const auto k22 = random_rpartite(2, {2, 2}, 1.0, 7);
    CHECK(k22.edges() == std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});

    const auto full = random_rpartite(3, {2, 1, 3}, 1.0, 1);
    CHECK(full.edges().size() == 2 * 1 + 2 * 3 + 1 * 3);

    CHECK(random_rpartite(3, {2, 2, 2}, 0.5, 42) == random_rpartite(3, {2, 2, 2}, 0.5, 42));
    CHECK(error_of([] { random_rpartite(2, {1, 1}, 1.5, 0); }) == Errc::invalid_argument);
    CHECK(error_of([] { random_rpartite(2, {1, 1}, -0.1, 0); }) == Errc::invalid_argument);

    const auto with_empty_part = random_rpartite(3, {2, 0, 2}, 1.0, 3);
    CHECK(with_empty_part.part_count() == 3);
    CHECK(with_empty_part.order() == 4);
}

TEST_CASE("adjacency_matrix") {
    const auto fig2 = builtin_example("fig2");
    const auto m = adjacency_matrix(fig2, CircularOrdering::identity(10));
    int ones = 0;
    for (int p = 1; p <= 10; ++p)
        for (int q = 1; q <= 10; ++q) {
            CHECK(m.at(p, q) == m.at(q, p));
            CHECK(m.at(p, q) == (p != q && fig2.adjacent(p, q)));
            ones += m.at(p, q);
        }
    CHECK(ones == 2 * 15);

    const auto k22 = random_rpartite(2, {2, 2}, 1.0, 0);
    const auto mk = adjacency_matrix(k22, CircularOrdering::identity(4));
    for (int p = 1; p <= 4; ++p)
        for (int q = 1; q <= 4; ++q)
            CHECK(mk.at(p, q) == ((p <= 2) != (q <= 2)));

    const auto edgeless = random_rpartite(2, {3, 3}, 0.0, 0);
    const auto me = adjacency_matrix(edgeless, CircularOrdering({6, 5, 4, 3, 2, 1}));
    for (const auto& row : me.bits)
        for (auto b : row)
            CHECK(b == 0);

    CHECK(error_of([&] { adjacency_matrix(k22, CircularOrdering::identity(3)); }) ==
          Errc::invalid_ordering);
}

TEST_CASE("adjacency matrix is symmetric with zero diagonal under any ordering") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = random_rpartite(3, {2, 3, 2}, 0.5, seed);
        std::vector<int> seq{7, 3, 5, 1, 2, 6, 4};
        std::rotate(seq.begin(), seq.begin() + static_cast<long>(seed % 7), seq.end());
        const auto m = adjacency_matrix(g, CircularOrdering(seq));
        for (int p = 1; p <= 7; ++p) {
            CHECK(!m.at(p, p));
            for (int q = 1; q <= 7; ++q)
                CHECK(m.at(p, q) == m.at(q, p));
        }
    }
}

TEST_CASE("CircularOrdering rejects non-permutations") {
    CHECK(error_of([] { CircularOrdering({1, 1, 2}); }) == Errc::invalid_ordering);
    CHECK(error_of([] { CircularOrdering({0, 1}); }) == Errc::invalid_ordering);
    CHECK(error_of([] { CircularOrdering({1, 3}); }) == Errc::invalid_ordering);
    const CircularOrdering o({3, 1, 2});
    CHECK(o.position(3) == 1);
    CHECK(o.at(2) == 1);
    CHECK(o.rotated(2).sequence() == std::vector<int>{1, 2, 3});
}
