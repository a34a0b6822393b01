#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "carc/error.hpp"
#include "carc/io.hpp"
#include "carc/r_circular.hpp"
#include "carc/recognition.hpp"
#include "oracles.hpp"

using namespace carc;

namespace {

RPartiteGraph fixture(const std::string& name) {
    std::ifstream in(std::string(CARC_FIXTURE_DIR) + "/" + name);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

void check_certificate(const RPartiteGraph& g, const Decision& d) {
    REQUIRE(d.yes);
    REQUIRE(d.ordering);
    REQUIRE(d.model);
    CHECK(verify_gtc(g, *d.ordering).pass);
    CHECK(verify_r_circular(g, *d.ordering).pass);
    CHECK(validate_model(g, *d.model).pass);
}

} // namespace

TEST_CASE("fig1") {
    const auto g = builtin_example("fig1");
    const auto d = recognize(g);
    check_certificate(g, d);
    CHECK(*d.ordering == CircularOrdering::identity(8));

    const auto b = recognize_bruteforce(g);
    check_certificate(g, b);
    CHECK(*b.ordering == CircularOrdering::identity(8));
    CHECK(b.orderings_searched == 1);
}

TEST_CASE("small yes instances") {
    const auto k22 = random_rpartite(2, {2, 2}, 1.0, 0);
    check_certificate(k22, recognize(k22));

    const RPartiteGraph edge(2, 2, {1, 2}, {{1, 2}});
    const auto d = recognize_bruteforce(edge);
    check_certificate(edge, d);
    CHECK(d.ordering->sequence() == std::vector<int>{1, 2});

    const RPartiteGraph edgeless(5, 3, {1, 2, 3, 1, 2}, {});
    const auto e = recognize_bruteforce(edgeless);
    check_certificate(edgeless, e);
    CHECK(*e.ordering == CircularOrdering::identity(5));
    check_certificate(edgeless, recognize(edgeless));

    const RPartiteGraph empty(0, 1, {}, {});
    CHECK(recognize(empty).yes);
}

TEST_CASE("smallest negative bipartite instance") {
    // C6 plus a disjoint edge; no bipartite graph on at most 7 vertices is a no-instance.
    const auto g = fixture("c6_plus_k2.json");
    const auto d = recognize(g);
    CHECK_FALSE(d.yes);
    CHECK(d.exhaustive);
    CHECK_FALSE(d.ordering);
    const auto b = recognize_bruteforce(g);
    CHECK_FALSE(b.yes);
    CHECK(b.orderings_searched == 40320);
    CHECK_FALSE(recognize(g, {12, SearchMode::parallel, 4}).yes);

    // every one-edge-deleted subgraph is a yes-instance
    const std::vector<std::pair<Edge, std::vector<int>>> expected{
        {{1, 7}, {1, 2, 3, 6, 7, 4, 5, 8}}, {{1, 8}, {1, 3, 2, 6, 8, 4, 5, 7}},
        {{2, 6}, {1, 2, 4, 5, 3, 6, 7, 8}}, {{2, 8}, {1, 2, 3, 6, 4, 5, 8, 7}},
        {{3, 6}, {1, 2, 6, 4, 5, 3, 7, 8}}, {{3, 7}, {1, 2, 3, 6, 4, 5, 7, 8}},
        {{4, 5}, {1, 2, 3, 5, 6, 7, 4, 8}},
    };
    REQUIRE(expected.size() == g.edges().size());
    for (const auto& [drop, first] : expected) {
        CAPTURE(drop.first);
        CAPTURE(drop.second);
        std::vector<Edge> edges;
        for (const auto& e : g.edges())
            if (e != drop)
                edges.push_back(e);
        const RPartiteGraph sub(8, 2, g.parts(), edges);
        const auto sd = recognize(sub);
        check_certificate(sub, sd);
        CHECK(sd.ordering->sequence() == first);
        CHECK(recognize_bruteforce(sub).ordering->sequence() == first);
    }
}

TEST_CASE("parallel mode") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = oracle::random_graph(rng, 7, 2 + trial % 3, 0.5);
        const auto seq = recognize(g);
        const auto par = recognize(g, {12, SearchMode::parallel, 3});
        CHECK(seq.yes == par.yes);
        CHECK(par.mode == SearchMode::parallel);
        if (par.yes)
            check_certificate(g, par);
    }
}

TEST_CASE("limits and host graph") {
    const auto big = random_rpartite(2, {7, 7}, 0.3, 1);
    try {
        recognize(big);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::limit_exceeded);
    }
    CHECK_NOTHROW(recognize(random_rpartite(2, {3, 3}, 0.3, 1), {6}));
    CHECK_THROWS_AS(recognize_bruteforce(big), Error);

    const RPartiteGraph hosted(3, 3, {1, 2, 3}, {{1, 2}}, std::vector<HostEdge>{{1, 2}});
    try {
        recognize(hosted);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unsupported_host);
    }
}

TEST_CASE("an isolated vertex keeps the answer yes") {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = oracle::random_graph(rng, 6, 3, 0.5);
        if (!recognize(g).yes)
            continue;
        auto parts = g.parts();
        parts.push_back(1);
        const RPartiteGraph bigger(7, 3, parts, g.edges());
        check_certificate(bigger, recognize(bigger));
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("equivalence harness on the worked examples") {
    const auto r1 = equivalence_harness(builtin_example("fig1"));
    CHECK(r1.agree);
    CHECK(r1.gtc_exists);
    CHECK(r1.r_circular_exists);
    CHECK(r1.pattern_free_exists);
    CHECK(r1.orderings_checked == 40320);
    CHECK(r1.round_trips == r1.passing_orderings);

    const auto r2 = equivalence_harness(builtin_example("fig2"));
    CHECK(r2.agree);
    CHECK(r2.gtc_exists);
    CHECK(r2.orderings_checked == 3628800);
    CHECK(r2.round_trips == r2.passing_orderings);

    const auto r3 = equivalence_harness(fixture("c6_plus_k2.json"));
    CHECK(r3.agree);
    CHECK_FALSE(r3.gtc_exists);
    CHECK_FALSE(r3.r_circular_exists);
    CHECK_FALSE(r3.pattern_free_exists);
}

TEST_CASE("equivalence harness on random graphs") {
    std::mt19937_64 rng(200);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 6;
        const auto g = oracle::random_graph(rng, n, 2 + trial % 3, 0.5);
        const auto r = equivalence_harness(g);
        CHECK_MESSAGE(r.agree, r.disagreement);
        CHECK(r.gtc_exists == recognize(g).yes);
    }
}
