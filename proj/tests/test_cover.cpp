#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hjpoly/cover.hpp"
#include "hjpoly/errors.hpp"
#include "hjpoly/hj.hpp"
#include "hjpoly/seeded.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace hjpoly;

namespace {

Hypergraph rnd_hypergraph(SeedStream& s, std::uint32_t vmax, std::size_t emax) {
    Hypergraph h;
    h.vertex_count = 2 + static_cast<std::uint32_t>(s.next() % (vmax - 1));
    const std::size_t edges = 1 + s.next() % emax;
    std::set<std::vector<std::uint32_t>> dedup;
    for (std::size_t i = 0; i < edges; ++i) {
        const std::size_t size = 2 + s.next() % 3;
        std::set<std::uint32_t> e;
        while (e.size() < std::min<std::size_t>(size, h.vertex_count))
            e.insert(static_cast<std::uint32_t>(s.next() % h.vertex_count));
        dedup.insert(std::vector<std::uint32_t>(e.begin(), e.end()));
    }
    h.edges.assign(dedup.begin(), dedup.end());
    return h;
}

}  // namespace

TEST_CASE("transversal checking") {
    const HJHypergraph h32 = hj_hypergraph(3, 2);
    CHECK(check_transversal(h32.graph, Transversal{{0, 4, 8}}));
    CHECK_FALSE(check_transversal(h32.graph, Transversal{{0, 4}}));
    CHECK_FALSE(check_transversal(h32.graph, Transversal{{}}));
    CHECK(check_transversal(Hypergraph{3, {}}, Transversal{{}}));
    CHECK_THROWS_AS(check_transversal(h32.graph, Transversal{{0, 9}}), std::invalid_argument);
    CHECK_THROWS_AS(check_transversal(h32.graph, Transversal{{4, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(check_transversal(h32.graph, Transversal{{4, 4}}), std::invalid_argument);
}

TEST_CASE("transversal number of trivial hypergraphs") {
    const TauResult empty = tau_bruteforce(Hypergraph{5, {}});
    CHECK(empty.upper == 0);
    CHECK(empty.exact);

    const TauResult single = tau_bruteforce(Hypergraph{4, {{1, 2}}});
    CHECK(single.upper == 1);

    const TauResult exact_empty = tau_exact(Hypergraph{5, {}});
    CHECK(exact_empty.upper == 0);
    CHECK(exact_empty.exact);

    CHECK_THROWS_AS(tau_bruteforce(Hypergraph{64, {}}), CapExceededError);
}

TEST_CASE("transversal number of small line hypergraphs") {
    const HJHypergraph h32 = hj_hypergraph(3, 2);
    const TauResult bf32 = tau_bruteforce(h32.graph);
    const TauResult ex32 = tau_exact(h32.graph);
    CHECK(bf32.upper == 3);
    CHECK(ex32.exact);
    CHECK(ex32.upper == 3);
    CHECK(check_transversal(h32.graph, ex32.witness));

    const HJHypergraph h52 = hj_hypergraph(5, 2);
    const TauResult bf52 = tau_bruteforce(h52.graph);
    const TauResult ex52 = tau_exact(h52.graph);
    CHECK(bf52.upper == 5);
    CHECK(ex52.exact);
    CHECK(ex52.upper == 5);
    CHECK(check_transversal(h52.graph, ex52.witness));

    const HJHypergraph h22 = hj_hypergraph(2, 2);
    CHECK(tau_bruteforce(h22.graph).upper == 2);
    CHECK(tau_exact(h22.graph).upper == 2);
}

TEST_CASE("branch and bound matches brute force on random hypergraphs") {
    SeedStream s(43, 89);
    for (int i = 0; i < 60; ++i) {
        const Hypergraph h = rnd_hypergraph(s, 12, 14);
        const TauResult bf = tau_bruteforce(h);
        const TauResult ex = tau_exact(h);
        REQUIRE(ex.exact);
        CHECK(ex.upper == bf.upper);
        CHECK(ex.lower == ex.upper);
        CHECK(check_transversal(h, ex.witness));
        CHECK(ex.witness.vertices.size() == ex.upper);
    }
}

TEST_CASE("adding edges never lowers the transversal number") {
    SeedStream s(47, 88);
    for (int i = 0; i < 30; ++i) {
        Hypergraph h = rnd_hypergraph(s, 10, 8);
        const std::size_t before = tau_exact(h).upper;
        Hypergraph grown = h;
        std::set<std::uint32_t> e;
        while (e.size() < 2) e.insert(static_cast<std::uint32_t>(s.next() % h.vertex_count));
        std::vector<std::uint32_t> edge(e.begin(), e.end());
        if (std::find(grown.edges.begin(), grown.edges.end(), edge) == grown.edges.end()) {
            grown.edges.push_back(edge);
            CHECK(tau_exact(grown).upper >= before);
        }
    }
}

TEST_CASE("an expired deadline yields certified bounds") {
    // Complete 3-uniform hypergraph on 12 vertices: large search tree, weak
    // packing bound, so the node budget before the first deadline check is
    // guaranteed to be exceeded.
    Hypergraph h;
    h.vertex_count = 12;
    for (std::uint32_t a = 0; a < 12; ++a)
        for (std::uint32_t b = a + 1; b < 12; ++b)
            for (std::uint32_t c = b + 1; c < 12; ++c) h.edges.push_back({a, b, c});

    const TauResult full = tau_exact(h);
    CHECK(full.exact);
    CHECK(full.upper == 10);  // all but two vertices must be picked

    const TauResult cut = tau_exact(h, Deadline{std::chrono::steady_clock::now()});
    CHECK_FALSE(cut.exact);
    CHECK(cut.lower <= cut.upper);
    CHECK(cut.lower >= 4);  // greedy packing of disjoint triples
    CHECK(check_transversal(h, cut.witness));
    CHECK(cut.witness.vertices.size() == cut.upper);
}

TEST_CASE("transversal ratio") {
    CHECK(rho(hj_hypergraph(3, 2).graph) == Rat(1, 3));
    CHECK(rho(hj_hypergraph(5, 2).graph) == Rat(1, 5));
    CHECK(rho(hj_hypergraph(2, 2).graph) == Rat(1, 2));
    CHECK(rho(Hypergraph{4, {}}) == Rat(0));
    CHECK_THROWS_AS(rho(Hypergraph{0, {}}), std::domain_error);
}

TEST_CASE("coloring checks") {
    const HJHypergraph h32 = hj_hypergraph(3, 2);
    // Rows of the grid: 1 2 1 / 2 1 2 / 1 2 2 — every line gets two colors.
    const Coloring good{{1, 2, 1, 2, 1, 2, 1, 2, 2}};
    CHECK(check_coloring(h32.graph, good, 2));
    const Coloring bad{{1, 1, 1, 2, 1, 2, 1, 2, 2}};  // first row monochromatic
    CHECK_FALSE(check_coloring(h32.graph, bad, 2));
    CHECK_FALSE(check_coloring(h32.graph, Coloring{{0, 1, 1, 2, 1, 2, 1, 2, 2}}, 2));
    CHECK_THROWS_AS(check_coloring(h32.graph, Coloring{{1, 2}}, 2), std::invalid_argument);
}

TEST_CASE("weak chromatic number of small hypergraphs") {
    CHECK(chi_weak(Hypergraph{4, {}}).chi == 1);
    CHECK(chi_weak(Hypergraph{0, {}}).chi == 0);

    const ChiResult pair = chi_weak(Hypergraph{2, {{0, 1}}});
    CHECK(pair.chi == 2);
    CHECK(check_coloring(Hypergraph{2, {{0, 1}}}, pair.coloring, 2));

    CHECK_THROWS_AS(chi_weak(Hypergraph{2, {{0}}}), SizeOneEdgeError);
    CHECK_THROWS_AS(chi_bruteforce(Hypergraph{2, {{0}}}), SizeOneEdgeError);

    const HJHypergraph h32 = hj_hypergraph(3, 2);
    const ChiResult c32 = chi_weak(h32.graph);
    CHECK(c32.chi == 2);
    CHECK(check_coloring(h32.graph, c32.coloring, c32.chi));
    CHECK(chi_bruteforce(h32.graph).chi == 2);

    const HJHypergraph h22 = hj_hypergraph(2, 2);
    CHECK(chi_weak(h22.graph).chi == 3);
    CHECK(chi_bruteforce(h22.graph).chi == 3);

    const HJHypergraph h52 = hj_hypergraph(5, 2);
    const ChiResult c52 = chi_weak(h52.graph);
    CHECK(c52.chi == 2);
    CHECK(check_coloring(h52.graph, c52.coloring, c52.chi));

    CHECK_THROWS_AS(chi_bruteforce(hj_hypergraph(5, 2).graph), CapExceededError);
}

TEST_CASE("backtracking matches brute force coloring on random hypergraphs") {
    SeedStream s(53, 87);
    for (int i = 0; i < 40; ++i) {
        const Hypergraph h = rnd_hypergraph(s, 8, 10);
        const ChiResult bt = chi_weak(h);
        const ChiResult bf = chi_bruteforce(h);
        CHECK(bt.chi == bf.chi);
        CHECK(check_coloring(h, bt.coloring, bt.chi));
    }
}

TEST_CASE("transversal ratio respects the coloring bound") {
    // tau/V <= (chi-1)/chi whenever chi >= 2.
    const int cases[][2] = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}};
    for (auto& dn : cases) {
        const HJHypergraph hj = hj_hypergraph(dn[0], dn[1]);
        const ChiResult c = chi_weak(hj.graph);
        REQUIRE(c.chi >= 2);
        const Rat ratio = rho(hj.graph);
        CHECK(ratio <= Rat(c.chi - 1, c.chi));
    }
}
