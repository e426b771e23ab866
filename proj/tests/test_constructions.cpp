#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "specgraph/connectivity.hpp"
#include "specgraph/constructions.hpp"
#include "specgraph/formats.hpp"
#include "specgraph/spectrum.hpp"
#include "specgraph/toughness.hpp"

using namespace specgraph;

TEST_CASE("matching complement") {
    Graph g = matching_complement(6);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 12);  // C(6,2) - 3
    REQUIRE(regular_degree(g).has_value());
    CHECK(*regular_degree(g) == 4);
    for (int i = 0; i < 3; ++i) CHECK(!g.adjacent(2 * i, 2 * i + 1));
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(1, 2));

    // t = 2 degenerates to two isolated vertices
    Graph g2 = matching_complement(2);
    CHECK(g2.edge_count() == 0);

    CHECK_THROWS_AS(matching_complement(5), std::invalid_argument);
    CHECK_THROWS_AS(matching_complement(0), std::invalid_argument);
}

TEST_CASE("extremal family members") {
    // d = 3: matching complement on 2 vertices joined with K_2 is K_4 - e
    Graph x3 = x_graph(3);
    CHECK(x3.vertex_count() == 4);
    CHECK(x3.edge_count() == 5);
    CHECK(!x3.adjacent(0, 1));

    // d = 4: complement on 2 joined with K_3 is K_5 - e
    Graph x4 = x_graph(4);
    CHECK(x4.vertex_count() == 5);
    CHECK(x4.edge_count() == 9);
    CHECK(to_graph6(x4) == "D^{");

    // general shape: n = d+1, 2m = d^2+1 (odd d) or d^2+2 (even d), so the
    // density floor 2m >= dn-d+1 = d^2+1 holds with no slack for odd d
    for (int d = 3; d <= 10; ++d) {
        Graph x = x_graph(d);
        CHECK(x.vertex_count() == d + 1);
        CHECK(2 * x.edge_count() == d * d + (d % 2 == 0 ? 2 : 1));
        int maxdeg = 0, mindeg = d + 1;
        for (int v = 0; v < x.vertex_count(); ++v) {
            maxdeg = std::max(maxdeg, x.degree(v));
            mindeg = std::min(mindeg, x.degree(v));
        }
        CHECK(maxdeg == d);
        CHECK(mindeg == d - 1);
        CHECK(is_connected(x));
        CHECK(membership_x_family(x, d).member);
        // the defining property: lambda_1 lands exactly on theta(d)
        double lam1 = adjacency_spectrum(x).lambda(1);
        CHECK(lam1 == doctest::Approx(theta(d).value).epsilon(1e-11));
    }

    CHECK_THROWS_AS(x_graph(2), std::invalid_argument);
}

TEST_CASE("gadget goldens") {
    Graph g = gadget_4regular();
    CHECK(g.vertex_count() == 11);
    CHECK(g.edge_count() == 22);
    CHECK(*regular_degree(g) == 4);
    CHECK(to_graph6(g) == "J^{??KF@}K?");
    CHECK(is_connected(g));

    // apex 10 is the unique cut vertex separating the two copies
    CHECK(vertex_connectivity(g) == 1);
    CHECK(edge_connectivity(g) == 2);
    CHECK(g.adjacent(10, 0));
    CHECK(g.adjacent(10, 1));
    CHECK(g.adjacent(10, 5));
    CHECK(g.adjacent(10, 6));
    CHECK(testoracle::components_after_removal(g, {10}) == 2);

    // second eigenvalue sits exactly on the spectral fence
    CHECK(adjacency_spectrum(g).lambda(2) == doctest::Approx(theta(4).value).epsilon(1e-11));

    Toughness t = toughness_exact(g);
    CHECK(t.value == Rational(1, 2));
    CHECK(t.witness == VertexSet{10});
}

TEST_CASE("family membership clauses") {
    XFamilyCheck ok = membership_x_family(x_graph(5), 5);
    CHECK(ok.connected);
    CHECK(ok.irregular);
    CHECK(ok.max_degree_is_d);
    CHECK(ok.order_ok);
    CHECK(ok.size_ok);
    CHECK(ok.degree_d_count_ok);
    CHECK(ok.degree_d_count == 2);  // the joined K_2 for odd d
    CHECK(ok.member);
    CHECK(membership_x_family(x_graph(4), 4).degree_d_count == 3);  // K_3 for even d

    // regular graphs fail exactly the irregularity clause
    XFamilyCheck reg = membership_x_family(petersen(), 3);
    CHECK(reg.connected);
    CHECK(!reg.irregular);
    CHECK(reg.max_degree_is_d);
    CHECK(!reg.member);

    // a star has the degree but not the size
    XFamilyCheck st = membership_x_family(star(4), 4);
    CHECK(st.connected);
    CHECK(st.irregular);
    CHECK(st.max_degree_is_d);
    CHECK(st.order_ok);
    CHECK(!st.size_ok);
    CHECK(!st.member);

    // wrong d misses the max-degree clause
    CHECK(!membership_x_family(x_graph(4), 5).member);
    CHECK(!membership_x_family(x_graph(4), 5).max_degree_is_d);

    // disconnected candidates fail the first clause
    Graph split = Graph::from_edge_list(8, {{0, 1}});
    CHECK(!membership_x_family(split, 1).connected);
    CHECK(!membership_x_family(split, 1).member);
}

TEST_CASE("named constructors") {
    Graph c5 = cycle(5);
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(*regular_degree(c5) == 2);

    Graph p4 = path_graph(4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);

    CHECK(complete(5).edge_count() == 10);
    CHECK(complete(0).vertex_count() == 0);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(bipartition(complete_bipartite(3, 3)).has_value());

    Graph pet = petersen();
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(*regular_degree(pet) == 3);
    CHECK(to_graph6(pet) == "IheA@GUAo");
    CHECK(vertex_connectivity(pet) == 3);
    // outer cycle, spokes, inner pentagram
    CHECK(pet.adjacent(0, 1));
    CHECK(pet.adjacent(0, 5));
    CHECK(pet.adjacent(5, 7));

    Graph q3 = hypercube(3);
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(*regular_degree(q3) == 3);
    CHECK(bipartition(q3).has_value());
    CHECK(hypercube(0).vertex_count() == 1);
    CHECK_THROWS_AS(hypercube(10), std::invalid_argument);

    Graph s4 = star(4);
    CHECK(s4.vertex_count() == 5);
    CHECK(s4.degree(0) == 4);
    CHECK(s4.degree(1) == 1);

    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}

TEST_CASE("named graph dispatch") {
    CHECK(named_graph("cycle", {6}).edge_count() == 6);
    CHECK(named_graph("path", {4}).edge_count() == 3);
    CHECK(named_graph("complete", {4}).edge_count() == 6);
    CHECK(named_graph("complete-bipartite", {2, 4}).edge_count() == 8);
    CHECK(named_graph("petersen", {}).vertex_count() == 10);
    CHECK(named_graph("hypercube", {3}).vertex_count() == 8);
    CHECK(named_graph("star", {5}).vertex_count() == 6);

    CHECK_THROWS_AS(named_graph("moebius", {4}), std::invalid_argument);
    // arity is checked, not silently truncated
    CHECK_THROWS_AS(named_graph("cycle", {}), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("cycle", {4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("petersen", {1}), std::invalid_argument);
}

TEST_CASE("random regular sampling") {
    // determinism: identical seed, identical graph
    Graph a = random_regular(12, 3, 42);
    Graph b = random_regular(12, 3, 42);
    CHECK(a == b);

    // different seeds should disagree at least once over a few draws
    bool differs = false;
    for (std::uint64_t s = 0; s < 6 && !differs; ++s)
        differs = !(random_regular(12, 3, s) == a);
    CHECK(differs);

    // validity across a grid of feasible parameters
    for (int n : {4, 7, 10, 13}) {
        for (int d : {0, 1, 2, 3, 4}) {
            if (d >= n || (n * d) % 2 != 0) continue;
            for (std::uint64_t seed : {1ull, 9ull}) {
                Graph g = random_regular(n, d, seed);
                CHECK(g.vertex_count() == n);
                REQUIRE(regular_degree(g).has_value());
                CHECK(*regular_degree(g) == d);
            }
        }
    }

    CHECK_THROWS_AS(random_regular(5, 3, 1), std::invalid_argument);   // odd nd
    CHECK_THROWS_AS(random_regular(4, 4, 1), std::invalid_argument);   // d >= n
    CHECK_THROWS_AS(random_regular(3, -1, 1), std::invalid_argument);
}

TEST_CASE("exhaustive enumeration counts") {
    // frozen counts for connected labeled d-regular graphs
    CHECK(count_connected_regular(4, 3) == 1);
    CHECK(count_connected_regular(6, 3) == 70);
    CHECK(count_connected_regular(8, 3) == 19320);
    CHECK(count_connected_regular(5, 4) == 1);
    CHECK(count_connected_regular(6, 4) == 15);
    CHECK(count_connected_regular(7, 4) == 465);

    // odd n*d: nothing to enumerate
    CHECK(count_connected_regular(5, 3) == 0);
    CHECK(count_connected_regular(7, 3) == 0);

    // tiny degenerate cases
    CHECK(count_connected_regular(1, 0) == 1);
    CHECK(count_connected_regular(2, 1) == 1);
    CHECK(count_connected_regular(3, 2) == 1);
    CHECK(count_connected_regular(2, 0) == 0);  // disconnected pair

    // independent oracle: brute scan over all graphs on n <= 7 vertices
    for (auto [n, d] : {std::pair{4, 3}, {6, 3}, {5, 4}, {6, 4}, {7, 4}, {6, 5}, {5, 2}})
        CHECK(count_connected_regular(n, d) == testoracle::count_regular_connected_scan(n, d));
}

TEST_CASE("enumeration emits each graph once, valid and connected") {
    std::set<std::string> seen;
    enumerate_connected_regular(6, 3, [&](const Graph& g) {
        CHECK(g.vertex_count() == 6);
        CHECK(*regular_degree(g) == 3);
        CHECK(is_connected(g));
        CHECK(seen.insert(to_graph6(g)).second);
    });
    CHECK(seen.size() == 70);

    // K_4 is the unique connected cubic graph on 4 vertices
    enumerate_connected_regular(4, 3, [&](const Graph& g) {
        CHECK(g == complete(4));
    });
}
