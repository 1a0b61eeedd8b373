#include "imprim/catalog.hpp"
#include "imprim/errors.hpp"
#include "imprim/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace imprim;

namespace {

// Count s-arcs by scanning every vertex sequence of length s+1.
std::size_t brute_s_arc_count(const Graph & g, std::size_t s)
{
    std::size_t n = g.vertex_count();
    std::vector<Vertex> walk(s + 1, 0);
    std::size_t count = 0;
    while (true) {
        bool ok = true;
        for (std::size_t i = 1; i <= s && ok; ++i)
            ok = g.has_edge(walk[i - 1], walk[i]);
        for (std::size_t i = 1; i + 1 <= s && ok; ++i)
            ok = walk[i - 1] != walk[i + 1];
        count += ok;
        std::size_t pos = 0;
        while (pos <= s && ++walk[pos] == n)
            walk[pos++] = 0;
        if (pos > s)
            return count;
    }
}

} // namespace

TEST_CASE("named graph sizes")
{
    auto k5 = build_named_graph("complete", {5});
    CHECK(k5.vertex_count() == 5);
    CHECK(k5.edge_count() == 10);
    auto c6 = build_named_graph("cycle", {6});
    CHECK(c6.vertex_count() == 6);
    CHECK(c6.edge_count() == 6);
    auto crown = build_named_graph("crown", {4});
    CHECK(crown.vertex_count() == 8);
    CHECK(crown.edge_count() == 12);
    auto petersen = build_named_graph("petersen", {});
    CHECK(petersen.edge_count() == 15);
    CHECK(petersen.valency() == 3);
    CHECK(build_named_graph("complete-bipartite", {3}).edge_count() == 9);
    CHECK(build_named_graph("disjoint-cycle", {3, 4}).edge_count() == 12);
    CHECK(disjoint_copies(k5, 2).edge_count() == 20);
}

TEST_CASE("named graph errors")
{
    CHECK_THROWS(build_named_graph("cycle", {2}));
    CHECK_THROWS(build_named_graph("nonsense", {3}));
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric")
{
    for (const auto & g : {build_named_graph("petersen", {}), build_named_graph("crown", {5})})
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (auto w : g.neighbours(u))
                CHECK(g.has_edge(w, u));
}

TEST_CASE("s-arc counts")
{
    auto k4 = build_named_graph("complete", {4});
    auto k5 = build_named_graph("complete", {5});
    auto c6 = build_named_graph("cycle", {6});
    CHECK(s_arcs(k5, 1).size() == 20);
    CHECK(s_arcs(k4, 3).size() == 48);
    CHECK(s_arcs(c6, 2).size() == 12);
    CHECK(s_arcs(k5, 0).size() == 5);
    CHECK(brute_s_arc_count(k4, 3) == 48);
    CHECK(brute_s_arc_count(build_named_graph("petersen", {}), 3) == s_arcs(build_named_graph("petersen", {}), 3).size());
}

TEST_CASE("s-arc count formula |V| d (d-1)^(s-1) below the girth")
{
    auto k4 = build_named_graph("complete", {4});
    CHECK(s_arcs(k4, 1).size() == 4 * 3);
    for (long n = 3; n <= 8; ++n) {
        auto cycle = build_named_graph("cycle", {n});
        for (std::size_t s = 1; s < static_cast<std::size_t>(n); ++s)
            CHECK(s_arcs(cycle, s).size() == static_cast<std::size_t>(2 * n));
    }
}

TEST_CASE("s-arcs are lexicographic and closed under reversal")
{
    auto petersen = build_named_graph("petersen", {});
    auto arcs = s_arcs(petersen, 3);
    CHECK(std::is_sorted(arcs.begin(), arcs.end()));
    std::set<SArc> all(arcs.begin(), arcs.end());
    for (auto arc : arcs) {
        std::reverse(arc.begin(), arc.end());
        CHECK(all.count(arc) == 1);
    }
}

TEST_CASE("s-arc enumeration refuses huge requests")
{
    auto k30 = build_named_graph("complete", {30});
    CHECK_THROWS_AS(s_arcs(k30, 6), TooLarge);
}

TEST_CASE("s-arc transitivity examples")
{
    auto k5 = build_named_graph("complete", {5});
    CHECK(is_s_arc_transitive(k5, symmetric_group(5), 2));
    auto c6 = build_named_graph("cycle", {6});
    CHECK(is_s_arc_transitive(c6, dihedral_group(6), 2));
    auto petersen = build_named_graph("petersen", {});
    auto rotation = Permutation({1, 2, 3, 4, 0, 6, 7, 8, 9, 5});
    CHECK_FALSE(is_s_arc_transitive(petersen, GeneratedGroup(10, {rotation}), 1));
    CHECK(is_s_arc_transitive(petersen, *catalog_lookup("petersen").group, 3));
    CHECK_FALSE(is_s_arc_transitive(petersen, *catalog_lookup("petersen").group, 4));
}

TEST_CASE("non-automorphisms are named")
{
    auto c6 = build_named_graph("cycle", {6});
    GeneratedGroup bad(6, {Permutation::from_cycles(6, {{0, 2}})});
    CHECK_THROWS_AS(require_automorphisms(c6, bad), NotAutomorphism);
    CHECK_THROWS_AS(is_s_arc_transitive(c6, bad, 1), NotAutomorphism);
}

TEST_CASE("s-arc transitivity is monotone in s")
{
    std::vector<std::pair<Graph, GeneratedGroup>> cases{
        {build_named_graph("complete", {4}), symmetric_group(4)},
        {build_named_graph("cycle", {7}), dihedral_group(7)},
        {build_named_graph("cycle", {6}), GeneratedGroup(6, {Permutation({1, 2, 3, 4, 5, 0})})},
        {build_named_graph("petersen", {}), *catalog_lookup("petersen").group},
    };
    for (const auto & [g, group] : cases)
        for (std::size_t s = 2; s <= 4; ++s)
            if (is_s_arc_transitive(g, group, s))
                CHECK(is_s_arc_transitive(g, group, s - 1));
}

TEST_CASE("components")
{
    auto two = disjoint_copies(build_named_graph("cycle", {4}), 3);
    auto parts = connected_components(two);
    CHECK(parts.size() == 3);
    CHECK_FALSE(is_connected(two));
    CHECK(is_connected(build_named_graph("petersen", {})));
}

TEST_CASE("bipartite patterns")
{
    std::vector<Vertex> left{0, 1, 2, 3}, right{4, 5, 6, 7};
    std::vector<Edge> matching, all, cycle;
    for (Vertex i = 0; i < 4; ++i) {
        matching.push_back({i, 4 + i});
        cycle.push_back({i, 4 + i});
        cycle.push_back({i, 4 + (i + 1) % 4});
        for (Vertex j = 0; j < 4; ++j)
            all.push_back({i, 4 + j});
    }
    CHECK(classify_bipartite(Graph(8, matching), left, right).tag() == "4*K_2");
    CHECK(classify_bipartite(Graph(8, all), left, right).tag() == "K_{4,4}");
    CHECK(classify_bipartite(Graph(8, cycle), left, right).tag() == "C_8");
    CHECK(classify_bipartite(build_named_graph("crown", {4}), left, right).tag() == "(K_{4,4}-4*K_2)");
    CHECK(classify_bipartite(Graph(8, {}), left, right).tag() == "0*K_2");

    std::vector<Edge> two_squares{{0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 7}};
    auto pattern = classify_bipartite(Graph(8, two_squares), left, right);
    CHECK(pattern.copies == 2);
    CHECK(pattern.tag() == "2*C_4"); // K_{2,2} is reported as the 4-cycle

    std::vector<Edge> lopsided{{0, 4}, {0, 5}, {1, 4}};
    CHECK(classify_bipartite(Graph(8, lopsided), left, right).kind == BipartiteKind::other);
}

TEST_CASE("bipartite classification ignores edges inside a side")
{
    std::vector<Vertex> left{0, 1}, right{2, 3};
    Graph g(4, {{0, 1}, {0, 2}, {1, 3}});
    CHECK(classify_bipartite(g, left, right).tag() == "2*K_2");
}
