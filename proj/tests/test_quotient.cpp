#include "imprim/catalog.hpp"
#include "imprim/classifier.hpp"
#include "imprim/errors.hpp"
#include "imprim/quotient.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

using namespace imprim;

namespace {

SymmetricTriple triple(const std::string & key)
{
    return *catalog_lookup(key).triple;
}

// Direct recount of (v, k, r, b) at block 0 and vertex 0 without the trace table.
std::array<std::size_t, 4> recount(const SymmetricTriple & t)
{
    std::vector<std::size_t> owner(t.graph.vertex_count());
    for (std::size_t i = 0; i < t.partition.size(); ++i)
        for (auto x : t.partition[i])
            owner[x] = i;
    const auto & block = t.partition[0];
    std::set<std::size_t> adjacent;
    for (auto x : block)
        for (auto y : t.graph.neighbours(x))
            adjacent.insert(owner[y]);
    std::size_t c = *adjacent.begin();
    std::size_t k = 0;
    for (auto x : block)
        k += std::any_of(t.graph.neighbours(x).begin(), t.graph.neighbours(x).end(),
            [&](Vertex y) { return owner[y] == c; });
    std::set<std::size_t> seen_by_first;
    for (auto y : t.graph.neighbours(block[0]))
        seen_by_first.insert(owner[y]);
    return {block.size(), k, seen_by_first.size(), adjacent.size()};
}

} // namespace

TEST_CASE("validate_partition examples")
{
    CHECK(validate_partition(triple("c6-antipodal")).valid());

    auto c6 = build_named_graph("cycle", {6});
    SymmetricTriple singletons(c6, dihedral_group(6), {{0}, {1}, {2}, {3}, {4}, {5}});
    auto report = validate_partition(singletons);
    CHECK_FALSE(report.valid());
    bool trivial = false;
    for (const auto & c : report.failures())
        trivial |= c.name == "nontrivial";
    CHECK(trivial);

    SymmetricTriple adjacent_pairs(c6, dihedral_group(6), {{0, 1}, {2, 3}, {4, 5}});
    auto split = validate_partition(adjacent_pairs);
    CHECK_FALSE(split.valid());
    bool invariance = false;
    for (const auto & c : split.failures())
        invariance |= c.name == "G-invariant";
    CHECK(invariance);
    CHECK_THROWS_AS(require_valid(adjacent_pairs), PreconditionError);
}

TEST_CASE("validate_partition flags overlap and missing vertices")
{
    auto c6 = build_named_graph("cycle", {6});
    SymmetricTriple gap(c6, dihedral_group(6), {{0, 3}, {1, 4}});
    CHECK_FALSE(validate_partition(gap).valid());
}

TEST_CASE("quotient graph examples")
{
    auto k5 = build_named_graph("complete", {5});
    auto arc_pair = quotient_graph(triple("arc-pair-k5"));
    CHECK(arc_pair.graph == k5);
    CHECK(quotient_graph(triple("c6-antipodal")).graph == build_named_graph("complete", {3}));
    CHECK(quotient_graph(triple("xi-k4")).graph == build_named_graph("complete", {4}));
    CHECK(quotient_graph(triple("chain-4")).graph == build_named_graph("cycle", {4}));
}

TEST_CASE("quotient is G-symmetric for every catalog triple")
{
    for (const auto & key : catalog_triple_keys()) {
        CAPTURE(key);
        auto q = quotient_graph(triple(key));
        CHECK(is_s_arc_transitive(q.graph, q.action.image_group(), 1));
    }
}

TEST_CASE("parameter examples")
{
    CHECK(parameters(triple("arc-pair-k5")) == Parameters{4, 1, 1, 4, 1});
    CHECK(parameters(triple("xi-k4")) == Parameters{3, 2, 2, 3, 1});
    CHECK(parameters(triple("gamma2-k5")) == Parameters{6, 3, 2, 4, 1});
    CHECK(parameters(triple("c6-antipodal")) == Parameters{2, 2, 2, 2, 2});
}

TEST_CASE("parameters agree with a direct recount and satisfy vr = bk and m | gcd(r, b)")
{
    for (const auto & key : catalog_triple_keys()) {
        CAPTURE(key);
        auto t = triple(key);
        auto par = parameters(t);
        auto direct = recount(t);
        CHECK(par.v == direct[0]);
        CHECK(par.k == direct[1]);
        CHECK(par.r == direct[2]);
        CHECK(par.b == direct[3]);
        CHECK(par.v * par.r == par.b * par.k);
        CHECK(std::gcd(par.r, par.b) % par.m == 0);
    }
}

TEST_CASE("representative dependence is detected")
{
    // Block {0,1} meets {2,3} in two vertices but {4,5} in one.
    Graph g(6, {{0, 2}, {1, 3}, {0, 4}});
    CHECK_THROWS_AS(parameters(g, {{0, 1}, {2, 3}, {4, 5}}), RepresentativeDependent);
}

TEST_CASE("lambda examples")
{
    auto gamma2 = lambda_pairwise(triple("gamma2-k5"), 3);
    CHECK(gamma2.constant);
    CHECK(gamma2.lambda == 1);
    CHECK(gamma2.lambda_bar == 1);
    CHECK(gamma2.eq_vr.lhs == 12);
    CHECK(gamma2.eq_vr.holds());
    CHECK(gamma2.eq_lambda.lhs == 3);
    CHECK(gamma2.eq_lambda.holds());
    REQUIRE(gamma2.fisher);
    CHECK(*gamma2.fisher);

    auto arc_pair = lambda_pairwise(triple("arc-pair-k5"), 3);
    CHECK(arc_pair.constant);
    CHECK(arc_pair.lambda == 0);
    CHECK(arc_pair.lambda_bar == 2);
    CHECK(arc_pair.eq_vr.holds());
    CHECK(arc_pair.eq_lambda.lhs == 0);
    CHECK(arc_pair.eq_lambda.holds());
    CHECK_FALSE(arc_pair.fisher);

    auto chain = lambda_pairwise(triple("chain-4"), 3);
    CHECK(chain.constant);
    CHECK(chain.single_pair);

    CHECK_THROWS_AS(lambda_pairwise(triple("arc-pair-k5"), 5), PreconditionError);
}

TEST_CASE("lambda is constant whenever the quotient is 2-arc-transitive")
{
    for (const auto & key : catalog_triple_keys()) {
        CAPTURE(key);
        auto t = triple(key);
        auto q = quotient_graph(t);
        auto par = parameters(t);
        if (par.b < 2 || ! is_s_arc_transitive(q.graph, q.action.image_group(), 2))
            continue;
        CHECK(lambda_pairwise(t, par.p()).constant);
    }
}

TEST_CASE("lambda witness for a non-constant intersection")
{
    // Five blocks of four over K5. Block i meets its j-th neighbouring block in
    // {j, j+1 mod 4}, so (v,k,r,b) is constant while two traces share one or
    // zero points depending on the pair.
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i)
        for (Vertex j = i + 1; j < 5; ++j) {
            Vertex slot_i = j - 1, slot_j = i;
            for (Vertex e = 0; e < 2; ++e) {
                std::array<Vertex, 2> mine{slot_i, (slot_i + 1) % 4}, theirs{slot_j, (slot_j + 1) % 4};
                std::sort(mine.begin(), mine.end());
                std::sort(theirs.begin(), theirs.end());
                edges.push_back({4 * i + mine[e], 4 * j + theirs[e]});
            }
        }
    Graph g(20, edges);
    SymmetricTriple t(g, GeneratedGroup::trivial(20), {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}, {12, 13, 14, 15},
        {16, 17, 18, 19}});
    CHECK(parameters(t) == Parameters{4, 2, 2, 4, 1});
    auto report = lambda_pairwise(t, 2);
    CHECK_FALSE(report.constant);
    REQUIRE(report.witness);
    CHECK(report.witness->block == 0);
    CHECK(report.witness->value != report.lambda);
}

TEST_CASE("refinement on the K4 3-arc graph")
{
    auto report = blocks_refinement(triple("xi-k4"));
    CHECK(report.refined.size() == 12);
    for (const auto & block : report.refined)
        CHECK(block.size() == 1);
    CHECK(report.a == 3);
    CHECK(report.hat_parameters.v == 3);
    CHECK(report.hat_parameters.b == 3);
    CHECK(report.hat_parameters.k == 2);
    CHECK(report.hat_parameters.r == 2);
    CHECK(report.quotient_correspondence);
    CHECK(report.all_checks_passed());
    CHECK(report.p == 1);
    CHECK(static_cast<long>(report.t) * report.p == static_cast<long>(report.k_refined * report.s));
}

TEST_CASE("refinement blocks have size v - k")
{
    auto t = triple("xi-k4");
    auto par = parameters(t);
    for (const auto & block : blocks_refinement(t).refined)
        CHECK(block.size() == par.v - par.k);
}

TEST_CASE("refinement errors")
{
    CHECK_THROWS_AS(blocks_refinement(triple("arc-pair-k5")), OverlappingTraces);
    CHECK_THROWS_AS(blocks_refinement(triple("c6-antipodal")), EmptyTrace);
}

TEST_CASE("trace table excludes the vertex's own block")
{
    auto t = triple("gamma2-k5");
    auto table = compute_traces(t.graph, t.partition);
    for (std::size_t b = 0; b < table.neighbour_blocks.size(); ++b)
        CHECK(std::find(table.neighbour_blocks[b].begin(), table.neighbour_blocks[b].end(), b)
            == table.neighbour_blocks[b].end());
}
