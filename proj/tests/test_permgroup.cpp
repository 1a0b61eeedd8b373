#include "imprim/catalog.hpp"
#include "imprim/errors.hpp"
#include "imprim/permgroup.hpp"

#include "support/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace imprim;

namespace {

Permutation cycle(std::size_t degree, std::vector<Point> points)
{
    return Permutation::from_cycles(degree, {std::move(points)});
}

GeneratedGroup d12()
{
    return GeneratedGroup(6, {cycle(6, {0, 1, 2, 3, 4, 5}), Permutation::from_cycles(6, {{1, 5}, {2, 4}})});
}

std::vector<Point> all_points(std::size_t n)
{
    std::vector<Point> points(n);
    for (Point i = 0; i < n; ++i)
        points[i] = i;
    return points;
}

} // namespace

TEST_CASE("permutation rejects non-bijections")
{
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
    CHECK_NOTHROW(Permutation({2, 0, 1}));
}

TEST_CASE("compose applies the right operand first")
{
    auto p = cycle(3, {0, 1});
    auto q = cycle(3, {1, 2});
    CHECK(compose_inverse(p, q).images() == std::vector<Point>{1, 2, 0});
    CHECK(compose_inverse(Permutation::identity(4)) == Permutation::identity(4));
    CHECK(compose_inverse(Permutation({1, 2, 0})).images() == std::vector<Point>{2, 0, 1});
    CHECK_THROWS_AS(compose_inverse(p, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("p composed with its inverse is the identity")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = oracle::random_permutation(1 + trial % 9, rng);
        CHECK(compose(p, inverse(p)).is_identity());
        CHECK(compose(inverse(p), p).is_identity());
    }
}

TEST_CASE("orbit examples")
{
    CHECK(orbit(GeneratedGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}})}), 0) == std::vector<Point>{0, 1});
    CHECK(orbit(GeneratedGroup(5, {cycle(5, {0, 1, 2, 3, 4})}), 2) == std::vector<Point>{0, 1, 2, 3, 4});
    CHECK(orbit(GeneratedGroup(4, {cycle(4, {0, 1}), cycle(4, {2, 3})}), 2) == std::vector<Point>{2, 3});
    CHECK_THROWS(orbit(GeneratedGroup(4, {cycle(4, {0, 1})}), 4));
}

TEST_CASE("enumerate_group examples")
{
    GeneratedGroup s4(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
    CHECK(enumerate_group(s4).order == 24);
    CHECK(enumerate_group(GeneratedGroup::trivial(3)).order == 1);
    CHECK_THROWS_AS(enumerate_group(GeneratedGroup(7, {cycle(7, {0, 1, 2, 3, 4, 5, 6})}), 5), ExceedsBound);
}

TEST_CASE("enumeration agrees with a naive closure and is sorted")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t degree = 3 + trial % 5;
        std::vector<Permutation> gens{oracle::random_permutation(degree, rng), oracle::random_permutation(degree, rng)};
        GeneratedGroup group(degree, gens);
        auto expected = oracle::closure(group);
        auto got = enumerate_group(group);
        REQUIRE(got.order == expected.size());
        std::vector<oracle::Images> images;
        for (const auto & e : got.elements)
            images.push_back(e.images());
        CHECK(std::vector<oracle::Images>(expected.begin(), expected.end()) == images);
    }
}

TEST_CASE("enumeration is idempotent and independent of generator order")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t degree = 4 + trial % 4;
        auto a = oracle::random_permutation(degree, rng);
        auto b = oracle::random_permutation(degree, rng);
        GeneratedGroup first(degree, {a, b});
        GeneratedGroup second(degree, {b, a});
        CHECK(enumerate_group(first).elements == enumerate_group(first).elements);
        CHECK(first.elements() == second.elements());
    }
}

TEST_CASE("cached elements are closed and contain the identity")
{
    auto group = d12();
    const auto & elements = group.elements();
    CHECK(std::binary_search(elements.begin(), elements.end(), Permutation::identity(6)));
    for (const auto & x : elements) {
        CHECK(std::binary_search(elements.begin(), elements.end(), inverse(x)));
        for (const auto & y : elements)
            CHECK(std::binary_search(elements.begin(), elements.end(), compose(x, y)));
    }
}

TEST_CASE("is_k_transitive examples")
{
    GeneratedGroup s4(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
    GeneratedGroup c6(6, {cycle(6, {0, 1, 2, 3, 4, 5})});
    auto four = all_points(4);
    auto six = all_points(6);
    CHECK(is_k_transitive(s4, four, 2));
    CHECK_FALSE(is_k_transitive(c6, six, 2));
    CHECK(is_k_transitive(c6, six, 1));
    CHECK(is_k_transitive(c6, six, 0));
    std::vector<Point> part{0, 1, 2};
    CHECK_THROWS_AS(is_k_transitive(c6, part, 1), NotInvariant);
}

TEST_CASE("k-transitivity implies (k-1)-transitivity")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t degree = 4 + trial % 4;
        GeneratedGroup group(degree, {oracle::random_permutation(degree, rng), oracle::random_permutation(degree, rng)});
        auto domain = all_points(degree);
        for (std::size_t k = 2; k <= 3; ++k)
            if (is_k_transitive(group, domain, k))
                CHECK(is_k_transitive(group, domain, k - 1));
    }
}

TEST_CASE("stabilizer examples")
{
    GeneratedGroup s4(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
    std::vector<Point> zero{0};
    CHECK(stabilizer(s4, zero, StabilizerMode::point).order() == 6);

    auto dihedral = d12();
    std::vector<Point> pair{0, 3};
    CHECK(stabilizer(dihedral, pair, StabilizerMode::setwise).order() == 4);
    auto everything = all_points(6);
    CHECK(stabilizer(dihedral, everything, StabilizerMode::pointwise).order() == 1);
}

TEST_CASE("setwise stabilizer matches a direct filter")
{
    auto dihedral = d12();
    std::vector<Point> pair{0, 3};
    std::size_t count = 0;
    for (const auto & g : oracle::closure(dihedral)) {
        std::set<Point> image{g[0], g[3]};
        count += image == std::set<Point>{0, 3};
    }
    CHECK(count == 4);
}

TEST_CASE("orbit-stabilizer on random groups")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t degree = 4 + trial % 5;
        GeneratedGroup group(degree, {oracle::random_permutation(degree, rng), oracle::random_permutation(degree, rng)});
        for (Point x = 0; x < degree; ++x) {
            std::vector<Point> target{x};
            CHECK(orbit(group, x).size() * stabilizer(group, target, StabilizerMode::point).order() == group.order());
        }
    }
}

TEST_CASE("induced action examples")
{
    auto dihedral = d12();
    auto antipodal = induced_action(dihedral, {{0, 3}, {1, 4}, {2, 5}});
    CHECK(antipodal.action.image_group().order() == 6);
    CHECK(antipodal.kernel.order() == 2);

    auto trivial = induced_action(GeneratedGroup::trivial(4), {{0, 1}, {2, 3}});
    CHECK(trivial.action.image_group().order() == 1);
    CHECK(trivial.kernel.order() == 1);

    auto swap = induced_action(GeneratedGroup(2, {cycle(2, {0, 1})}), {{0}, {1}});
    CHECK(swap.action.rows().front() == std::vector<Point>{1, 0});
    CHECK(swap.kernel.order() == 1);

    CHECK_THROWS_AS(induced_action(dihedral, {{0, 1}, {2, 3}, {4, 5}}), NotInvariant);
}

TEST_CASE("kernel order times image order is the group order")
{
    std::vector<std::pair<GeneratedGroup, std::vector<std::vector<Point>>>> cases{
        {d12(), {{0, 3}, {1, 4}, {2, 5}}},
        {d12(), {{0, 2, 4}, {1, 3, 5}}},
        {GeneratedGroup(8, {cycle(8, {0, 1, 2, 3, 4, 5, 6, 7})}), {{0, 4}, {1, 5}, {2, 6}, {3, 7}}},
        {GeneratedGroup(8, {cycle(8, {0, 1, 2, 3, 4, 5, 6, 7})}), {{0, 2, 4, 6}, {1, 3, 5, 7}}},
    };
    for (const auto & [group, blocks] : cases) {
        auto induced = induced_action(group, blocks);
        CHECK(induced.kernel.order() * induced.action.image_group().order() == group.order());
        CHECK(induced.action.is_homomorphism());
    }
}

TEST_CASE("equivariant bijection examples")
{
    GeneratedGroup s4(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
    auto natural = restricted_action(s4, all_points(4));
    auto rho = equivariant_bijection(natural, natural);
    REQUIRE(rho);
    CHECK(*rho == all_points(4));

    GeneratedGroup c4(4, {cycle(4, {0, 1, 2, 3})});
    auto blocks = block_action(c4, {{0, 2}, {1, 3}});
    CHECK_FALSE(equivariant_bijection(restricted_action(c4, all_points(4)), blocks));
}

TEST_CASE("equivariant bijection satisfies its defining equation")
{
    // S4 on points and on the 4 triples (complement of a point) are equivalent;
    // S4 on points and on the 6 pairs are not.
    GeneratedGroup s4(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
    auto natural = restricted_action(s4, all_points(4));
    std::vector<std::vector<Point>> rows;
    for (const auto & g : s4.generators())
        rows.push_back({g(0), g(1), g(2), g(3)});
    std::vector<std::vector<Point>> shifted_rows;
    // Relabel the domain by x -> 3 - x.
    for (const auto & row : rows) {
        std::vector<Point> r(4);
        for (Point x = 0; x < 4; ++x)
            r[3 - x] = 3 - row[x];
        shifted_rows.push_back(r);
    }
    ActionTable shifted(s4, 4, shifted_rows);
    auto rho = equivariant_bijection(natural, shifted);
    REQUIRE(rho);
    for (std::size_t gen = 0; gen < rows.size(); ++gen)
        for (Point x = 0; x < 4; ++x)
            CHECK((*rho)[natural.image(gen, x)] == shifted.image(gen, (*rho)[x]));
}

TEST_CASE("equivariant bijection exists for G_B on B and its neighbouring blocks in the K5 arc-pair graph")
{
    auto t = *catalog_lookup("arc-pair-k5").triple;
    const auto & block = t.partition.front();
    auto stab = stabilizer(t.group, block, StabilizerMode::setwise);
    // Neighbouring blocks of B: every block holding a partner of a vertex in B.
    std::set<Point> neighbours;
    for (auto x : block)
        for (auto y : t.graph.neighbours(x))
            neighbours.insert(y);
    std::vector<Point> across(neighbours.begin(), neighbours.end());
    auto on_block = restricted_action(stab, block);
    auto on_partners = restricted_action(stab, across);
    auto rho = equivariant_bijection(on_block, on_partners);
    REQUIRE(rho);
    for (std::size_t gen = 0; gen < stab.generators().size(); ++gen)
        for (Point x = 0; x < block.size(); ++x)
            CHECK((*rho)[on_block.image(gen, x)] == on_partners.image(gen, (*rho)[x]));
}

TEST_CASE("action tables reject rows that are not a homomorphism")
{
    // C3 acting on 2 points by a swap cannot be a homomorphism.
    GeneratedGroup c3(3, {cycle(3, {0, 1, 2})});
    ActionTable bad(c3, 2, {{1, 0}});
    CHECK_FALSE(bad.is_homomorphism());
    ActionTable good(c3, 2, {{0, 1}});
    CHECK(good.is_homomorphism());
}
