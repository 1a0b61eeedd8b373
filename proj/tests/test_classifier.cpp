#include "imprim/catalog.hpp"
#include "imprim/classifier.hpp"
#include "imprim/constructions.hpp"
#include "imprim/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <tuple>

using namespace imprim;

namespace {

SymmetricTriple triple(const std::string & key)
{
    return *catalog_lookup(key).triple;
}

ClassificationReport run(const std::string & key, long p, Mode mode)
{
    return classify(analyze_triple(triple(key), p), mode);
}

bool slow_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d < n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// Row (f) conditions restated with cross-multiplied fractions.
std::vector<std::array<long, 4>> slow_f_rows(long p)
{
    std::vector<std::array<long, 4>> out;
    for (long a = 2; a <= p; ++a)
        for (long s = 1; s <= p; ++s) {
            if (!(s <= a - 1 && a - 1 <= p - 2))
                continue;
            if ((a - 1) > s * (p - a))
                continue;
            if ((p * s + 1) % a != 0)
                continue;
            long numerator = p * s - a + 1;
            if (numerator % (a * s) != 0)
                continue;
            out.push_back({p * a, p * s + 1, (p * s + 1) * (a - 1) / a, p * (a - 2) + numerator / (a * s)});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<long, 4>> shapes(const std::vector<FRow> & rows)
{
    std::vector<std::array<long, 4>> out;
    for (const auto & r : rows)
        out.push_back({r.v, r.b, r.r, r.lambda});
    std::sort(out.begin(), out.end());
    return out;
}

bool has_evidence(const ClassificationReport & r, const std::string & fragment, bool passed)
{
    return std::any_of(r.evidence.begin(), r.evidence.end(), [&](const Evidence & e) {
        return e.name.find(fragment) != std::string::npos && e.passed == passed;
    });
}

} // namespace

TEST_CASE("mode names")
{
    CHECK(parse_mode("theorem1") == Mode::theorem1);
    CHECK(parse_mode("p3") == Mode::p3);
    CHECK(parse_mode("p5") == Mode::p5);
    CHECK(to_string(Mode::p5) == "p5");
    CHECK_THROWS_AS(parse_mode("p7"), std::invalid_argument);
    CHECK(default_mode(3) == Mode::p3);
    CHECK(default_mode(5) == Mode::p5);
    CHECK(default_mode(7) == Mode::theorem1);
}

TEST_CASE("primality agrees with trial division")
{
    for (long n = -3; n < 500; ++n)
        CHECK(is_prime(n) == slow_prime(n));
}

TEST_CASE("feasible (f) rows for p = 3, 5, 7")
{
    CHECK(shapes(feasible_f_rows(3)) == std::vector<std::array<long, 4>>{{6, 4, 2, 1}});
    auto three = feasible_f_rows(3);
    REQUIRE(three.size() == 1);
    CHECK(three[0].a == 2);
    CHECK(three[0].s == 1);

    CHECK(shapes(feasible_f_rows(5))
        == std::vector<std::array<long, 4>>{{10, 6, 3, 2}, {15, 6, 4, 6}, {20, 16, 12, 11}});

    auto seven = feasible_f_rows(7);
    CHECK(std::find(seven.begin(), seven.end(), FRow{7, 5, 2, 35, 15, 12, 22}) != seven.end());

    CHECK_THROWS_AS(feasible_f_rows(9), PreconditionError);
    CHECK_THROWS_AS(feasible_f_rows(2), PreconditionError);
    CHECK_THROWS_AS(feasible_f_rows(1), PreconditionError);
}

TEST_CASE("feasible (f) rows agree with a restated scan for every odd prime below 200")
{
    for (long p = 3; p < 200; ++p) {
        if (! slow_prime(p))
            continue;
        CAPTURE(p);
        auto rows = feasible_f_rows(p);
        CHECK(shapes(rows) == slow_f_rows(p));
        CHECK(std::is_sorted(rows.begin(), rows.end(),
            [](const FRow & x, const FRow & y) { return std::tie(x.a, x.s) < std::tie(y.a, y.s); }));
    }
}

TEST_CASE("(f) rows satisfy the counting identities with lambda >= 1")
{
    for (long p = 3; p < 200; ++p) {
        if (! slow_prime(p))
            continue;
        for (const auto & row : feasible_f_rows(p)) {
            CAPTURE(p);
            CAPTURE(row.a);
            CAPTURE(row.s);
            long k = row.v - p;
            CHECK(row.lambda >= 1);
            CHECK(row.v * row.r == row.b * k);
            CHECK(row.lambda * (row.b - 1) == k * (row.r - 1));
            CHECK(row.b <= row.v);
            CHECK((p * row.s + 1) % row.a == 0);
        }
    }
}

TEST_CASE("closed-form table rows match the generic (f) row")
{
    for (long p = 3; p < 100; ++p)
        if (auto row = alternating_row(p))
            CHECK(row == f_row(p, (p + 1) / 2, 1));

    std::size_t affine_checked = 0;
    for (long n = 2; n <= 7; ++n)
        for (long m = 1; m < n; ++m)
            if (auto row = affine2_row(n, m)) {
                CAPTURE(n);
                CAPTURE(m);
                CHECK(row == f_row((1L << n) - 1, 1L << m, 1));
                // The replication of the dual design equals k = v - p.
                CHECK(affine2_replication(n, m) == row->v - row->p);
                ++affine_checked;
            }
    CHECK(affine_checked > 0);
    CHECK_FALSE(affine2_row(4, 1)); // 15 is not prime

    for (long p = 3; p < 60; ++p)
        for (long a = 2; a < p; ++a)
            if (auto row = projective_line_row(p, a))
                CHECK((p - 1) % (a - 1) == 0);
}

TEST_CASE("table rows for AGL(n,3) and PGL(n,2)")
{
    auto j1 = affine3_row(3, 1);
    REQUIRE(j1);
    CHECK(std::tie(j1->v, j1->b, j1->r, j1->lambda) == std::make_tuple(39L, 27L, 18L, 17L));
    CHECK(j1 == f_row(13, 3, 2));
    auto j2 = affine3_row(3, 2);
    REQUIRE(j2);
    CHECK(std::tie(j2->v, j2->b, j2->r, j2->lambda) == std::make_tuple(117L, 27L, 24L, 92L));
    CHECK(j2 == f_row(13, 9, 2));

    auto five = projective_row(4, 5);
    REQUIRE(five);
    CHECK(std::tie(five->v, five->b, five->r, five->lambda) == std::make_tuple(35L, 15L, 12L, 22L));
    CHECK(five == f_row(7, 5, 2));
    auto three = projective_row(4, 3);
    REQUIRE(three);
    CHECK(three == f_row(7, 3, 2));
    CHECK_FALSE(projective_row(4, 15));
    CHECK_FALSE(projective_row(5, 3)); // n - 1 = 4 is not prime
}

TEST_CASE("K5 arc-pair graph classifies as case (a) for p = 3")
{
    auto r = run("arc-pair-k5", 3, Mode::p3);
    CHECK(r.parameters == Parameters{4, 1, 1, 4, 1});
    REQUIRE(r.vbrl());
    CHECK(*r.vbrl() == std::vector<long>{4, 4, 1, 0});
    CHECK(r.quotient_2at);
    CHECK(r.matched_case == "a");
    CHECK(r.fingerprints.group_order == 120);
    CHECK(r.fingerprints.block_stabilizer_order == 24);
    CHECK(r.fingerprints.on_block_order == 24);
    CHECK(r.fingerprints.on_neighbours_order == 24);
    CHECK(r.fingerprints.on_neighbours_transitivity >= 2);
    CHECK(r.fingerprints.equivariant_bijection == std::optional<bool>(true));
    CHECK(r.iff_consistent == std::optional<bool>(true));
}

TEST_CASE("AGL(1,5) on the K5 arc-pair graph matches no case and keeps the equivalence")
{
    auto r = run("arc-pair-k5-affine", 3, Mode::p3);
    CHECK(r.parameters == Parameters{4, 1, 1, 4, 1});
    CHECK(r.fingerprints.group_order == 20);
    CHECK_FALSE(r.quotient_2at);
    CHECK(r.matched_case == "none");
    CHECK(has_evidence(r, "some case row matches", false));
    CHECK(r.iff_consistent == std::optional<bool>(true));
}

TEST_CASE("2-path graph of K5 classifies as case (e) for p = 3")
{
    auto r = run("gamma2-k5", 3, Mode::p3);
    CHECK(r.vertex_count == 30);
    CHECK(r.structure.valency == 4);
    CHECK(r.parameters.k == 3);
    REQUIRE(r.vbrl());
    CHECK(*r.vbrl() == std::vector<long>{6, 4, 2, 1});
    CHECK(r.matched_case == "e");
    CHECK(r.structure.gamma2_recovered == std::optional<bool>(true));
    CHECK(has_evidence(r, "2-path graph", true));
}

TEST_CASE("K7 arc-pair graph classifies as case (a) for p = 5")
{
    auto r = run("arc-pair-k7", 5, Mode::p5);
    CHECK(r.parameters == Parameters{6, 1, 1, 6, 1});
    CHECK(r.matched_case == "a");
    CHECK(r.fingerprints.on_block_order == 720);
    CHECK(r.fingerprints.on_neighbours_order == 720);
    CHECK(r.fingerprints.on_neighbours_transitivity >= 2);
}

TEST_CASE("matched-cycle chains classify as case (b)")
{
    for (long n = 3; n <= 6; ++n) {
        CAPTURE(n);
        auto r = classify(analyze_triple(matched_cycle_chain(n), 3), Mode::p3);
        REQUIRE(r.vbrl());
        CHECK(*r.vbrl() == std::vector<long>{6, 2, 1, 0});
        CHECK(r.matched_case == "b");
        CHECK(r.structure.pair_pattern == "3*K_2");
        CHECK(r.structure.quotient_cycle);
        CHECK(r.structure.pair_copies);
        CHECK(r.fingerprints.quotient_group_order == static_cast<std::size_t>(2 * n));
        CHECK(r.iff_consistent == std::optional<bool>(true));
    }
    auto four = run("chain-4", 3, Mode::p3);
    CHECK(four.parameters.k == 3);
    CHECK(four.parameters.r == 1);
    CHECK(four.block_count == 4);
}

TEST_CASE("theorem1 mode reports shapes and keeps 2-arc-transitivity informational")
{
    auto r = run("arc-pair-k5", 3, Mode::theorem1);
    CHECK(r.matched_case == "a");
    CHECK_FALSE(r.iff_consistent);
    auto affine = run("arc-pair-k5-affine", 3, Mode::theorem1);
    CHECK(affine.matched_case == "a");
    auto quotient = std::find_if(affine.evidence.begin(), affine.evidence.end(),
        [](const Evidence & e) { return e.name == "quotient is (G,2)-arc transitive"; });
    REQUIRE(quotient != affine.evidence.end());
    CHECK_FALSE(quotient->passed);
    CHECK_FALSE(quotient->mandatory);
    auto gamma2 = run("gamma2-k5", 3, Mode::theorem1);
    CHECK(std::find(gamma2.matches.begin(), gamma2.matches.end(), "f(a=2,s=1)") != gamma2.matches.end());
}

TEST_CASE("failed hypotheses stop classification")
{
    auto r = run("xi-k4", 1, Mode::theorem1);
    CHECK_FALSE(r.hypotheses_hold());
    CHECK(r.matched_case == "none");
    CHECK(has_evidence(r, "p is an odd prime", false));
}

TEST_CASE("precondition errors")
{
    CHECK_THROWS_AS(analyze_triple(triple("arc-pair-k5"), 5), PreconditionError);
    CHECK_THROWS_AS(classify(analyze_triple(triple("arc-pair-k5"), 3), Mode::p5), PreconditionError);
    CHECK_THROWS_AS(classify(analyze_triple(triple("arc-pair-k7"), 5), Mode::p3), PreconditionError);
    CHECK_THROWS_AS(analyze_triple(triple("arc-pair-k7"), 5, 100), ExceedsBound);
}

TEST_CASE("iff: a case matches exactly when the quotient is 2-arc-transitive")
{
    std::size_t checked = 0;
    for (const auto & key : catalog_triple_keys()) {
        auto t = triple(key);
        long p = parameters(t).p();
        if (p != 3 && p != 5)
            continue;
        CAPTURE(key);
        auto r = classify(analyze_triple(t, p), default_mode(p));
        CHECK((r.matched_case != "none") == r.quotient_2at);
        CHECK(r.iff_consistent == std::optional<bool>(true));
        ++checked;
    }
    CHECK(checked == 6);
}

TEST_CASE("a case (a) match means r = 1 and a perfect matching")
{
    for (const auto & key : catalog_triple_keys()) {
        auto t = triple(key);
        long p = parameters(t).p();
        if (p < 3 || ! is_prime(p))
            continue;
        auto r = classify(analyze_triple(t, p), default_mode(p));
        if (r.matched_case != "a")
            continue;
        CAPTURE(key);
        CHECK(r.parameters.r == 1);
        CHECK(t.graph.valency() == 1);
    }
}

TEST_CASE("shape (pa, a, a-1, p(a-2)) means each vertex misses exactly one neighbouring block")
{
    std::size_t checked = 0;
    for (const auto & key : catalog_triple_keys()) {
        auto t = triple(key);
        auto par = parameters(t);
        if (par.b < 2)
            continue;
        auto lambda = lambda_pairwise(t, par.p());
        if (! lambda.constant)
            continue;
        long p = par.p(), a = static_cast<long>(par.b);
        if (p < 1 || static_cast<long>(par.v) != p * a || static_cast<long>(par.r) != a - 1
            || static_cast<long>(lambda.lambda) != p * (a - 2))
            continue;
        CAPTURE(key);
        auto table = compute_traces(t.graph, t.partition);
        for (std::size_t blk = 0; blk < t.partition.size(); ++blk)
            for (auto alpha : t.partition[blk]) {
                std::size_t missing = 0;
                for (auto c : table.neighbour_blocks[blk]) {
                    const auto & trace = table.trace(blk, c);
                    missing += ! std::binary_search(trace.begin(), trace.end(), alpha);
                }
                CHECK(missing == 1);
            }
        auto r = analyze_triple(t, p);
        CHECK(r.structure.one_missing_block == std::optional<bool>(true));
        ++checked;
    }
    CHECK(checked >= 1);
}

TEST_CASE("identities hold on every catalog triple")
{
    for (const auto & key : catalog_triple_keys()) {
        CAPTURE(key);
        auto t = triple(key);
        long p = parameters(t).p();
        auto r = analyze_triple(t, p);
        CHECK(r.identities.vr_bk.holds());
        CHECK(r.identities.m_divides_r_and_b);
        if (is_prime(p) && p > 2 && r.quotient_2at) {
            REQUIRE(r.identities.eq_vr);
            CHECK(r.identities.eq_vr->holds());
            REQUIRE(r.identities.eq_lambda);
            CHECK(r.identities.eq_lambda->holds());
            if (r.lambda && r.lambda->lambda >= 1)
                CHECK(r.identities.fisher == std::optional<bool>(true));
        }
    }
}
