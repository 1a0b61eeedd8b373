#include "imprim/classifier.hpp"

#include "imprim/constructions.hpp"
#include "imprim/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace imprim {

std::string to_string(Mode mode)
{
    switch (mode) {
    case Mode::theorem1:
        return "theorem1";
    case Mode::p3:
        return "p3";
    case Mode::p5:
        return "p5";
    }
    return "theorem1";
}

Mode parse_mode(const std::string & text)
{
    if (text == "theorem1")
        return Mode::theorem1;
    if (text == "p3")
        return Mode::p3;
    if (text == "p5")
        return Mode::p5;
    throw std::invalid_argument("unknown mode '" + text + "' (expected theorem1, p3 or p5)");
}

Mode default_mode(long p)
{
    return p == 3 ? Mode::p3 : p == 5 ? Mode::p5 : Mode::theorem1;
}

bool ClassificationReport::hypotheses_hold() const
{
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Evidence & e) { return e.passed; });
}

std::optional<std::vector<long>> ClassificationReport::vbrl() const
{
    if (! lambda || ! lambda->constant)
        return std::nullopt;
    return std::vector<long>{static_cast<long>(parameters.v), static_cast<long>(parameters.b),
        static_cast<long>(parameters.r), static_cast<long>(lambda->lambda)};
}

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace {
    std::string join(const std::vector<long> & xs)
    {
        std::ostringstream out;
        out << '(';
        for (std::size_t i = 0; i < xs.size(); ++i)
            out << (i ? "," : "") << xs[i];
        out << ')';
        return out.str();
    }

    // G_B acting on the neighbouring blocks of B, with the generators of G_B.
    ActionTable neighbour_action(const GeneratedGroup & stab, const TraceTable & table, const Partition & partition,
        std::size_t block)
    {
        const auto & nbrs = table.neighbour_blocks[block];
        std::vector<std::vector<Point>> rows;
        for (const auto & g : stab.generators()) {
            std::vector<Point> row;
            for (auto c : nbrs) {
                auto image = table.block_of[g(partition[c].front())];
                auto it = std::lower_bound(nbrs.begin(), nbrs.end(), image);
                if (it == nbrs.end() || *it != image)
                    throw NotInvariant("block stabilizer does not preserve the neighbouring blocks");
                row.push_back(static_cast<Point>(it - nbrs.begin()));
            }
            rows.push_back(std::move(row));
        }
        return ActionTable(stab, nbrs.size(), std::move(rows));
    }

    std::size_t capped_transitivity(const GeneratedGroup & group, std::size_t degree)
    {
        std::vector<Point> domain(degree);
        std::iota(domain.begin(), domain.end(), 0);
        return transitivity_degree(group, domain, std::min<std::size_t>(degree, 3));
    }

    Fingerprints fingerprint(const SymmetricTriple & t, const TraceTable & table, std::size_t bound)
    {
        Fingerprints f;
        f.group_order = t.group.order(bound);
        const auto & block = t.partition.front();
        auto stab = stabilizer(t.group, block, StabilizerMode::setwise, bound);
        f.block_stabilizer_order = stab.order(bound);

        auto on_block = restricted_action(stab, block);
        auto on_block_group = on_block.image_group();
        f.on_block_order = on_block_group.order(bound);
        f.on_block_transitivity = capped_transitivity(on_block_group, block.size());

        auto on_nbrs = neighbour_action(stab, table, t.partition, 0);
        auto on_nbrs_group = on_nbrs.image_group();
        f.on_neighbours_order = on_nbrs_group.order(bound);
        f.on_neighbours_transitivity = capped_transitivity(on_nbrs_group, on_nbrs.domain_size());

        auto induced = induced_action(t.group, t.partition, bound);
        f.kernel_order = induced.kernel.order(bound);
        f.quotient_group_order = induced.action.image_group().order(bound);

        if (block.size() == on_nbrs.domain_size())
            f.equivariant_bijection = equivariant_bijection(on_block, on_nbrs).has_value();
        return f;
    }

    // Rebuilds the 2-path graph from (Γ, B) when every vertex sees two blocks
    // and checks that α -> (C1, B, C2) is an isomorphism onto it for a
    // self-paired G-orbit of 3-arcs of the quotient.
    bool recovers_gamma2(const SymmetricTriple & t, const TraceTable & table)
    {
        auto quotient = block_graph(t.graph, t.partition);
        std::set<SArc> delta;
        for (Vertex a = 0; a < t.graph.vertex_count(); ++a)
            for (auto b : t.graph.neighbours(a)) {
                const auto & sa = table.vertex_blocks[a];
                const auto & sb = table.vertex_blocks[b];
                auto ba = static_cast<Vertex>(table.block_of[a]), bb = static_cast<Vertex>(table.block_of[b]);
                auto other_a = static_cast<Vertex>(sa[0] == bb ? sa[1] : sa[0]);
                auto other_b = static_cast<Vertex>(sb[0] == ba ? sb[1] : sb[0]);
                delta.insert({other_a, ba, bb, other_b});
            }
        ThreeArcOrbit orbit;
        orbit.members.assign(delta.begin(), delta.end());
        orbit.representative = orbit.members.front();
        orbit.self_paired = true;

        LiftedGraph lifted;
        try {
            lifted = gamma2_graph(quotient, orbit);
        }
        catch (const Error &) {
            return false;
        }

        std::map<SArc, Vertex> path_index;
        for (std::size_t i = 0; i < lifted.vertices.size(); ++i)
            path_index[lifted.vertices[i]] = static_cast<Vertex>(i);
        std::vector<Vertex> map(t.graph.vertex_count());
        std::set<Vertex> hit;
        for (Vertex a = 0; a < t.graph.vertex_count(); ++a) {
            const auto & s = table.vertex_blocks[a];
            auto it = path_index.find({static_cast<Vertex>(s[0]), static_cast<Vertex>(table.block_of[a]),
                static_cast<Vertex>(s[1])});
            if (it == path_index.end())
                return false;
            map[a] = it->second;
            hit.insert(it->second);
        }
        if (hit.size() != lifted.vertices.size())
            return false;
        std::set<Edge> image;
        for (auto [u, v] : t.graph.edges())
            image.emplace(std::min(map[u], map[v]), std::max(map[u], map[v]));
        auto target = lifted.graph.edges();
        if (std::vector<Edge>(image.begin(), image.end()) != target)
            return false;

        auto action = block_action(t.group, t.partition);
        std::set<SArc> reached{orbit.members.front()};
        std::vector<SArc> queue{orbit.members.front()};
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (std::size_t g = 0; g < action.rows().size(); ++g) {
                SArc next(queue[head]);
                for (auto & x : next)
                    x = action.image(g, x);
                if (reached.insert(next).second)
                    queue.push_back(next);
            }
        return reached == delta;
    }

    StructureFacts structure_facts(const SymmetricTriple & t, const TraceTable & table, const Parameters & params,
        const std::optional<LambdaReport> & lambda, const Graph & quotient)
    {
        StructureFacts s;
        s.valency = t.graph.valency();
        s.quotient_cycle = quotient.valency() == 2 && is_connected(quotient);

        std::set<std::string> tags;
        for (const auto & [key, trace] : table.traces) {
            auto tag = classify_bipartite(t.graph, trace, table.trace(key.second, key.first)).tag();
            if (s.pair_pattern.empty())
                s.pair_pattern = tag;
            tags.insert(tag);
        }
        s.pair_copies = params.r == 1 && tags.size() == 1;

        bool missing_one = true;
        for (Vertex a = 0; a < t.graph.vertex_count(); ++a)
            missing_one = missing_one
                && table.neighbour_blocks[table.block_of[a]].size() == table.vertex_blocks[a].size() + 1;
        s.one_missing_block = missing_one;

        s.dual_design = is_t_design(design_from_triple(t, 0, DesignKind::dual), 2);
        s.complement_dual_design = is_t_design(design_from_triple(t, 0, DesignKind::complement_dual), 2);
        s.complement_design = is_t_design(design_from_triple(t, 0, DesignKind::complement), 2);

        if (lambda && lambda->constant && lambda->lambda_bar == 0 && params.k < params.v) {
            RefinementSummary summary;
            try {
                auto ref = blocks_refinement(t);
                summary.case_tag = to_string(ref.case_tag);
                summary.checks_passed = ref.all_checks_passed();
                summary.a = ref.a;
                summary.s = ref.s;
                summary.t = ref.t;
                for (const auto & c : ref.checks)
                    if (! c.passed)
                        summary.failed_checks.push_back(c.name);
            }
            catch (const Error & e) {
                summary.case_tag = "inapplicable";
                summary.failed_checks.push_back(e.what());
            }
            s.refinement = summary;
        }

        if (lambda && lambda->constant && lambda->lambda == 1 && params.r == 2)
            s.gamma2_recovered = recovers_gamma2(t, table);
        return s;
    }
}

ClassificationReport analyze_triple(const SymmetricTriple & t, long p, std::size_t bound)
{
    require_valid(t);
    ClassificationReport report;
    report.p = p;
    report.vertex_count = t.graph.vertex_count();
    report.block_count = t.partition.size();
    report.parameters = parameters(t);
    const auto & params = report.parameters;
    if (params.p() != p)
        throw PreconditionError("p = " + std::to_string(p) + " but v - k = " + std::to_string(params.p()));

    auto quotient = quotient_graph(t);
    report.hypotheses.push_back({"p is an odd prime", p > 2 && is_prime(p), true, std::to_string(p)});
    report.hypotheses.push_back({"k = v - p >= 1", params.k >= 1, true, std::to_string(params.k)});
    report.hypotheses.push_back({"quotient connected", is_connected(quotient.graph), true, ""});
    report.hypotheses.push_back({"quotient valency b >= 2", params.b >= 2, true, std::to_string(params.b)});

    report.quotient_2at = is_s_arc_transitive(quotient.graph, quotient.action.image_group(), 2);
    if (params.b >= 2)
        report.lambda = lambda_pairwise(t, p);

    auto & ids = report.identities;
    ids.vr_bk = {static_cast<long>(params.v * params.r), static_cast<long>(params.b * params.k)};
    ids.m_divides_r_and_b = params.r % params.m == 0 && params.b % params.m == 0;
    if (report.lambda) {
        ids.eq_vr = report.lambda->eq_vr;
        if (report.lambda->constant) {
            ids.eq_lambda = report.lambda->eq_lambda;
            ids.fisher = report.lambda->fisher;
        }
    }

    auto table = compute_traces(t.graph, t.partition);
    report.fingerprints = fingerprint(t, table, bound);
    report.structure = structure_facts(t, table, params, report.lambda, quotient.graph);
    return report;
}

std::optional<FRow> f_row(long p, long a, long s)
{
    if (a < 2 || s < 1 || s > a - 1 || a - 1 > p - 2)
        return std::nullopt;
    if ((p * s + 1) % a != 0)
        return std::nullopt;
    long rest = p * s - a + 1;
    if (rest % a != 0 || (rest / a) % s != 0)
        return std::nullopt;
    // (a-1)/(p-a) <= s, with p - a > 0 guaranteed by a <= p-1
    if (a - 1 > s * (p - a))
        return std::nullopt;
    FRow row{p, a, s, p * a, p * s + 1, (p * s + 1) * (a - 1) / a, p * (a - 2) + rest / (a * s)};
    return row;
}

std::vector<FRow> feasible_f_rows(long p)
{
    if (p < 3 || ! is_prime(p))
        throw PreconditionError("feasible_f_rows needs an odd prime, got " + std::to_string(p));
    std::vector<FRow> out;
    for (long a = 2; a <= p - 1; ++a)
        for (long s = 1; s <= a - 1; ++s)
            if (auto row = f_row(p, a, s))
                out.push_back(*row);
    return out;
}

namespace {
    long ipow(long base, long e)
    {
        long out = 1;
        for (long i = 0; i < e; ++i)
            out *= base;
        return out;
    }
}

std::optional<FRow> alternating_row(long p)
{
    if (p < 3 || ! is_prime(p))
        return std::nullopt;
    return f_row(p, (p + 1) / 2, 1);
}

std::optional<FRow> affine2_row(long n, long m)
{
    long p = ipow(2, n) - 1;
    if (n < 2 || m < 1 || m > n - 1 || ! is_prime(p))
        return std::nullopt;
    long two_n = ipow(2, n), two_m = ipow(2, m), two_nm = ipow(2, n - m);
    return FRow{p, two_m, 1, two_m * (two_n - 1), two_n, two_n - two_nm, (two_m - 1) * (two_n - two_nm - 1)};
}

long affine2_replication(long n, long m)
{
    return (ipow(2, n) - 1) * (ipow(2, m) - 1);
}

std::optional<FRow> projective_line_row(long p, long a)
{
    if (p < 3 || ! is_prime(p) || a < 2 || (p - 1) % (a - 1) != 0)
        return std::nullopt;
    return f_row(p, a, 1);
}

std::optional<FRow> affine3_row(long n, long j)
{
    if (n < 3 || n % 2 == 0 || j < 1 || j > n - 1)
        return std::nullopt;
    long three_n = ipow(3, n), three_j = ipow(3, j), three_nj = ipow(3, n - j);
    long p = (three_n - 1) / 2;
    if (! is_prime(p))
        return std::nullopt;
    return FRow{p, three_j, 2, (three_n - 1) * three_j / 2, three_n, three_nj * (three_j - 1),
        (three_n - 1) * (three_j - 2) / 2 + (three_nj - 1) / 2};
}

std::optional<FRow> projective_row(long n, long a)
{
    long p = ipow(2, n - 1) - 1;
    if (n < 4 || ! is_prime(n - 1) || ! is_prime(p))
        return std::nullopt;
    if (a < 3 || a % 2 == 0 || (2 * p + 1) % a != 0 || 3 * a > 2 * p + 1)
        return std::nullopt;
    long two_n = ipow(2, n);
    return FRow{p, a, 2, a * p, two_n - 1, (two_n - 1) * (a - 1) / a, p * (a - 2) + (two_n - 1 - a) / (2 * a)};
}

namespace {
    struct Row
    {
        std::string label;
        std::string letter;
        std::vector<Evidence> evidence;

        bool matched() const
        {
            return std::all_of(evidence.begin(), evidence.end(), [](const Evidence & e) { return ! e.mandatory || e.passed; });
        }
    };

    Evidence shape(const ClassificationReport & r, const std::vector<long> & expected)
    {
        auto observed = r.vbrl();
        return {"(v,b,r,lambda) = " + join(expected), observed && *observed == expected, true,
            observed ? "observed " + join(*observed) : "lambda not constant"};
    }

    Evidence order_in(const std::string & name, std::size_t order, const std::set<std::size_t> & allowed,
        bool mandatory = true)
    {
        std::string options;
        for (auto x : allowed)
            options += (options.empty() ? "" : "/") + std::to_string(x);
        return {name + " order in {" + options + "}", allowed.count(order) > 0, mandatory,
            "order " + std::to_string(order)};
    }

    Evidence order_divides(const std::string & name, std::size_t order, std::size_t of, bool mandatory = true)
    {
        return {name + " order divides " + std::to_string(of), order > 0 && of % order == 0, mandatory,
            "order " + std::to_string(order)};
    }

    Evidence two_transitive(const std::string & name, std::size_t degree, bool mandatory = true)
    {
        return {name + " 2-transitive", degree >= 2, mandatory, "transitivity degree " + std::to_string(degree)};
    }

    Evidence info(const std::string & name, bool passed, const std::string & detail = "")
    {
        return {name, passed, false, detail};
    }

    std::vector<Evidence> case_a_info(const ClassificationReport & r)
    {
        const auto & f = r.fingerprints;
        return {info("B and Gamma_B(B) carry equivalent G_B actions", f.equivariant_bijection.value_or(false)),
            info("|G_B^B| = |G_B^{Gamma_B(B)}|", f.on_block_order == f.on_neighbours_order),
            info("Gamma is a perfect matching", r.structure.valency == 1)};
    }

    std::vector<Evidence> case_b_info(const ClassificationReport & r, std::size_t vertex_count)
    {
        const auto n = r.parameters.v == 0 ? 0 : vertex_count / r.parameters.v;
        return {info("Gamma is n copies of Gamma[B,C]", r.structure.pair_copies, r.structure.pair_pattern),
            info("induced quotient group has order 2n", r.fingerprints.quotient_group_order == 2 * n,
                "order " + std::to_string(r.fingerprints.quotient_group_order) + ", n = " + std::to_string(n))};
    }

    Evidence quotient_is_cycle(const ClassificationReport & r, std::size_t vertex_count, bool mandatory = true)
    {
        const auto n = r.parameters.v == 0 ? 0 : vertex_count / r.parameters.v;
        return {"quotient is a cycle C_n, n = |V|/" + std::to_string(r.parameters.v), r.structure.quotient_cycle, mandatory,
            "n = " + std::to_string(n)};
    }

    std::vector<Evidence> refinement_info(const ClassificationReport & r)
    {
        std::vector<Evidence> out{info("each vertex misses exactly one neighbouring block",
            r.structure.one_missing_block.value_or(false))};
        if (r.structure.refinement) {
            const auto & ref = *r.structure.refinement;
            std::string detail = "case " + ref.case_tag + ", a = " + std::to_string(ref.a) + ", s = "
                + std::to_string(ref.s) + ", t = " + std::to_string(ref.t);
            for (const auto & f : ref.failed_checks)
                detail += "; failed: " + f;
            out.push_back(info("refinement relations hold", ref.checks_passed, detail));
        }
        return out;
    }

    // Case rows of the general theorem. `first` letters are relabelled by the caller.
    std::vector<Row> theorem1_rows(const ClassificationReport & r, std::size_t vertex_count)
    {
        const long p = r.p;
        std::vector<Row> rows;

        Row a{"a", "a", {shape(r, {p + 1, p + 1, 1, 0})}};
        for (auto & e : case_a_info(r))
            a.evidence.push_back(e);
        rows.push_back(a);

        Row b{"b", "b", {shape(r, {2 * p, 2, 1, 0}), quotient_is_cycle(r, vertex_count, false)}};
        for (auto & e : case_b_info(r, vertex_count))
            b.evidence.push_back(e);
        rows.push_back(b);

        for (long q = 2; q <= p; ++q) {
            // q must be a prime power
            long base = 2;
            while (q % base != 0)
                ++base;
            long rest = q;
            while (rest % base == 0)
                rest /= base;
            if (rest != 1)
                continue;
            long sum = 1 + q, qn = q;
            for (long n = 2; sum <= p; ++n) {
                if (sum == p) {
                    long total = sum + qn * q;
                    Row c{"c(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ")", "c",
                        {shape(r, {total, total, qn * q, qn * q - qn})}};
                    c.evidence.push_back(info("G is faithful on the blocks", r.fingerprints.kernel_order == 1));
                    c.evidence.push_back(info("B and Gamma_B(B) carry equivalent G_B actions",
                        r.fingerprints.equivariant_bijection.value_or(false)));
                    rows.push_back(c);
                }
                qn *= q;
                sum += qn;
            }
        }

        if (p == 5)
            rows.push_back({"d", "d",
                {shape(r, {11, 11, 6, 3}), order_in("G_B^B", r.fingerprints.on_block_order, {660}, false)}});

        if (auto obs = r.vbrl(); obs && (*obs)[0] % p == 0) {
            long a_val = (*obs)[0] / p;
            if (a_val >= 3) {
                Row e{"e(a=" + std::to_string(a_val) + ")", "e", {shape(r, {p * a_val, a_val, a_val - 1, p * (a_val - 2)})}};
                for (auto & ev : refinement_info(r))
                    e.evidence.push_back(ev);
                rows.push_back(e);
            }
        }

        if (p >= 3 && is_prime(p))
            for (const auto & f : feasible_f_rows(p)) {
                Row row{"f(a=" + std::to_string(f.a) + ",s=" + std::to_string(f.s) + ")", "f",
                    {shape(r, {f.v, f.b, f.r, f.lambda})}};
                if (r.structure.dual_design)
                    row.evidence.push_back(info("dual design is a 2-design", true,
                        "2-(" + std::to_string(r.structure.dual_design->v) + "," + std::to_string(r.structure.dual_design->k)
                            + "," + std::to_string(r.structure.dual_design->lambda) + ")"));
                else
                    row.evidence.push_back(info("dual design is a 2-design", false));
                rows.push_back(row);
            }
        return rows;
    }

    std::vector<Row> p3_rows(const ClassificationReport & r, std::size_t vertex_count)
    {
        const auto & f = r.fingerprints;
        std::vector<Row> rows;

        Row a{"a", "a",
            {shape(r, {4, 4, 1, 0}), order_in("G_B^B", f.on_block_order, {12, 24}),
                two_transitive("G_B^B", f.on_block_transitivity)}};
        for (auto & e : case_a_info(r))
            a.evidence.push_back(e);
        a.evidence.push_back(info("G_B on Gamma_B(B) 2-transitive", f.on_neighbours_transitivity >= 2));
        rows.push_back(a);

        Row b{"b", "b", {shape(r, {6, 2, 1, 0}), quotient_is_cycle(r, vertex_count)}};
        for (auto & e : case_b_info(r, vertex_count))
            b.evidence.push_back(e);
        const std::set<std::string> b_patterns{"3*K_2", "C_6", "K_{3,3}"};
        b.evidence.push_back(info("Gamma[B,C] is 3*K_2, C_6 or K_{3,3}", b_patterns.count(r.structure.pair_pattern) > 0,
            r.structure.pair_pattern));
        rows.push_back(b);

        Row c{"c", "c", {shape(r, {7, 7, 4, 2}), order_in("G_B^B", f.on_block_order, {168})}};
        c.evidence.push_back(info("G_B on Gamma_B(B) has order 168", f.on_neighbours_order == 168));
        c.evidence.push_back(info("G is faithful on the blocks", f.kernel_order == 1));
        bool fano = r.structure.complement_design && r.structure.complement_design->v == 7
            && r.structure.complement_design->k == 3 && r.structure.complement_design->lambda == 1;
        c.evidence.push_back(info("complement of D(B) is a 2-(7,3,1) design", fano));
        const std::set<std::string> c_patterns{"4*K_2", "(K_{4,4}-4*K_2)", "K_{4,4}"};
        c.evidence.push_back(info("Gamma[B,C] is 4*K_2, K_{4,4}-4*K_2 or K_{4,4}",
            c_patterns.count(r.structure.pair_pattern) > 0, r.structure.pair_pattern));
        rows.push_back(c);

        if (auto obs = r.vbrl(); obs && (*obs)[0] % 3 == 0 && (*obs)[0] / 3 >= 3) {
            long a_val = (*obs)[0] / 3;
            Row d{"d(a=" + std::to_string(a_val) + ")", "d", {shape(r, {3 * a_val, a_val, a_val - 1, 3 * a_val - 6})}};
            for (auto & e : refinement_info(r))
                d.evidence.push_back(e);
            rows.push_back(d);
        }

        Row e{"e", "e",
            {shape(r, {6, 4, 2, 1}), order_in("G_B on Gamma_B(B)", f.on_neighbours_order, {12, 24}),
                two_transitive("G_B on Gamma_B(B)", f.on_neighbours_transitivity)}};
        e.evidence.push_back(info("Gamma is the 2-path graph of the quotient for a self-paired G-orbit",
            r.structure.gamma2_recovered.value_or(false)));
        rows.push_back(e);
        return rows;
    }

    std::vector<Row> p5_rows(const ClassificationReport & r, std::size_t vertex_count)
    {
        const auto & f = r.fingerprints;
        std::vector<Row> rows;

        Row a{"a", "a",
            {shape(r, {6, 6, 1, 0}), order_in("G_B^B", f.on_block_order, {360, 720}),
                two_transitive("G_B^B", f.on_block_transitivity),
                order_in("G_B on Gamma_B(B)", f.on_neighbours_order, {360, 720}),
                two_transitive("G_B on Gamma_B(B)", f.on_neighbours_transitivity)}};
        for (auto & e : case_a_info(r))
            a.evidence.push_back(e);
        rows.push_back(a);

        const auto n = r.parameters.v == 0 ? 0 : vertex_count / r.parameters.v;
        Row b{"b", "b",
            {shape(r, {10, 2, 1, 0}), quotient_is_cycle(r, vertex_count),
                {"induced quotient group has order 2n", f.quotient_group_order == 2 * n, true,
                    "order " + std::to_string(f.quotient_group_order)}}};
        b.evidence.push_back(info("Gamma is n copies of Gamma[B,C]", r.structure.pair_copies, r.structure.pair_pattern));
        const std::set<std::string> b_patterns{"5*K_2", "C_10", "(K_{5,5}-C_10)", "(K_{5,5}-5*K_2)", "K_{5,5}"};
        b.evidence.push_back(info("Gamma[B,C] is one of the five edge-transitive forms",
            b_patterns.count(r.structure.pair_pattern) > 0, r.structure.pair_pattern));
        rows.push_back(b);

        rows.push_back({"c", "c",
            {shape(r, {21, 21, 16, 12}), {"G is faithful on the blocks", f.kernel_order == 1, true, ""},
                {"|G_B^B| = |G_B^{Gamma_B(B)}|", f.on_block_order == f.on_neighbours_order, true, ""},
                two_transitive("G_B on Gamma_B(B)", f.on_neighbours_transitivity),
                order_divides("G_B on Gamma_B(B)", f.on_neighbours_order, 120960)}});

        rows.push_back({"d", "d",
            {shape(r, {11, 11, 6, 3}), order_in("G_B^B", f.on_block_order, {660}),
                order_in("G_B on Gamma_B(B)", f.on_neighbours_order, {660})}});

        if (auto obs = r.vbrl(); obs && (*obs)[0] % 5 == 0 && (*obs)[0] / 5 >= 3) {
            long a_val = (*obs)[0] / 5;
            Row e{"e(a=" + std::to_string(a_val) + ")", "e", {shape(r, {5 * a_val, a_val, a_val - 1, 5 * a_val - 10})}};
            for (auto & ev : refinement_info(r))
                e.evidence.push_back(ev);
            rows.push_back(e);
        }

        rows.push_back({"f(1)", "f",
            {shape(r, {10, 6, 3, 2}), order_in("G_B on Gamma_B(B)", f.on_neighbours_order, {60, 720}),
                two_transitive("G_B on Gamma_B(B)", f.on_neighbours_transitivity)}});
        rows.push_back({"f(2)", "f",
            {shape(r, {15, 6, 4, 6}), order_in("G_B on Gamma_B(B)", f.on_neighbours_order, {360}),
                two_transitive("G_B on Gamma_B(B)", f.on_neighbours_transitivity)}});
        rows.push_back({"f(3)", "f",
            {shape(r, {20, 16, 12, 11}), two_transitive("G_B on Gamma_B(B)", f.on_neighbours_transitivity),
                order_divides("G_B on Gamma_B(B)", f.on_neighbours_order, 5760)}});
        return rows;
    }
}

ClassificationReport classify(ClassificationReport report, Mode mode)
{
    if (mode == Mode::p3 && report.p != 3)
        throw PreconditionError("mode p3 needs p = 3, got " + std::to_string(report.p));
    if (mode == Mode::p5 && report.p != 5)
        throw PreconditionError("mode p5 needs p = 5, got " + std::to_string(report.p));

    report.mode = mode;
    report.matches.clear();
    report.evidence.clear();
    report.matched_case = "none";
    report.iff_consistent.reset();

    if (! report.hypotheses_hold()) {
        for (const auto & h : report.hypotheses)
            if (! h.passed)
                report.evidence.push_back({"hypothesis: " + h.name, false, true, h.detail});
        return report;
    }

    const auto vertex_count = report.vertex_count;

    std::vector<Row> rows;
    switch (mode) {
    case Mode::theorem1:
        rows = theorem1_rows(report, vertex_count);
        report.evidence.push_back(info("quotient is (G,2)-arc transitive", report.quotient_2at));
        break;
    case Mode::p3:
        rows = p3_rows(report, vertex_count);
        break;
    case Mode::p5:
        rows = p5_rows(report, vertex_count);
        break;
    }

    for (const auto & row : rows) {
        if (! row.matched())
            continue;
        if (report.matches.empty())
            report.matched_case = row.letter;
        report.matches.push_back(row.label);
        for (const auto & e : row.evidence)
            report.evidence.push_back({"[" + row.label + "] " + e.name, e.passed, e.mandatory, e.detail});
    }

    if (report.matches.empty()) {
        // keep the rows whose parameter shape fit, to show which condition failed
        for (const auto & row : rows)
            if (row.evidence.front().passed)
                for (const auto & e : row.evidence)
                    report.evidence.push_back({"[" + row.label + "] " + e.name, e.passed, e.mandatory, e.detail});
        auto observed = report.vbrl();
        report.evidence.push_back({"some case row matches", false, true,
            observed ? "observed (v,b,r,lambda) = " + join(*observed) : "lambda not constant"});
    }

    if (mode != Mode::theorem1)
        report.iff_consistent = (report.matched_case != "none") == report.quotient_2at;
    return report;
}

} // namespace imprim
