#include "imprim/quotient.hpp"

#include "imprim/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace imprim {

namespace {
    std::string block_text(const Block & block)
    {
        std::ostringstream out;
        out << '{';
        for (std::size_t i = 0; i < block.size(); ++i)
            out << (i ? "," : "") << block[i];
        out << '}';
        return out.str();
    }

    std::vector<std::size_t> block_index(std::size_t vertex_count, const Partition & partition)
    {
        std::vector<std::size_t> block_of(vertex_count, partition.size());
        for (std::size_t b = 0; b < partition.size(); ++b)
            for (auto x : partition[b]) {
                if (x >= vertex_count || block_of[x] != partition.size())
                    throw std::invalid_argument("partition is not a disjoint family of vertex sets");
                block_of[x] = b;
            }
        for (auto b : block_of)
            if (b == partition.size())
                throw std::invalid_argument("partition does not cover every vertex");
        return block_of;
    }

    template <typename F>
    std::size_t constant_or_throw(const char * name, F && values)
    {
        std::optional<std::size_t> seen;
        for (auto [value, where] : values()) {
            if (! seen)
                seen = value;
            else if (*seen != value)
                throw RepresentativeDependent(std::string(name) + " takes values " + std::to_string(*seen) + " and "
                    + std::to_string(value) + " (" + where + ")");
        }
        return seen.value_or(0);
    }
}

Partition canonical_partition(Partition partition)
{
    for (auto & block : partition)
        std::sort(block.begin(), block.end());
    std::sort(partition.begin(), partition.end());
    return partition;
}

SymmetricTriple::SymmetricTriple(Graph graph_, GeneratedGroup group_, Partition partition_) :
    graph(std::move(graph_)),
    group(std::move(group_)),
    partition(canonical_partition(std::move(partition_)))
{
}

bool ValidationReport::valid() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check & c) { return c.passed; });
}

std::vector<Check> ValidationReport::failures() const
{
    std::vector<Check> out;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const Check & c) { return ! c.passed; });
    return out;
}

ValidationReport validate_partition(const SymmetricTriple & t)
{
    ValidationReport report;
    const auto n = t.graph.vertex_count();

    std::vector<std::size_t> block_of;
    try {
        for (const auto & block : t.partition)
            if (block.empty())
                throw std::invalid_argument("partition contains an empty block");
        block_of = block_index(n, t.partition);
        report.checks.push_back({"disjoint cover", true, ""});
    }
    catch (const std::invalid_argument & e) {
        report.checks.push_back({"disjoint cover", false, e.what()});
        return report;
    }

    {
        Check c{"nontrivial", true, ""};
        for (const auto & block : t.partition)
            if (block.size() <= 1 || block.size() >= n) {
                c.passed = false;
                c.detail = "trivial: block " + block_text(block) + " has size " + std::to_string(block.size());
                break;
            }
        report.checks.push_back(c);
    }

    if (t.group.degree() != n) {
        report.checks.push_back({"G-invariant", false, "group degree differs from vertex count"});
        return report;
    }

    {
        Check c{"G-invariant", true, ""};
        for (std::size_t i = 0; i < t.group.generators().size() && c.passed; ++i) {
            const auto & gen = t.group.generators()[i];
            for (const auto & block : t.partition) {
                Block image;
                for (auto x : block)
                    image.push_back(gen(x));
                std::sort(image.begin(), image.end());
                if (t.partition[block_of[image.front()]] != image) {
                    c.passed = false;
                    c.detail = "generator " + std::to_string(i) + " maps " + block_text(block) + " to "
                        + block_text(image);
                    break;
                }
            }
        }
        report.checks.push_back(c);
    }

    {
        bool quotient_edge = false;
        Check c{"independent blocks", true, ""};
        for (auto [u, v] : t.graph.edges()) {
            if (block_of[u] != block_of[v])
                quotient_edge = true;
            else if (c.passed) {
                c.passed = false;
                c.detail = "edge {" + std::to_string(u) + "," + std::to_string(v) + "} lies inside a block";
            }
        }
        if (! quotient_edge)
            c = {"independent blocks", true, "quotient has no edge; not required"};
        report.checks.push_back(c);
    }

    {
        Check c{"G-symmetric", true, ""};
        try {
            if (! is_s_arc_transitive(t.graph, t.group, 1)) {
                c.passed = false;
                c.detail = "group is not transitive on vertices and arcs";
            }
        }
        catch (const Error & e) {
            c.passed = false;
            c.detail = e.what();
        }
        report.checks.push_back(c);
    }
    return report;
}

void require_valid(const SymmetricTriple & t)
{
    auto report = validate_partition(t);
    if (report.valid())
        return;
    std::string message = "invalid triple:";
    for (const auto & c : report.failures())
        message += " [" + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "]";
    throw PreconditionError(message);
}

const Block & TraceTable::trace(std::size_t b, std::size_t c) const
{
    static const Block empty;
    auto it = traces.find({b, c});
    return it == traces.end() ? empty : it->second;
}

TraceTable compute_traces(const Graph & g, const Partition & partition)
{
    TraceTable table;
    table.block_of = block_index(g.vertex_count(), partition);
    table.neighbour_blocks.resize(partition.size());
    table.vertex_blocks.resize(g.vertex_count());

    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        auto & seen = table.vertex_blocks[a];
        for (auto w : g.neighbours(a))
            if (table.block_of[w] != table.block_of[a])
                seen.push_back(table.block_of[w]);
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        for (auto c : seen)
            table.traces[{table.block_of[a], c}].push_back(a);
    }
    for (const auto & [key, trace] : table.traces)
        table.neighbour_blocks[key.first].push_back(key.second);
    return table;
}

Graph block_graph(const Graph & g, const Partition & partition)
{
    auto block_of = block_index(g.vertex_count(), partition);
    std::set<Edge> edges;
    for (auto [u, v] : g.edges()) {
        auto bu = static_cast<Vertex>(block_of[u]), bv = static_cast<Vertex>(block_of[v]);
        if (bu != bv)
            edges.emplace(std::min(bu, bv), std::max(bu, bv));
    }
    return Graph(partition.size(), {edges.begin(), edges.end()});
}

Quotient quotient_graph(const SymmetricTriple & t)
{
    require_valid(t);
    auto graph = block_graph(t.graph, t.partition);
    auto action = block_action(t.group, t.partition);
    if (! is_s_arc_transitive(graph, action.image_group(), 1))
        throw Error("quotient graph is not G-symmetric under the induced action");
    return Quotient{std::move(graph), std::move(action)};
}

Parameters parameters(const SymmetricTriple & t)
{
    return parameters(t.graph, t.partition);
}

Parameters parameters(const Graph & g, const Partition & partition)
{
    auto table = compute_traces(g, partition);
    if (table.traces.empty())
        throw PreconditionError("quotient graph has no edge");

    using Item = std::pair<std::size_t, std::string>;
    Parameters p;
    p.v = constant_or_throw("v", [&] {
        std::vector<Item> out;
        for (std::size_t b = 0; b < partition.size(); ++b)
            out.emplace_back(partition[b].size(), "block " + std::to_string(b));
        return out;
    });
    p.b = constant_or_throw("b", [&] {
        std::vector<Item> out;
        for (std::size_t b = 0; b < partition.size(); ++b)
            out.emplace_back(table.neighbour_blocks[b].size(), "block " + std::to_string(b));
        return out;
    });
    p.r = constant_or_throw("r", [&] {
        std::vector<Item> out;
        for (Vertex a = 0; a < g.vertex_count(); ++a)
            out.emplace_back(table.vertex_blocks[a].size(), "vertex " + std::to_string(a));
        return out;
    });
    p.k = constant_or_throw("k", [&] {
        std::vector<Item> out;
        for (const auto & [key, trace] : table.traces)
            out.emplace_back(trace.size(), "blocks " + std::to_string(key.first) + "," + std::to_string(key.second));
        return out;
    });
    p.m = constant_or_throw("m", [&] {
        std::vector<Item> out;
        for (const auto & [key, trace] : table.traces) {
            std::size_t same = 0;
            for (auto d : table.neighbour_blocks[key.first])
                same += table.trace(key.first, d) == trace ? 1 : 0;
            out.emplace_back(same, "blocks " + std::to_string(key.first) + "," + std::to_string(key.second));
        }
        return out;
    });

    if (p.v * p.r != p.b * p.k || p.r % p.m != 0 || p.b % p.m != 0)
        throw std::logic_error("parameter identities failed on constant parameters");
    return p;
}

LambdaReport lambda_pairwise(const SymmetricTriple & t, long p)
{
    auto params = parameters(t);
    if (p != params.p())
        throw PreconditionError("p = " + std::to_string(p) + " but v - k = " + std::to_string(params.p()));
    if (params.b < 2)
        throw PreconditionError("lambda needs quotient valency b >= 2");

    auto table = compute_traces(t.graph, t.partition);
    LambdaReport report;
    report.single_pair = params.b == 2;
    bool first = true;
    for (std::size_t blk = 0; blk < t.partition.size() && ! report.witness; ++blk) {
        const auto & nbrs = table.neighbour_blocks[blk];
        for (std::size_t i = 0; i < nbrs.size() && ! report.witness; ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const auto & x = table.trace(blk, nbrs[i]);
                const auto & y = table.trace(blk, nbrs[j]);
                Block common;
                std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
                if (first) {
                    report.lambda = common.size();
                    first = false;
                }
                else if (common.size() != report.lambda) {
                    report.witness = LambdaWitness{blk, nbrs[i], nbrs[j], common.size()};
                    break;
                }
            }
    }
    report.constant = ! report.witness;

    const long v = static_cast<long>(params.v), k = static_cast<long>(params.k), r = static_cast<long>(params.r),
               b = static_cast<long>(params.b), lambda = static_cast<long>(report.lambda);
    report.lambda_bar = v - 2 * k + lambda;
    report.eq_vr = {v * r, b * (v - p)};
    report.eq_lambda = {lambda * (b - 1), (v - p) * (r - 1)};
    if (report.constant && report.lambda >= 1)
        report.fisher = b <= v;
    return report;
}

std::string to_string(RefinementCase c)
{
    switch (c) {
    case RefinementCase::i:
        return "i";
    case RefinementCase::ii:
        return "ii";
    case RefinementCase::neither:
        return "neither";
    case RefinementCase::inapplicable:
        break;
    }
    return "inapplicable";
}

bool RefinementReport::all_checks_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check & c) { return c.passed; });
}

namespace {
    // Value shared by every entry, or nothing.
    std::optional<std::size_t> common_value(const std::vector<std::size_t> & xs)
    {
        if (xs.empty() || std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) != xs.end())
            return std::nullopt;
        return xs.front();
    }

    Check constant_check(const std::string & name, const std::vector<std::size_t> & xs, std::size_t & out)
    {
        auto value = common_value(xs);
        if (! value)
            return {name, false, "value depends on the representative"};
        out = *value;
        return {name, true, std::to_string(*value)};
    }

    Check equality_check(const std::string & name, long lhs, long rhs)
    {
        return {name, lhs == rhs, std::to_string(lhs) + (lhs == rhs ? " == " : " != ") + std::to_string(rhs)};
    }
}

RefinementReport blocks_refinement(const SymmetricTriple & t)
{
    auto params = parameters(t);
    if (params.k == params.v)
        throw EmptyTrace("k = v: every complement B \\ Γ(C) is empty");

    RefinementReport report;
    report.p = params.p();
    auto lambda = lambda_pairwise(t, report.p);
    if (! lambda.constant) {
        report.checks.push_back({"lambda constant", false, "lambda depends on the pair of blocks"});
        return report;
    }
    if (lambda.lambda_bar != 0)
        throw OverlappingTraces("lambda-bar = " + std::to_string(lambda.lambda_bar) + ": complements intersect");

    auto table = compute_traces(t.graph, t.partition);
    const auto nblocks = t.partition.size();

    // P-block index of the complement B \ Γ(C), keyed by the ordered pair (B, C)
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> complement_of;
    Partition refined;
    std::vector<std::vector<std::size_t>> hat(nblocks);
    bool covers = true;
    for (std::size_t blk = 0; blk < nblocks; ++blk) {
        const auto & block = t.partition[blk];
        std::vector<bool> covered(block.size(), false);
        for (auto c : table.neighbour_blocks[blk]) {
            Block comp;
            std::set_difference(block.begin(), block.end(), table.trace(blk, c).begin(), table.trace(blk, c).end(),
                std::back_inserter(comp));
            auto it = std::find(refined.begin(), refined.end(), comp);
            std::size_t idx = static_cast<std::size_t>(it - refined.begin());
            if (it == refined.end()) {
                refined.push_back(comp);
                hat[blk].push_back(idx);
            }
            complement_of[{blk, c}] = idx;
            for (auto x : comp)
                covered[static_cast<std::size_t>(std::lower_bound(block.begin(), block.end(), x) - block.begin())] = true;
        }
        covers = covers && std::all_of(covered.begin(), covered.end(), [](bool x) { return x; });
    }
    report.checks.push_back({"complements cover each block", covers, ""});
    if (! covers)
        return report;

    // Reindex P canonically; B-hat follows.
    std::vector<std::size_t> order(refined.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return refined[x] < refined[y]; });
    std::vector<std::size_t> new_index(refined.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        new_index[order[i]] = i;
    for (std::size_t i = 0; i < order.size(); ++i)
        report.refined.push_back(refined[order[i]]);
    for (auto & [key, idx] : complement_of)
        idx = new_index[idx];
    for (auto & group : hat) {
        Block g;
        for (auto idx : group)
            g.push_back(static_cast<Vertex>(new_index[idx]));
        std::sort(g.begin(), g.end());
        report.hat.push_back(std::move(g));
    }

    std::optional<ActionTable> refined_action;
    try {
        refined_action = block_action(t.group, report.refined);
        report.checks.push_back({"P is G-invariant", true, ""});
    }
    catch (const NotInvariant & e) {
        report.checks.push_back({"P is G-invariant", false, e.what()});
        return report;
    }

    {
        std::vector<std::size_t> sizes;
        for (const auto & group : report.hat)
            sizes.push_back(group.size());
        report.checks.push_back(constant_check("a constant", sizes, report.a));
        std::vector<std::size_t> psizes;
        for (const auto & block : report.refined)
            psizes.push_back(block.size());
        std::size_t psize = 0;
        auto c = constant_check("P block size = v - k", psizes, psize);
        c.passed = c.passed && static_cast<long>(psize) == report.p;
        report.checks.push_back(c);
    }

    auto refined_graph = block_graph(t.graph, report.refined);
    try {
        report.hat_parameters = parameters(refined_graph, report.hat);
        report.checks.push_back({"B-hat parameters representative-independent", true, ""});
    }
    catch (const Error & e) {
        report.checks.push_back({"B-hat parameters representative-independent", false, e.what()});
        return report;
    }

    // (Γ_P)_{B-hat} against Γ_B with B-hat_i <-> B_i
    report.quotient_correspondence = block_graph(refined_graph, report.hat) == block_graph(t.graph, t.partition);
    report.checks.push_back({"(Γ_P)_B-hat ≅ Γ_B by block correspondence", report.quotient_correspondence, ""});

    const auto & hp = report.hat_parameters;
    report.checks.push_back({"v-hat = b-hat = a, k-hat = r-hat = a - 1",
        hp.v == report.a && hp.b == report.a && hp.k + 1 == report.a && hp.r + 1 == report.a,
        "(" + std::to_string(hp.v) + "," + std::to_string(hp.k) + "," + std::to_string(hp.r) + ","
            + std::to_string(hp.b) + ")"});

    auto refined_table = compute_traces(t.graph, report.refined);
    auto hat_of = [&](std::size_t pidx) { return table.block_of[report.refined[pidx].front()]; };

    // s: valency of Γ_P[B-hat, C-hat]
    {
        std::vector<std::size_t> degrees;
        for (std::size_t pidx = 0; pidx < report.refined.size(); ++pidx) {
            std::map<std::size_t, std::size_t> toward;
            for (auto q : refined_graph.neighbours(static_cast<Vertex>(pidx)))
                toward[hat_of(q)] += 1;
            for (auto [c, d] : toward)
                degrees.push_back(d);
        }
        report.checks.push_back(constant_check("s constant", degrees, report.s));
    }

    // t: P-blocks inside C meeting Γ(α), for α ∈ B ∩ Γ(C)
    {
        std::vector<std::size_t> counts;
        for (Vertex a = 0; a < t.graph.vertex_count(); ++a)
            for (auto c : table.vertex_blocks[a]) {
                std::set<std::size_t> hit;
                for (auto w : t.graph.neighbours(a))
                    if (table.block_of[w] == c)
                        hit.insert(refined_table.block_of[w]);
                counts.push_back(hit.size());
            }
        report.checks.push_back(constant_check("t independent of the fixed vertex", counts, report.t));
    }

    {
        std::vector<std::size_t> ks, rs, bs;
        for (const auto & [key, trace] : refined_table.traces)
            ks.push_back(trace.size());
        for (Vertex a = 0; a < t.graph.vertex_count(); ++a)
            rs.push_back(refined_table.vertex_blocks[a].size());
        for (std::size_t pidx = 0; pidx < report.refined.size(); ++pidx)
            bs.push_back(refined_graph.degree(static_cast<Vertex>(pidx)));
        report.checks.push_back(constant_check("k_P constant", ks, report.k_refined));
        report.checks.push_back(constant_check("r_P constant", rs, report.r_refined));
        report.checks.push_back(constant_check("b_P constant", bs, report.b_refined));
    }

    const long s = static_cast<long>(report.s), tt = static_cast<long>(report.t), kp = static_cast<long>(report.k_refined);
    report.checks.push_back(equality_check("b_P = r-hat * s", static_cast<long>(report.b_refined), static_cast<long>(hp.r) * s));
    report.checks.push_back(equality_check("r_P = r-hat * t", static_cast<long>(report.r_refined), static_cast<long>(hp.r) * tt));
    report.checks.push_back(equality_check("p t = k_P s", report.p * tt, kp * s));

    if (kp == report.p && s == tt)
        report.case_tag = RefinementCase::i;
    else if (report.p > 0 && s % report.p == 0 && tt == kp * (s / report.p) && s / report.p >= 1
        && s / report.p <= (static_cast<long>(report.a) - 1) / report.p)
        report.case_tag = RefinementCase::ii;
    else
        report.case_tag = RefinementCase::neither;

    // Γ_P as a 3-arc graph of Γ_B: P-block B \ Γ(C) <-> arc (B, C)
    {
        Check c{"Γ_P ≅ Ξ(Γ_B, Δ) for a self-paired G-orbit Δ", true, ""};
        std::vector<std::pair<std::size_t, std::size_t>> arc_of(report.refined.size());
        std::set<std::size_t> hit;
        for (const auto & [key, idx] : complement_of) {
            arc_of[idx] = key;
            hit.insert(idx);
        }
        if (hit.size() != complement_of.size() || hit.size() != report.refined.size()) {
            c.passed = false;
            c.detail = "P-blocks are not in bijection with arcs of Γ_B";
        }
        std::set<std::vector<Vertex>> delta;
        auto quotient = block_graph(t.graph, t.partition);
        if (c.passed)
            for (auto [x, y] : refined_graph.edges())
                for (auto [from, to] : {std::pair{x, y}, std::pair{y, x}}) {
                    auto [b1, c1] = arc_of[from];
                    auto [b2, c2] = arc_of[to];
                    std::vector<Vertex> arc{static_cast<Vertex>(c1), static_cast<Vertex>(b1), static_cast<Vertex>(b2),
                        static_cast<Vertex>(c2)};
                    if (c1 == b2 || b1 == c2 || ! quotient.has_edge(arc[1], arc[2])) {
                        c.passed = false;
                        c.detail = "an edge of Γ_P does not glue to a 3-arc of Γ_B";
                    }
                    delta.insert(arc);
                }
        if (c.passed) {
            auto induced = block_action(t.group, t.partition);
            std::set<std::vector<Vertex>> orbit{*delta.begin()};
            std::vector<std::vector<Vertex>> queue{*delta.begin()};
            for (std::size_t head = 0; head < queue.size(); ++head)
                for (std::size_t g = 0; g < induced.rows().size(); ++g) {
                    auto image = queue[head];
                    for (auto & x : image)
                        x = induced.image(g, x);
                    if (orbit.insert(image).second)
                        queue.push_back(image);
                }
            if (orbit != delta) {
                c.passed = false;
                c.detail = "Δ is not a single G-orbit";
            }
            else
                c.detail = "|Δ| = " + std::to_string(delta.size());
        }
        report.checks.push_back(c);
    }

    return report;
}

} // namespace imprim
