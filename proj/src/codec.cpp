#include "imprim/codec.hpp"

#include "imprim/errors.hpp"

#include <algorithm>
#include <set>

namespace imprim {

namespace {
    const Json & field(const Json & j, const std::string & path, const char * key)
    {
        if (! j.is_object())
            throw SchemaError(path.empty() ? "/" : path, "expected an object");
        auto it = j.find(key);
        if (it == j.end())
            throw SchemaError(path + "/" + key, "missing field");
        return *it;
    }

    std::size_t natural(const Json & j, const std::string & path)
    {
        if (! j.is_number_integer() || j.get<long long>() < 0)
            throw SchemaError(path, "expected a non-negative integer");
        return j.get<std::size_t>();
    }

    const Json & array(const Json & j, const std::string & path)
    {
        if (! j.is_array())
            throw SchemaError(path, "expected an array");
        return j;
    }

    std::vector<Point> point_list(const Json & j, const std::string & path, std::size_t limit)
    {
        std::vector<Point> out;
        const auto & arr = array(j, path);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            auto x = natural(arr[i], path + "/" + std::to_string(i));
            if (x >= limit)
                throw SchemaError(path + "/" + std::to_string(i),
                    std::to_string(x) + " is out of range 0.." + std::to_string(limit) + "-1");
            out.push_back(static_cast<Point>(x));
        }
        return out;
    }

    Json blocks_json(const std::vector<Block> & blocks)
    {
        Json out = Json::array();
        for (const auto & b : blocks)
            out.push_back(b);
        return out;
    }

    Json parameters_json(const DesignParameters & d)
    {
        return {{"block_count", d.block_count}, {"k", d.k}, {"lambda", d.lambda}, {"replication", d.replication},
            {"t", d.t}, {"v", d.v}};
    }

    template <typename T, typename F>
    Json optional_json(const std::optional<T> & x, F && encode)
    {
        return x ? encode(*x) : Json(nullptr);
    }

    Json evidence_json(const std::vector<Evidence> & list)
    {
        Json out = Json::array();
        for (const auto & e : list)
            out.push_back({{"detail", e.detail}, {"mandatory", e.mandatory}, {"name", e.name}, {"passed", e.passed}});
        return out;
    }

    Json identity_json(const IdentityCheck & c)
    {
        return {{"holds", c.holds()}, {"lhs", c.lhs}, {"rhs", c.rhs}};
    }
}

Json encode_graph(const Graph & g)
{
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"edges", edges}, {"vertices", g.vertex_count()}};
}

Graph decode_graph(const Json & j, const std::string & path)
{
    auto n = natural(field(j, path, "vertices"), path + "/vertices");
    const auto & edges = array(field(j, path, "edges"), path + "/edges");
    std::vector<Edge> out;
    std::set<Edge> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto where = path + "/edges/" + std::to_string(i);
        auto pair = point_list(edges[i], where, n);
        if (pair.size() != 2)
            throw SchemaError(where, "an edge has exactly two endpoints");
        if (pair[0] == pair[1])
            throw SchemaError(where, "loop at vertex " + std::to_string(pair[0]));
        Edge e{std::min(pair[0], pair[1]), std::max(pair[0], pair[1])};
        if (! seen.insert(e).second)
            throw SchemaError(where, "duplicate edge");
        out.push_back(e);
    }
    return Graph(n, out);
}

Json encode_group(const GeneratedGroup & g)
{
    Json gens = Json::array();
    for (const auto & p : g.generators())
        gens.push_back(p.images());
    return {{"degree", g.degree()}, {"generators", gens}};
}

GeneratedGroup decode_group(const Json & j, const std::string & path)
{
    auto degree = natural(field(j, path, "degree"), path + "/degree");
    const auto & gens = array(field(j, path, "generators"), path + "/generators");
    std::vector<Permutation> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto where = path + "/generators/" + std::to_string(i);
        auto images = point_list(gens[i], where, degree);
        if (images.size() != degree)
            throw SchemaError(where, "expected " + std::to_string(degree) + " images");
        std::vector<bool> hit(degree, false);
        for (auto x : images) {
            if (hit[x])
                throw SchemaError(where, "not a bijection: " + std::to_string(x) + " is hit twice");
            hit[x] = true;
        }
        out.emplace_back(std::move(images));
    }
    return GeneratedGroup(degree, std::move(out));
}

Json encode_triple(const SymmetricTriple & t)
{
    return {{"graph", encode_graph(t.graph)}, {"group", encode_group(t.group)}, {"partition", blocks_json(t.partition)}};
}

SymmetricTriple decode_triple(const Json & j, const std::string & path)
{
    auto graph = decode_graph(field(j, path, "graph"), path + "/graph");
    auto group = decode_group(field(j, path, "group"), path + "/group");
    if (group.degree() != graph.vertex_count())
        throw SchemaError(path + "/group/degree", "differs from the vertex count " + std::to_string(graph.vertex_count()));
    const auto & blocks = array(field(j, path, "partition"), path + "/partition");
    Partition partition;
    std::vector<bool> seen(graph.vertex_count(), false);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto where = path + "/partition/" + std::to_string(i);
        auto block = point_list(blocks[i], where, graph.vertex_count());
        if (block.empty())
            throw SchemaError(where, "empty block");
        for (auto x : block) {
            if (seen[x])
                throw SchemaError(where, "vertex " + std::to_string(x) + " appears in more than one block");
            seen[x] = true;
        }
        partition.push_back(std::move(block));
    }
    for (std::size_t x = 0; x < seen.size(); ++x)
        if (! seen[x])
            throw SchemaError(path + "/partition", "vertex " + std::to_string(x) + " is in no block");
    return SymmetricTriple(std::move(graph), std::move(group), std::move(partition));
}

Json encode_design(const IncidenceStructure & d)
{
    return {{"blocks", blocks_json(d.blocks())}, {"points", d.point_count()}};
}

IncidenceStructure decode_design(const Json & j, const std::string & path)
{
    auto n = natural(field(j, path, "points"), path + "/points");
    const auto & blocks = array(field(j, path, "blocks"), path + "/blocks");
    std::vector<Block> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto where = path + "/blocks/" + std::to_string(i);
        auto block = point_list(blocks[i], where, n);
        std::sort(block.begin(), block.end());
        if (std::adjacent_find(block.begin(), block.end()) != block.end())
            throw SchemaError(where, "repeated point");
        out.push_back(std::move(block));
    }
    return IncidenceStructure(n, std::move(out));
}

Json encode_orbits(const std::vector<ThreeArcOrbit> & orbits)
{
    Json out = Json::array();
    for (const auto & o : orbits)
        out.push_back({{"representative", o.representative}, {"self_paired", o.self_paired}, {"size", o.members.size()}});
    return out;
}

Json encode_report(const ClassificationReport & r)
{
    const auto & params = r.parameters;
    Json out;
    out["p"] = r.p;
    out["vertices"] = r.vertex_count;
    out["blocks"] = r.block_count;
    out["parameters"] = {{"b", params.b}, {"k", params.k}, {"m", params.m}, {"r", params.r}, {"v", params.v}};
    out["lambda"] = optional_json(r.lambda, [](const LambdaReport & l) {
        Json j{{"constant", l.constant}, {"single_pair", l.single_pair}};
        j["value"] = l.constant ? Json(l.lambda) : Json(nullptr);
        j["lambda_bar"] = l.constant ? Json(l.lambda_bar) : Json(nullptr);
        j["witness"] = optional_json(l.witness, [](const LambdaWitness & w) {
            return Json{{"block", w.block}, {"first", w.first}, {"second", w.second}, {"value", w.value}};
        });
        return j;
    });

    const auto & ids = r.identities;
    out["identities"] = {{"vr_bk", identity_json(ids.vr_bk)},
        {"eq_vr", optional_json(ids.eq_vr, identity_json)},
        {"eq_lambda", optional_json(ids.eq_lambda, identity_json)},
        {"fisher", optional_json(ids.fisher, [](bool b) { return Json(b); })},
        {"m_divides_r_and_b", ids.m_divides_r_and_b}};
    out["quotient_2at"] = r.quotient_2at;
    out["hypotheses"] = evidence_json(r.hypotheses);

    const auto & f = r.fingerprints;
    out["fingerprints"] = {{"group_order", f.group_order}, {"block_stabilizer_order", f.block_stabilizer_order},
        {"on_block_order", f.on_block_order}, {"on_block_transitivity", f.on_block_transitivity},
        {"on_neighbours_order", f.on_neighbours_order}, {"on_neighbours_transitivity", f.on_neighbours_transitivity},
        {"kernel_order", f.kernel_order}, {"quotient_group_order", f.quotient_group_order},
        {"equivariant_bijection", optional_json(f.equivariant_bijection, [](bool b) { return Json(b); })}};

    const auto & s = r.structure;
    out["structure"] = {{"valency", s.valency}, {"quotient_cycle", s.quotient_cycle}, {"pair_pattern", s.pair_pattern},
        {"pair_copies", s.pair_copies},
        {"one_missing_block", optional_json(s.one_missing_block, [](bool b) { return Json(b); })},
        {"dual_design", optional_json(s.dual_design, parameters_json)},
        {"complement_dual_design", optional_json(s.complement_dual_design, parameters_json)},
        {"complement_design", optional_json(s.complement_design, parameters_json)},
        {"refinement", optional_json(s.refinement, [](const RefinementSummary & ref) {
             return Json{{"case", ref.case_tag}, {"checks_passed", ref.checks_passed}, {"a", ref.a}, {"s", ref.s},
                 {"t", ref.t}, {"failed_checks", ref.failed_checks}};
         })},
        {"gamma2_recovered", optional_json(s.gamma2_recovered, [](bool b) { return Json(b); })}};

    out["mode"] = optional_json(r.mode, [](Mode m) { return Json(to_string(m)); });
    out["case"] = r.matched_case;
    out["matches"] = r.matches;
    out["evidence"] = evidence_json(r.evidence);
    out["iff_consistent"] = optional_json(r.iff_consistent, [](bool b) { return Json(b); });
    return out;
}

std::string canonical_dump(const Json & j)
{
    return j.dump();
}

Json parse_json(const std::string & text)
{
    try {
        return Json::parse(text);
    }
    catch (const Json::parse_error & e) {
        throw SchemaError("", std::string("malformed JSON: ") + e.what());
    }
}

} // namespace imprim
