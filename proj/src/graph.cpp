#include "imprim/graph.hpp"

#include "imprim/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace imprim {

Graph::Graph(std::size_t vertex_count, const std::vector<Edge> & edges) :
    adjacency_(vertex_count)
{
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} leaves the vertex set");
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto & adj = adjacency_[v];
        std::sort(adj.begin(), adj.end());
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
    edge_count_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (u >= adjacency_.size() || v >= adjacency_.size())
        return false;
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u)
        for (auto v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

long Graph::valency() const
{
    if (adjacency_.empty())
        return 0;
    auto d = adjacency_.front().size();
    for (const auto & adj : adjacency_)
        if (adj.size() != d)
            return -1;
    return static_cast<long>(d);
}

namespace {
    std::size_t param(const std::vector<long> & params, std::size_t i, long minimum, const std::string & family)
    {
        if (i >= params.size() || params[i] < minimum)
            throw std::invalid_argument(family + ": parameter " + std::to_string(i) + " must be at least "
                + std::to_string(minimum));
        return static_cast<std::size_t>(params[i]);
    }

    Graph complete(std::size_t n)
    {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    Graph cycle(std::size_t n)
    {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            edges.emplace_back(std::min<Vertex>(u, (u + 1) % n), std::max<Vertex>(u, (u + 1) % n));
        return Graph(n, edges);
    }

    Graph bipartite(std::size_t n, bool drop_matching)
    {
        std::vector<Edge> edges;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = 0; j < n; ++j)
                if (! (drop_matching && i == j))
                    edges.emplace_back(i, static_cast<Vertex>(n) + j);
        return Graph(2 * n, edges);
    }
}

Graph disjoint_copies(const Graph & g, std::size_t copies)
{
    std::vector<Edge> edges;
    auto n = static_cast<Vertex>(g.vertex_count());
    for (std::size_t c = 0; c < copies; ++c)
        for (auto [u, v] : g.edges())
            edges.emplace_back(static_cast<Vertex>(c) * n + u, static_cast<Vertex>(c) * n + v);
    return Graph(copies * g.vertex_count(), edges);
}

Graph build_named_graph(const std::string & family, const std::vector<long> & params)
{
    if (family == "complete")
        return complete(param(params, 0, 1, family));
    if (family == "cycle")
        return cycle(param(params, 0, 3, family));
    if (family == "complete-bipartite")
        return bipartite(param(params, 0, 1, family), false);
    if (family == "crown")
        return bipartite(param(params, 0, 2, family), true);
    if (family == "disjoint-complete")
        return disjoint_copies(complete(param(params, 1, 1, family)), param(params, 0, 1, family));
    if (family == "disjoint-cycle")
        return disjoint_copies(cycle(param(params, 1, 3, family)), param(params, 0, 1, family));
    if (family == "petersen") {
        std::vector<Edge> edges;
        for (Vertex i = 0; i < 5; ++i) {
            edges.emplace_back(std::min<Vertex>(i, (i + 1) % 5), std::max<Vertex>(i, (i + 1) % 5));
            edges.emplace_back(i, i + 5);
            Vertex a = 5 + i, b = 5 + (i + 2) % 5;
            if (a < b)
                edges.emplace_back(a, b);
            else
                edges.emplace_back(b, a);
        }
        return Graph(10, edges);
    }
    if (family == "matched-cycle-chain") {
        std::size_t n = param(params, 0, 3, family);
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (Vertex j = 0; j < 3; ++j)
                edges.emplace_back(static_cast<Vertex>(6 * i) + j, static_cast<Vertex>(6 * ((i + 1) % n)) + 3 + j);
        for (auto & [u, v] : edges)
            if (u > v)
                std::swap(u, v);
        return Graph(6 * n, edges);
    }
    throw std::invalid_argument("unknown graph family '" + family + "'");
}

std::vector<SArc> s_arcs(const Graph & g, std::size_t s)
{
    std::size_t max_degree = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        max_degree = std::max(max_degree, g.degree(v));
    double estimate = static_cast<double>(g.vertex_count());
    for (std::size_t i = 0; i < s; ++i)
        estimate *= static_cast<double>(max_degree);
    if (estimate > static_cast<double>(s_arc_limit))
        throw TooLarge("s-arc enumeration estimate " + std::to_string(static_cast<long long>(estimate))
            + " exceeds limit " + std::to_string(s_arc_limit));

    std::vector<SArc> out;
    SArc current;
    auto extend = [&](auto & self) -> void {
        if (current.size() == s + 1) {
            out.push_back(current);
            return;
        }
        for (auto w : g.neighbours(current.back())) {
            if (current.size() >= 2 && w == current[current.size() - 2])
                continue;
            current.push_back(w);
            self(self);
            current.pop_back();
        }
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        current = {v};
        extend(extend);
    }
    return out;
}

void require_automorphisms(const Graph & g, const GeneratedGroup & group)
{
    if (group.degree() != g.vertex_count())
        throw std::invalid_argument("group degree " + std::to_string(group.degree()) + " differs from vertex count "
            + std::to_string(g.vertex_count()));
    for (std::size_t i = 0; i < group.generators().size(); ++i) {
        const auto & gen = group.generators()[i];
        for (auto [u, v] : g.edges())
            if (! g.has_edge(gen(u), gen(v)))
                throw NotAutomorphism("generator " + std::to_string(i) + " maps edge {" + std::to_string(u) + ","
                    + std::to_string(v) + "} to non-edge {" + std::to_string(gen(u)) + "," + std::to_string(gen(v)) + "}");
    }
}

bool is_s_arc_transitive(const Graph & g, const GeneratedGroup & group, std::size_t s)
{
    require_automorphisms(g, group);
    if (orbit(group, 0).size() != g.vertex_count())
        return false;
    if (s == 0)
        return true;

    auto arcs = s_arcs(g, s);
    if (arcs.empty())
        return true;

    std::vector<bool> seen(arcs.size(), false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto & gen : group.generators()) {
            SArc image(arcs[queue[head]]);
            for (auto & x : image)
                x = gen(x);
            auto idx = static_cast<std::size_t>(std::lower_bound(arcs.begin(), arcs.end(), image) - arcs.begin());
            if (! seen[idx]) {
                seen[idx] = true;
                queue.push_back(idx);
            }
        }
    return queue.size() == arcs.size();
}

std::vector<std::vector<Vertex>> connected_components(const Graph & g)
{
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (auto w : g.neighbours(comp[head]))
                if (! seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph & g)
{
    return g.vertex_count() == 0 || connected_components(g).size() == 1;
}

std::string BipartitePattern::tag() const
{
    auto prefix = [&] { return copies == 1 ? std::string{} : std::to_string(copies) + "*"; };
    auto kk = "K_{" + std::to_string(part) + "," + std::to_string(part) + "}";
    switch (kind) {
    case BipartiteKind::matching:
        return std::to_string(copies) + "*K_2";
    case BipartiteKind::cycle:
        return prefix() + "C_" + std::to_string(2 * part);
    case BipartiteKind::crown:
        return prefix() + "(" + kk + "-" + std::to_string(part) + "*K_2)";
    case BipartiteKind::cycle_complement:
        return prefix() + "(" + kk + "-C_" + std::to_string(2 * part) + ")";
    case BipartiteKind::complete:
        return prefix() + kk;
    case BipartiteKind::other:
        break;
    }
    return "other";
}

BipartitePattern classify_bipartite(const Graph & g, const std::vector<Vertex> & left, const std::vector<Vertex> & right)
{
    std::set<Vertex> l(left.begin(), left.end()), r(right.begin(), right.end());
    for (auto x : l)
        if (r.count(x))
            throw std::invalid_argument("left and right vertex sets overlap");

    // local graph on left ++ right, left-right edges only
    std::vector<Vertex> verts(l.begin(), l.end());
    std::size_t nl = verts.size();
    verts.insert(verts.end(), r.begin(), r.end());
    std::map<Vertex, Vertex> local;
    for (std::size_t i = 0; i < verts.size(); ++i)
        local[verts[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < nl; ++i)
        for (auto w : g.neighbours(verts[i]))
            if (r.count(w))
                edges.emplace_back(static_cast<Vertex>(i), local[w]);
    Graph h(verts.size(), edges);

    if (edges.empty())
        return {BipartiteKind::matching, 0, 1};

    auto classify_component = [&](const std::vector<Vertex> & comp) -> BipartitePattern {
        std::size_t cl = 0;
        for (auto x : comp)
            cl += x < nl ? 1 : 0;
        std::size_t cr = comp.size() - cl;
        if (cl != cr)
            return {};
        std::size_t j = cl;
        std::size_t d = h.degree(comp.front());
        for (auto x : comp)
            if (h.degree(x) != d)
                return {};
        if (j == 1)
            return {BipartiteKind::matching, 1, 1};
        if (d == 2)
            return {BipartiteKind::cycle, 1, j};
        if (d == j)
            return {BipartiteKind::complete, 1, j};
        if (d + 1 == j)
            return {BipartiteKind::crown, 1, j};
        if (d + 2 == j) {
            // complement inside the bipartition must be one 2j-cycle
            std::vector<Edge> missing;
            std::map<Vertex, Vertex> idx;
            for (std::size_t i = 0; i < comp.size(); ++i)
                idx[comp[i]] = static_cast<Vertex>(i);
            for (auto x : comp)
                for (auto y : comp)
                    if (x < nl && y >= nl && ! h.has_edge(x, y))
                        missing.emplace_back(idx[x], idx[y]);
            Graph c(comp.size(), missing);
            if (c.valency() == 2 && is_connected(c))
                return {BipartiteKind::cycle_complement, 1, j};
        }
        return {};
    };

    BipartitePattern result;
    bool first = true;
    for (const auto & comp : connected_components(h)) {
        auto p = classify_component(comp);
        if (p.kind == BipartiteKind::other)
            return {};
        if (first) {
            result = p;
            first = false;
        }
        else if (p.kind != result.kind || p.part != result.part)
            return {};
        else
            result.copies += 1;
    }
    return result;
}

} // namespace imprim
