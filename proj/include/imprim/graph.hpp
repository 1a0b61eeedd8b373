#pragma once

#include "imprim/permgroup.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace imprim {

using Vertex = Point;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on {0, ..., vertex_count-1} with sorted adjacency lists.
class Graph
{
public:
    Graph() = default;

    /// Throws std::invalid_argument on loops, duplicate edges or out-of-range endpoints.
    Graph(std::size_t vertex_count, const std::vector<Edge> & edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    const std::vector<Vertex> & neighbours(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const;

    /// Edges as pairs (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Common valency, or -1 if the graph is not regular.
    long valency() const;

    bool operator==(const Graph &) const = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Catalogue of standard families. Labelling:
///   complete {n}                 K_n on 0..n-1
///   cycle {n}                    i ~ i+1 mod n, n >= 3
///   complete-bipartite {n}       parts 0..n-1 and n..2n-1
///   crown {n}                    K_{n,n} minus the matching i ~ n+i
///   disjoint-complete {m, n}     copy c occupies c*n .. c*n+n-1
///   disjoint-cycle {m, n}        same layout as disjoint-complete
///   petersen {}                  outer cycle 0..4, spokes i ~ i+5, inner 5+i ~ 5+(i+2 mod 5)
///   matched-cycle-chain {n}      see matched_cycle_chain()
Graph build_named_graph(const std::string & family, const std::vector<long> & params);

/// m vertex-disjoint copies of g; copy c is shifted by c * |V(g)|.
Graph disjoint_copies(const Graph & g, std::size_t copies);

using SArc = std::vector<Vertex>;

/// Hard cap on |V| * d^s before s-arc enumeration refuses.
inline constexpr std::size_t s_arc_limit = 10'000'000;

/// All s-arcs in lexicographic order. Throws TooLarge above s_arc_limit.
std::vector<SArc> s_arcs(const Graph & g, std::size_t s);

/// Throws NotAutomorphism naming the first generator and edge that fail.
void require_automorphisms(const Graph & g, const GeneratedGroup & group);

/// Every generator is an automorphism and the group is transitive on vertices and on s-arcs.
bool is_s_arc_transitive(const Graph & g, const GeneratedGroup & group, std::size_t s);

std::vector<std::vector<Vertex>> connected_components(const Graph & g);
bool is_connected(const Graph & g);

enum class BipartiteKind
{
    matching,         ///< copies * K_2
    cycle,            ///< copies * C_{2 * part}
    crown,            ///< copies * (K_{part,part} - part * K_2)
    cycle_complement, ///< copies * (K_{part,part} - C_{2 * part})
    complete,         ///< copies * K_{part,part}
    other
};

struct BipartitePattern
{
    BipartiteKind kind = BipartiteKind::other;
    std::size_t copies = 0;
    std::size_t part = 0;

    /// Text tag such as "4*K_2", "C_8", "K_{4,4}", "K_{4,4}-4*K_2", "2*C_4".
    std::string tag() const;
    bool operator==(const BipartitePattern &) const = default;
};

/// Classifies the bipartite graph formed by the left-right edges of g.
BipartitePattern classify_bipartite(const Graph & g, const std::vector<Vertex> & left, const std::vector<Vertex> & right);

} // namespace imprim
