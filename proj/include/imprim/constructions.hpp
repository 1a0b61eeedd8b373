#pragma once

#include "imprim/design.hpp"
#include "imprim/graph.hpp"
#include "imprim/permgroup.hpp"
#include "imprim/quotient.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace imprim {

struct ThreeArcOrbit
{
    SArc representative;      ///< smallest member
    std::vector<SArc> members; ///< sorted
    bool self_paired = false;  ///< the reverse of a member is a member
};

/// Orbits of the group on the 3-arcs of sigma, sorted by representative.
/// Throws NotAutomorphism if a generator is not an automorphism of sigma.
std::vector<ThreeArcOrbit> three_arc_orbits(const Graph & sigma, const GeneratedGroup & group);

/// A graph built on arcs or 2-paths of another graph, with its natural partition.
struct LiftedGraph
{
    Graph graph;
    Partition partition;
    std::vector<SArc> vertices; ///< what each vertex stands for
};

/// The 3-arc graph: vertices are the arcs of sigma in lexicographic order,
/// (x, y) ~ (x', y') iff (y, x, x', y') is in delta; blocks group arcs by
/// their first vertex. Throws NotSelfPaired.
LiftedGraph three_arc_graph(const Graph & sigma, const ThreeArcOrbit & delta);

/// The 2-path graph: vertices are 2-paths stored as (end, middle, end) with
/// ends increasing, ordered by (middle, end, end). Two 2-paths sharing an edge
/// are adjacent iff the 3-arc glued along that edge lies in delta; blocks
/// group 2-paths by middle vertex. Throws NotSelfPaired, NotRegular.
LiftedGraph gamma2_graph(const Graph & sigma, const ThreeArcOrbit & delta);

/// Perfect matching (x, y) ~ (y, x) on the arcs of sigma.
LiftedGraph arc_pair_graph(const Graph & sigma);

/// Action of the group on the vertices of a lifted graph. 2-paths (three
/// entries) are read up to reversal.
GeneratedGroup lift_group(const GeneratedGroup & group, const std::vector<SArc> & vertices);

/// Convenience wrappers pairing a lifted graph with the lifted group.
SymmetricTriple arc_pair_triple(const Graph & sigma, const GeneratedGroup & group);
SymmetricTriple three_arc_triple(const Graph & sigma, const GeneratedGroup & group, const ThreeArcOrbit & delta);
SymmetricTriple gamma2_triple(const Graph & sigma, const GeneratedGroup & group, const ThreeArcOrbit & delta);

/// n blocks of six around a cycle: the first half of block i is matched to
/// the second half of block i+1. The group is generated by the block rotation,
/// a 3-cycle inside each half and a reflection swapping halves.
SymmetricTriple matched_cycle_chain(long n);

/// GF(2^n) for 2 <= n <= 8, elements as bit vectors of polynomial coefficients.
class BinaryField
{
public:
    /// Uses the built-in irreducible polynomial unless `modulus` is given.
    /// Throws std::invalid_argument on a bad degree or a reducible modulus.
    explicit BinaryField(unsigned n, std::optional<std::uint32_t> modulus = std::nullopt);

    static std::uint32_t default_modulus(unsigned n);
    static bool is_irreducible(std::uint32_t poly);

    unsigned degree() const noexcept { return n_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t size() const noexcept { return std::uint32_t{1} << n_; }

    std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return x ^ y; }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;
    /// Throws std::domain_error for zero.
    std::uint32_t inv(std::uint32_t x) const;
    std::uint32_t multiplicative_order(std::uint32_t x) const;
    /// Smallest generator of the multiplicative group.
    std::uint32_t primitive_element() const;

private:
    unsigned n_;
    std::uint32_t modulus_;
};

struct AffineDesignOptions
{
    std::optional<std::uint32_t> modulus;
    /// Additive basis of the subgroup H; defaults to the first n-m monomials.
    std::optional<std::vector<std::uint32_t>> subspace_basis;
};

struct AffineDesign
{
    IncidenceStructure design;
    GeneratedGroup group; ///< translations and multiplication by a primitive element
};

/// Points GF(2^n); blocks are the complements of the distinct sets cH + d
/// (c nonzero) for an additive subgroup H of order 2^(n-m).
/// Throws std::invalid_argument unless 2 <= n <= 8 and 1 <= m <= n-1.
AffineDesign affine_orbit_design(unsigned n, unsigned m, const AffineDesignOptions & options = {});

} // namespace imprim
