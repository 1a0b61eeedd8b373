#pragma once

#include "imprim/design.hpp"
#include "imprim/graph.hpp"
#include "imprim/permgroup.hpp"
#include "imprim/quotient.hpp"

#include <optional>
#include <string>
#include <vector>

namespace imprim {

struct CatalogInfo
{
    std::string key;
    std::string kind; ///< triple, design or graph
    std::string description;
};

/// Fixed keys; chain-N and affine-N-M stand for families.
std::vector<CatalogInfo> catalog_listing();

/// Concrete triple keys (chain-4 stands in for the family).
std::vector<std::string> catalog_triple_keys();

struct CatalogEntry
{
    std::string kind;
    std::optional<SymmetricTriple> triple;
    std::optional<IncidenceStructure> design;
    std::optional<Graph> graph;
    std::optional<GeneratedGroup> group; ///< acting group for designs and graphs
};

/// Throws std::invalid_argument on an unknown key.
CatalogEntry catalog_lookup(const std::string & key);

/// Generators of the symmetric group on n points: a transposition and an n-cycle.
GeneratedGroup symmetric_group(std::size_t n);

/// Rotation and reflection of the n-cycle 0..n-1.
GeneratedGroup dihedral_group(std::size_t n);

/// Lines {i, i+1, i+3} mod 7.
IncidenceStructure fano_plane();

} // namespace imprim
