#pragma once

#include "imprim/permgroup.hpp"
#include "imprim/quotient.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace imprim {

/// Points {0..point_count-1} and a multiset of blocks. Blocks are sorted
/// lists and the multiset is kept in lexicographic order. Optional labels
/// travel with their blocks and record where each block came from.
class IncidenceStructure
{
public:
    IncidenceStructure() = default;

    /// Throws std::invalid_argument on out-of-range or repeated points in a
    /// block, or if `labels` is non-empty and not parallel to `blocks`.
    IncidenceStructure(std::size_t point_count, std::vector<Block> blocks, std::vector<std::uint32_t> labels = {});

    std::size_t point_count() const noexcept { return point_count_; }
    const std::vector<Block> & blocks() const noexcept { return blocks_; }
    const std::vector<std::uint32_t> & labels() const noexcept { return labels_; }
    bool has_labels() const noexcept { return ! labels_.empty(); }

    /// Replaces every block by its complement in the point set.
    IncidenceStructure complement() const;

    /// Points become the blocks (in canonical order); the block for original
    /// point x is labelled x.
    IncidenceStructure dual() const;

    /// Renames point x to map[x].
    IncidenceStructure relabel_points(const std::vector<Point> & map) const;

    /// Compares points and blocks; labels are ignored.
    bool operator==(const IncidenceStructure & other) const
    {
        return point_count_ == other.point_count_ && blocks_ == other.blocks_;
    }

private:
    std::size_t point_count_ = 0;
    std::vector<Block> blocks_;
    std::vector<std::uint32_t> labels_;
};

enum class DesignKind
{
    base,          ///< points B, blocks B ∩ Γ(C)
    complement,    ///< blocks B \ Γ(C)
    dual,          ///< points Γ_B(B), blocks Γ_B(α)
    complement_dual ///< blocks Γ_B(B) \ Γ_B(α)
};

/// Local incidence structure at `block`. Points are positions within the
/// sorted block (or within the sorted list Γ_B(B) for the dual kinds); labels
/// name the neighbouring block (or vertex) each design block comes from.
IncidenceStructure design_from_triple(const SymmetricTriple & t, std::size_t block, DesignKind kind);

struct DesignParameters
{
    std::size_t t = 0;
    std::size_t v = 0;           ///< points
    std::size_t k = 0;           ///< block size
    std::size_t lambda = 0;      ///< blocks through each t-subset
    std::size_t block_count = 0;
    std::size_t replication = 0; ///< blocks through each point

    bool operator==(const DesignParameters &) const = default;
};

/// Parameters if every block has the same size and every t-subset of points
/// lies in the same number of blocks; nothing otherwise.
std::optional<DesignParameters> is_t_design(const IncidenceStructure & d, std::size_t t);

/// Largest structure design_isomorphic() will search.
inline constexpr std::size_t isomorphism_point_limit = 40;

struct DesignIsomorphism
{
    std::vector<Point> points;       ///< point x of the first maps to points[x]
    std::vector<std::size_t> blocks; ///< block i of the first maps to blocks[i]
};

/// Backtracking search for an incidence- and multiplicity-preserving
/// bijection. Throws TooLarge above isomorphism_point_limit points.
std::optional<DesignIsomorphism> design_isomorphic(const IncidenceStructure & first, const IncidenceStructure & second);

/// Every point permutation preserving the block multiset. Throws TooLarge as
/// above and ExceedsBound past `bound` automorphisms.
std::vector<Permutation> design_automorphisms(const IncidenceStructure & d, std::size_t bound = default_bound);

struct AutomorphismReport
{
    std::size_t group_order = 0;
    bool point_two_transitive = false;
    bool block_transitive = false; ///< on distinct blocks
    bool flag_transitive = false;  ///< on incident (point, distinct block) pairs
};

/// Throws NotAutomorphism naming the first generator that does not permute
/// the block multiset.
AutomorphismReport two_transitive_automorphism_check(const IncidenceStructure & d, const GeneratedGroup & group,
    std::size_t bound = default_bound);

} // namespace imprim
