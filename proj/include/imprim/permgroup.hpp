#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace imprim {

using Point = std::uint32_t;

/// Default cap on the number of group elements any enumeration may produce.
inline constexpr std::size_t default_bound = 1'000'000;

/// A bijection of {0, ..., degree-1}, stored as its image array: x maps to images()[x].
class Permutation
{
public:
    Permutation() = default;

    /// Throws std::invalid_argument unless `images` is a bijection.
    explicit Permutation(std::vector<Point> images);

    static Permutation identity(std::size_t degree);

    /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
    static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>> & cycles);

    std::size_t degree() const noexcept { return images_.size(); }
    Point operator()(Point x) const { return images_[x]; }
    const std::vector<Point> & images() const noexcept { return images_; }
    bool is_identity() const noexcept;

    auto operator<=>(const Permutation &) const = default;

private:
    std::vector<Point> images_;
};

struct PermutationHash
{
    std::size_t operator()(const Permutation & p) const noexcept;
};

/// Product convention used everywhere: compose(p, q) applies q first, then p.
Permutation compose(const Permutation & p, const Permutation & q);
Permutation inverse(const Permutation & p);

/// p∘q when q is present, otherwise p⁻¹. Throws std::invalid_argument on degree mismatch.
Permutation compose_inverse(const Permutation & p, const std::optional<Permutation> & q = std::nullopt);

/// A permutation group given by generators. The full element list is
/// computed on first use and shared between copies.
class GeneratedGroup
{
public:
    GeneratedGroup(std::size_t degree, std::vector<Permutation> generators);

    /// Wraps an already closed element set. The elements double as the generating set.
    static GeneratedGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

    static GeneratedGroup trivial(std::size_t degree);

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Permutation> & generators() const noexcept { return generators_; }

    /// Sorted element list; enumerated (and cached) on first call.
    const std::vector<Permutation> & elements(std::size_t bound = default_bound) const;
    std::size_t order(std::size_t bound = default_bound) const { return elements(bound).size(); }
    bool has_cached_elements() const;

private:
    struct Cache
    {
        std::mutex mutex;
        std::optional<std::vector<Permutation>> elements;
    };

    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::shared_ptr<Cache> cache_;
};

struct Enumeration
{
    std::vector<Permutation> elements;
    std::size_t order = 0;
};

/// Breadth-first closure under the generators, sorted by image sequence.
/// Throws ExceedsBound once more than `bound` elements have been found.
Enumeration enumerate_group(const GeneratedGroup & group, std::size_t bound = default_bound);

std::vector<Point> orbit(const GeneratedGroup & group, Point point);

/// All orbits, each sorted, listed by smallest element.
std::vector<std::vector<Point>> orbits(const GeneratedGroup & group);

/// True iff the group is transitive on ordered k-tuples of distinct points of
/// `domain`. k = 0 is trivially true. Throws NotInvariant if a generator moves
/// a domain point outside the domain.
bool is_k_transitive(const GeneratedGroup & group, std::span<const Point> domain, std::size_t k);

/// Largest k <= max_k for which the group is k-transitive on `domain`.
std::size_t transitivity_degree(const GeneratedGroup & group, std::span<const Point> domain, std::size_t max_k);

enum class StabilizerMode
{
    point,
    setwise,
    pointwise
};

GeneratedGroup stabilizer(const GeneratedGroup & group, std::span<const Point> target, StabilizerMode mode,
    std::size_t bound = default_bound);

/// A group acting on {0, ..., domain_size-1}; row i is the action of generator i.
class ActionTable
{
public:
    ActionTable(GeneratedGroup group, std::size_t domain_size, std::vector<std::vector<Point>> rows);

    std::size_t domain_size() const noexcept { return domain_size_; }
    const GeneratedGroup & group() const noexcept { return group_; }
    const std::vector<std::vector<Point>> & rows() const noexcept { return rows_; }
    Point image(std::size_t generator, Point x) const { return rows_[generator][x]; }

    /// The permutation group on the domain generated by the rows.
    GeneratedGroup image_group() const;

    /// Checks that generators -> rows extends to a homomorphism: no group
    /// element may be reached with two different actions.
    bool is_homomorphism(std::size_t bound = default_bound) const;

private:
    GeneratedGroup group_;
    std::size_t domain_size_;
    std::vector<std::vector<Point>> rows_;
};

/// Action on a setwise-invariant domain, relabelled 0.. in ascending order of `domain`.
ActionTable restricted_action(const GeneratedGroup & group, std::span<const Point> domain);

/// Action on block indices; throws NotInvariant naming the generator that splits a block.
ActionTable block_action(const GeneratedGroup & group, const std::vector<std::vector<Point>> & blocks);

struct InducedAction
{
    ActionTable action;
    GeneratedGroup kernel; ///< elements fixing every block setwise
};

InducedAction induced_action(const GeneratedGroup & group, const std::vector<std::vector<Point>> & blocks,
    std::size_t bound = default_bound);

/// Searches for rho with rho(x^g) = rho(x)^g for every generator g, via
/// diagonal orbits on domain1 x domain2. Returns rho as an image array over
/// the first domain, or nothing if the domains differ in size or no such map exists.
std::optional<std::vector<Point>> equivariant_bijection(const ActionTable & first, const ActionTable & second);

} // namespace imprim
