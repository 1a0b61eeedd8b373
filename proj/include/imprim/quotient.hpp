#pragma once

#include "imprim/graph.hpp"
#include "imprim/permgroup.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace imprim {

using Block = std::vector<Vertex>;
using Partition = std::vector<Block>;

/// Sorts each block and orders blocks by their smallest vertex.
Partition canonical_partition(Partition partition);

/// A graph, a group acting on it, and a vertex partition claimed to be G-invariant.
/// The partition is stored in canonical form; block indices refer to that order.
struct SymmetricTriple
{
    SymmetricTriple(Graph graph, GeneratedGroup group, Partition partition);

    Graph graph;
    GeneratedGroup group;
    Partition partition;
};

struct Check
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport
{
    std::vector<Check> checks;

    bool valid() const;
    std::vector<Check> failures() const;
};

/// Disjoint cover, nontriviality, G-invariance, independent blocks, G-symmetry.
ValidationReport validate_partition(const SymmetricTriple & t);

/// Throws PreconditionError listing every failed validation check.
void require_valid(const SymmetricTriple & t);

/// Which blocks each vertex sees, and the traces B ∩ Γ(C).
struct TraceTable
{
    std::vector<std::size_t> block_of;                      ///< vertex -> block index
    std::vector<std::vector<std::size_t>> neighbour_blocks; ///< block -> Γ_B(B), sorted
    std::vector<std::vector<std::size_t>> vertex_blocks;    ///< vertex -> Γ_B(α), sorted
    std::map<std::pair<std::size_t, std::size_t>, Block> traces;

    /// B ∩ Γ(C) for adjacent blocks B, C (empty if not adjacent).
    const Block & trace(std::size_t b, std::size_t c) const;
};

TraceTable compute_traces(const Graph & g, const Partition & partition);

/// Block adjacency graph of g with respect to a partition.
Graph block_graph(const Graph & g, const Partition & partition);

struct Quotient
{
    Graph graph;
    ActionTable action; ///< G acting on block indices
};

/// Quotient graph and induced action. Requires a valid triple; throws
/// PreconditionError otherwise, or Error if the quotient is not G-symmetric.
Quotient quotient_graph(const SymmetricTriple & t);

struct Parameters
{
    std::size_t v = 0; ///< block size
    std::size_t k = 0; ///< |B ∩ Γ(C)|
    std::size_t r = 0; ///< |Γ_B(α)|
    std::size_t b = 0; ///< quotient valency
    std::size_t m = 0; ///< multiplicity of D(B)

    long p() const { return static_cast<long>(v) - static_cast<long>(k); }
    bool operator==(const Parameters &) const = default;
};

/// Computes (v, k, r, b, m), checking every block, vertex and adjacent pair.
/// Throws RepresentativeDependent when any of them varies, PreconditionError
/// when the quotient has no edge.
Parameters parameters(const SymmetricTriple & t);
Parameters parameters(const Graph & g, const Partition & partition);

struct LambdaWitness
{
    std::size_t block = 0, first = 0, second = 0;
    std::size_t value = 0;
};

struct IdentityCheck
{
    long lhs = 0, rhs = 0;
    bool holds() const { return lhs == rhs; }
};

struct LambdaReport
{
    bool constant = false;
    std::size_t lambda = 0;              ///< value on the first pair examined
    std::optional<LambdaWitness> witness; ///< first pair disagreeing with `lambda`
    bool single_pair = false;            ///< b == 2: one pair per block
    long lambda_bar = 0;                 ///< v - 2k + λ, only meaningful when constant
    IdentityCheck eq_vr;                 ///< v r = b (v - p)
    IdentityCheck eq_lambda;             ///< λ (b - 1) = (v - p)(r - 1)
    std::optional<bool> fisher;          ///< b <= v, evaluated when λ >= 1
};

/// |Γ(C) ∩ Γ(D) ∩ B| over every block and unordered pair of neighbouring blocks.
/// Throws PreconditionError if p != v - k or b < 2.
LambdaReport lambda_pairwise(const SymmetricTriple & t, long p);

enum class RefinementCase
{
    i,           ///< k_P = p and s = t
    ii,          ///< s = p c and t = k_P c
    neither,
    inapplicable ///< λ is not constant or the complements do not partition the blocks
};

std::string to_string(RefinementCase c);

struct RefinementReport
{
    Partition refined;       ///< P: the complements B \ Γ(C), canonical
    Partition hat;           ///< B-hat: indices into `refined`, one group per block of B
    std::size_t a = 0;       ///< blocks of P per block of B
    Parameters hat_parameters;
    std::size_t s = 0, t = 0;
    std::size_t k_refined = 0, b_refined = 0, r_refined = 0;
    long p = 0;
    bool quotient_correspondence = false;
    RefinementCase case_tag = RefinementCase::inapplicable;
    std::vector<Check> checks;

    bool all_checks_passed() const;
};

/// Builds P and B-hat when λ̄ = 0 and verifies the relations between the
/// parameters of (Γ, P), (Γ_P, B-hat) and (Γ, B). Throws EmptyTrace when
/// k = v and OverlappingTraces when λ̄ != 0.
RefinementReport blocks_refinement(const SymmetricTriple & t);

} // namespace imprim
