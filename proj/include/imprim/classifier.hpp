#pragma once

#include "imprim/design.hpp"
#include "imprim/graph.hpp"
#include "imprim/permgroup.hpp"
#include "imprim/quotient.hpp"

#include <optional>
#include <string>
#include <vector>

namespace imprim {

enum class Mode
{
    theorem1, ///< any odd prime p, necessary conditions only
    p3,       ///< p = 3, necessary and sufficient
    p5        ///< p = 5, necessary and sufficient
};

std::string to_string(Mode mode);
/// Accepts "theorem1", "p3", "p5"; throws std::invalid_argument otherwise.
Mode parse_mode(const std::string & text);

struct Evidence
{
    std::string name;
    bool passed = false;
    bool mandatory = true; ///< informational entries never decide a match
    std::string detail;
};

/// Orders and transitivity degrees observed at the first block B.
struct Fingerprints
{
    std::size_t group_order = 0;
    std::size_t block_stabilizer_order = 0;  ///< |G_B|
    std::size_t on_block_order = 0;          ///< |G_B^B|
    std::size_t on_block_transitivity = 0;   ///< capped at 3
    std::size_t on_neighbours_order = 0;     ///< |G_B^{Γ_B(B)}|
    std::size_t on_neighbours_transitivity = 0;
    std::size_t kernel_order = 0;            ///< |G_(B)|, elements fixing every block
    std::size_t quotient_group_order = 0;    ///< |G / G_(B)|
    std::optional<bool> equivariant_bijection; ///< B <-> Γ_B(B); only tried when v = b
};

struct RefinementSummary
{
    std::string case_tag;
    bool checks_passed = false;
    std::size_t a = 0, s = 0, t = 0;
    std::vector<std::string> failed_checks;
};

struct StructureFacts
{
    long valency = 0;
    bool quotient_cycle = false;
    std::string pair_pattern;   ///< Γ[B, C] for the first adjacent pair
    bool pair_copies = false;   ///< Γ is a disjoint union of isomorphic Γ[B, C]
    std::optional<bool> one_missing_block; ///< each vertex misses exactly one neighbouring block
    std::optional<DesignParameters> dual_design;            ///< dual of D(B) as a 2-design
    std::optional<DesignParameters> complement_dual_design; ///< complement of that dual
    std::optional<DesignParameters> complement_design;      ///< complement of D(B) as a 2-design
    std::optional<RefinementSummary> refinement;            ///< when λ̄ = 0 and k < v
    std::optional<bool> gamma2_recovered; ///< when r = 2, λ = 1: Γ equals the 2-path graph it induces
};

struct Identities
{
    IdentityCheck vr_bk;
    std::optional<IdentityCheck> eq_vr;     ///< v r = b (v - p)
    std::optional<IdentityCheck> eq_lambda; ///< λ (b - 1) = (v - p)(r - 1)
    std::optional<bool> fisher;             ///< b <= v when λ >= 1
    bool m_divides_r_and_b = false;
};

struct ClassificationReport
{
    long p = 0;
    std::size_t vertex_count = 0;
    std::size_t block_count = 0;
    Parameters parameters;
    std::optional<LambdaReport> lambda;
    Identities identities;
    bool quotient_2at = false;
    std::vector<Evidence> hypotheses;
    Fingerprints fingerprints;
    StructureFacts structure;

    // filled by classify()
    std::optional<Mode> mode;
    std::string matched_case = "none"; ///< a-f or none
    std::vector<std::string> matches;  ///< every matching row label
    std::vector<Evidence> evidence;
    std::optional<bool> iff_consistent; ///< p3 / p5 only, when the hypotheses hold

    bool hypotheses_hold() const;
    /// (v, b, r, λ) when λ is constant.
    std::optional<std::vector<long>> vbrl() const;
};

bool is_prime(long n);

/// Case-independent analysis. Throws PreconditionError if the triple is
/// invalid or p != v - k, and ExceedsBound from group enumeration.
ClassificationReport analyze_triple(const SymmetricTriple & t, long p, std::size_t bound = default_bound);

/// Matches the report against the case rows of the given mode. Throws
/// PreconditionError if mode p3 / p5 is used with another prime.
ClassificationReport classify(ClassificationReport report, Mode mode);

/// Mode chosen from p: p3 for 3, p5 for 5, theorem1 otherwise.
Mode default_mode(long p);

struct FRow
{
    long p = 0, a = 0, s = 0;
    long v = 0, b = 0, r = 0, lambda = 0;

    bool operator==(const FRow &) const = default;
};

/// The row for (p, a, s) if it meets every divisibility and range condition.
std::optional<FRow> f_row(long p, long a, long s);

/// All (a, s) with 2 <= a <= p-1, 1 <= s <= a-1 meeting the conditions,
/// sorted by (a, s). Throws PreconditionError unless p is an odd prime.
std::vector<FRow> feasible_f_rows(long p);

/// Rows listed for s = 1 and s = 2, built from their closed formulas.
/// Each returns nothing when the side conditions fail.
std::optional<FRow> alternating_row(long p);             ///< a = (p+1)/2, s = 1
std::optional<FRow> affine2_row(long n, long m);         ///< p = 2^n - 1, a = 2^m, s = 1
std::optional<FRow> projective_line_row(long p, long a); ///< a - 1 divides p - 1, s = 1
std::optional<FRow> affine3_row(long n, long j);         ///< p = (3^n - 1)/2, a = 3^j, s = 2
std::optional<FRow> projective_row(long n, long a);      ///< p = 2^(n-1) - 1, s = 2
/// Replication of the dual design in the affine2 row: (2^n - 1)(2^m - 1).
long affine2_replication(long n, long m);

} // namespace imprim
