#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "geored/csp.hpp"
#include "geored/types.hpp"

namespace geored {

/// A value that some constraint rules out by consistency.
struct EliminationFinding {
    int var = 0;
    Value value = 0;
    int constraint_index = 0;
    friend bool operator==(const EliminationFinding&, const EliminationFinding&) = default;
    friend auto operator<=>(const EliminationFinding&, const EliminationFinding&) = default;
};

enum class CoverFailure { none, eliminable_value, unsupported_variable, clause_violation };

struct CoverVerdict {
    bool is_cover = false;
    CoverFailure failure = CoverFailure::none;
    std::optional<EliminationFinding> elimination; // failure = eliminable_value
    std::optional<int> variable;                   // failure = unsupported_variable
    std::optional<int> constraint;                 // failure = clause_violation

    static CoverVerdict ok() { return CoverVerdict{true, CoverFailure::none, {}, {}, {}}; }
};

/// True iff a's value lies in sigma's set at every variable.
bool is_compatible(const Assignment& a, const GeneralizedAssignment& sigma);

/// Boolean support: some clause has v's literal true while every other
/// literal is assigned FALSE. A * set does not count as FALSE.
bool is_supported_boolean(const CspInstance& cnf, const GeneralizedAssignment& sigma, int var);

/// Cover predicate for boolean CNF: every clause has a satisfying literal
/// or at least two * literals, and every fixed variable is supported.
CoverVerdict is_cover_boolean(const CspInstance& cnf, const GeneralizedAssignment& sigma);

/// True iff some assignment drawn from sigma's sets satisfies the instance.
/// Refuses when the compatible product space exceeds the budget.
bool is_true_cover(const CspInstance& instance, const GeneralizedAssignment& sigma,
                   std::uint64_t budget);

/// General-domain support: some constraint has an all-singleton scope that
/// satisfies it, and every alternative value at var violates it.
bool is_supported_general(const CspInstance& instance, const GeneralizedAssignment& sigma, int var);

/// Whether some choice from each set (values over the -1/0/1 domain) sums
/// to +target or -target. Dynamic program over the reachable-sum range.
bool counting_feasible(const std::vector<ValueMask>& sets, int target);

/// Reachable sums of one choice per set, as flags indexed by sum + r.
std::vector<char> counting_reachable_sums(const std::vector<ValueMask>& sets);

/// All (var, value, constraint) triples where no choice from the other
/// scope sets extends var=value to satisfy the constraint. Sorted by
/// (var, value, constraint).
std::vector<EliminationFinding> gac_eliminable(const CspInstance& instance,
                                               const GeneralizedAssignment& sigma);

/// Cover predicate for general domains: no eliminable value and every
/// singleton variable supported.
CoverVerdict is_cover_general(const CspInstance& instance, const GeneralizedAssignment& sigma);

enum class CoverPredicate { boolean, general };

CoverVerdict check_cover(const CspInstance& instance, const GeneralizedAssignment& sigma,
                         CoverPredicate predicate);

/// All generalized assignments passing the chosen cover predicate, in
/// lexicographic order of per-variable mask sequences. Refuses when the
/// (2^k - 1)^n candidate space exceeds the budget.
std::vector<GeneralizedAssignment> enumerate_covers(const CspInstance& instance,
                                                    std::uint64_t budget,
                                                    CoverPredicate predicate);

using AdjacencyPredicate = std::function<bool(const Assignment&, const Assignment&)>;

/// Neighbors differing in exactly one position.
bool hamming1_adjacent(const Assignment& a, const Assignment& b);

/// Bisection swap move: exactly two positions differ and they held opposite
/// values, i.e. one vertex from each side switches sides.
bool swap_adjacent(const Assignment& a, const Assignment& b);

/// Partitions the solutions into connected components under the adjacency
/// relation (after canonicalizing modulo the involution, when given) and
/// returns the pointwise union of each component's value sets, ordered by
/// each component's smallest member.
std::vector<GeneralizedAssignment> cluster_cover(const std::vector<Assignment>& solutions,
                                                 const AdjacencyPredicate& adjacent,
                                                 const std::optional<Involution>& involution);

/// Side-by-side result of the boolean and general cover predicates over the
/// full candidate space of one CNF instance.
struct CoverPredicateComparison {
    std::uint64_t candidates = 0;
    std::uint64_t boolean_covers = 0;
    std::uint64_t general_covers = 0;
    std::uint64_t disagreements = 0;
    std::vector<GeneralizedAssignment> disagreement_examples; // at most 8
};

CoverPredicateComparison compare_cover_predicates(const CspInstance& cnf, std::uint64_t budget);

} // namespace geored
