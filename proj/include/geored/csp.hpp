#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "geored/types.hpp"

namespace geored {

/// One literal of a boolean clause: variable index plus polarity.
struct Literal {
    int var = 0;
    bool positive = true;
    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Disjunction of literals; only meaningful on two-valued domains.
struct ClauseBody {
    std::vector<Literal> literals;
    friend bool operator==(const ClauseBody&, const ClauseBody&) = default;
};

/// Explicit list of allowed value tuples.
struct ExtensionalBody {
    std::vector<Assignment> allowed;
    friend bool operator==(const ExtensionalBody&, const ExtensionalBody&) = default;
};

/// Satisfied when the sum of the scope's labeled values (-1/0/1) is +target
/// or -target. Kept intensional: the arities used in practice make tuple
/// expansion infeasible.
struct CountingBody {
    int target = 0;
    friend bool operator==(const CountingBody&, const CountingBody&) = default;
};

using ConstraintBody = std::variant<ClauseBody, ExtensionalBody, CountingBody>;

struct Constraint {
    std::vector<int> scope;
    ConstraintBody body;
    std::optional<std::uint64_t> weight;
    friend bool operator==(const Constraint&, const Constraint&) = default;
};

enum class InstanceKind { decision, weighted_maxsat, counting_csp };

std::string to_string(InstanceKind kind);
InstanceKind instance_kind_from_string(const std::string& s);

/// A CSP instance: n variables over one finite domain plus a constraint
/// list. Immutable after construction (validate() is called by every
/// factory in this library).
struct CspInstance {
    int n = 0;
    Domain domain;
    std::vector<Constraint> constraints;
    InstanceKind kind = InstanceKind::decision;
    std::string provenance;

    /// Checks all structural invariants; throws std::invalid_argument.
    void validate() const;

    bool is_boolean_cnf() const;

    std::uint64_t candidate_count_or_throw(std::uint64_t budget) const;

    friend bool operator==(const CspInstance&, const CspInstance&) = default;
};

/// Convenience builder for plain CNF instances. Literals use 0-based
/// variable indices.
CspInstance make_cnf(int n, const std::vector<std::vector<Literal>>& clauses,
                     std::string provenance = {});

/// Weighted CNF; weights must be positive.
CspInstance make_weighted_cnf(int n,
                              const std::vector<std::pair<std::vector<Literal>, std::uint64_t>>& clauses,
                              std::string provenance = {});

/// Numeric value of a counting-domain value (0,1,2 -> -1,0,+1).
inline int counting_value(Value v) { return int(v) - 1; }

bool constraint_satisfied(const CspInstance& instance, const Constraint& c, const Assignment& a);

/// True iff every constraint is satisfied. Instance kind must be decision
/// or counting-csp.
bool evaluate(const CspInstance& instance, const Assignment& a);

/// Sum of the weights of satisfied clauses; kind must be weighted-maxsat.
std::uint64_t maxsat_weight(const CspInstance& instance, const Assignment& a);

/// All satisfying assignments in lexicographic order. Refuses (BudgetError)
/// when the candidate space k^n exceeds the budget; an unsatisfiable
/// instance yields an empty list instead.
std::vector<Assignment> enumerate_solutions(const CspInstance& instance, std::uint64_t budget);

} // namespace geored
