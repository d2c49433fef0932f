#pragma once

#include <string>
#include <variant>

#include "geored/reduction.hpp"

namespace geored {

/// Proper k-coloring as a CSP: one variable per vertex, a binary
/// disequality constraint per edge.
CspInstance coloring_csp(const Graph& g, int k);

/// The counting-CSP image of a graph under the bisection reduction: one
/// variable per vertex pair, one counting constraint (target n-4) per edge
/// over the 2n-4 pairs sharing exactly one endpoint with it.
CspInstance counting_instance(const Graph& g);

/// An exactly-one constraint instance over boolean variables.
CspInstance one_in_k_instance(int n, const std::vector<std::vector<int>>& constraint_scopes,
                              std::string provenance = {});

/// One-hot encoding of k-coloring into CNF: per vertex at-least-one and
/// pairwise at-most-one clauses, per edge and color a conflict clause.
Reduction reduce_kcol_to_ksat(const Graph& g, int k);

enum class OneInKVariant { paper_nae, exact_one };

/// Translation of exactly-one constraints into CNF. The paper_nae variant
/// emits the literal two-clause translation (which encodes not-all-equal);
/// exact_one emits at-least-one plus pairwise at-most-one.
Reduction reduce_oneink_to_ksat(const CspInstance& instance, OneInKVariant variant);

/// SAT to the augmenting-path search problem over a weighted formula:
/// satisfying assignments correspond to length-n improving paths from the
/// all-zero candidate, encoded in complementary bit blocks.
Reduction reduce_sat_to_maxsatstar(const CspInstance& cnf);

/// Perfect graph bisection to counting CSP over vertex pairs.
Reduction reduce_pgb_to_counting(const Graph& g);

/// The classical clause-splitting reduction of 4-CNF to 3-CNF; each
/// 4-clause gains one auxiliary variable.
Reduction reduce_foursat_to_threesat(const CspInstance& cnf);

/// The fixed 8-variable, 9-clause 4-CNF whose 3-CNF image demonstrates that
/// clause splitting preserves neither witnesses nor covers: one 4-clause
/// over (x,y,z,t) plus enforcer clauses pinning x|y and z|t.
CspInstance counterexample_4cnf();

struct ReductionOptions {
    int k = 3;
    OneInKVariant variant = OneInKVariant::exact_one;
};

/// CLI-facing reduction names: kcol-ksat, oneink-ksat, sat-maxsatstar,
/// pgb-counting, foursat-threesat, identity.
Reduction build_reduction(const std::string& name,
                          const std::variant<CspInstance, Graph>& input,
                          const ReductionOptions& options);

} // namespace geored
