#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geored/csp.hpp"
#include "geored/types.hpp"

namespace geored {

/// One representative per isomorphism class of connected graphs with
/// min_vertices..max_vertices vertices, in a fixed deterministic order.
std::vector<Graph> connected_graphs(int min_vertices, int max_vertices);

/// Seeded random exactly-one instances (distinct scopes of the given arity).
std::vector<CspInstance> random_one_in_k_suite(int count, int arity, int max_vars,
                                               std::uint64_t seed);

/// Seeded random CNF instances with n <= max_vars and m <= max_clauses,
/// filtered to satisfiable ones. Clause literals are distinct variables.
std::vector<CspInstance> random_satisfiable_cnf_suite(int count, int max_vars, int max_clauses,
                                                      int clause_len, std::uint64_t seed);

/// Fixed small CNF corpus (n <= 8) used by the cover-predicate comparison:
/// handcrafted formulas plus a seeded random batch.
std::vector<CspInstance> cover_comparison_cnf_suite();

/// Named graphs on 10 vertices whose bisection solution spaces have at
/// least two witness classes modulo sign.
struct NamedGraph {
    std::string name;
    Graph graph;
};
std::vector<NamedGraph> bisection_suite_n10();

} // namespace geored
