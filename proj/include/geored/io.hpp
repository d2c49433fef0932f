#pragma once

#include <iosfwd>
#include <string>

#include "geored/csp.hpp"
#include "geored/types.hpp"

namespace geored {

/// Parses DIMACS CNF ("p cnf n m") or weighted CNF ("p wcnf n m"). Negative
/// integers are negated variables; every clause ends with 0. Weighted input
/// yields a weighted-maxsat instance.
CspInstance parse_dimacs(std::istream& in);
CspInstance parse_dimacs(const std::string& text);

/// DIMACS CNF/WCNF text for a boolean clause instance.
std::string to_dimacs(const CspInstance& instance);

/// Parses "p edge n m" with "e u v" lines, or a bare edge list whose first
/// line is the vertex count. Duplicate edges collapse; self-loops are
/// errors. Vertices are 1-based in the format, 0-based in memory.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

std::string to_dimacs(const Graph& g);

/// JSON schema {n, domain:{k, labels}, constraints:[{scope, body, weight?}], kind}.
CspInstance csp_from_json(const std::string& text);
std::string csp_to_json(const CspInstance& instance);

/// Digits for k <= 10, else comma-separated values.
std::string assignment_to_string(const Assignment& a, const Domain& domain);
Assignment assignment_from_string(const std::string& s, const Domain& domain, int n);

/// Boolean generalized assignments render over {0,1,*}; other domains use
/// per-variable label sets such as {-1,0}.
std::string generalized_to_string(const GeneralizedAssignment& g, const Domain& domain);
GeneralizedAssignment generalized_from_string(const std::string& s, const Domain& domain, int n);

/// JSON form of a cover: an array of per-variable value-label lists.
std::string cover_to_json(const GeneralizedAssignment& g, const Domain& domain);
GeneralizedAssignment cover_from_json(const std::string& text, const Domain& domain, int n);

struct PathWitness;

/// JSON form {start, flips} of a path witness over a boolean candidate space.
std::string path_to_json(const PathWitness& w);
PathWitness path_from_json(const std::string& text);

} // namespace geored
