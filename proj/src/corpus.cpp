#include "geored/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "geored/reductions.hpp"

namespace geored {

namespace {

/// Canonical form of a graph on n vertices: the lexicographically smallest
/// edge list over all vertex permutations. n stays at most 5 here.
std::vector<std::pair<int, int>> canonical_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> best;
    bool first = true;
    do {
        std::vector<std::pair<int, int>> mapped;
        mapped.reserve(edges.size());
        for (auto [u, v] : edges) {
            int a = perm[u], b = perm[v];
            mapped.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(mapped.begin(), mapped.end());
        if (first || mapped < best) {
            best = std::move(mapped);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool graph_connected(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 0) return false;
    std::vector<int> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [a, b] : edges) {
            int other = -1;
            if (a == u) other = b;
            else if (b == u) other = a;
            if (other >= 0 && !seen[other]) {
                seen[other] = 1;
                stack.push_back(other);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

} // namespace

std::vector<Graph> connected_graphs(int min_vertices, int max_vertices) {
    std::vector<Graph> out;
    for (int n = min_vertices; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> all_pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
        std::vector<std::vector<std::pair<int, int>>> classes;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << all_pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < all_pairs.size(); ++i)
                if ((mask >> i) & 1) edges.push_back(all_pairs[i]);
            if (!graph_connected(n, edges)) continue;
            auto canon = canonical_edges(n, edges);
            if (canon != edges) continue; // keep only canonical representatives
            classes.push_back(std::move(edges));
        }
        std::sort(classes.begin(), classes.end(),
                  [](const auto& a, const auto& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a < b;
                  });
        for (auto& edges : classes) out.emplace_back(n, std::move(edges));
    }
    return out;
}

std::vector<CspInstance> random_one_in_k_suite(int count, int arity, int max_vars,
                                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CspInstance> out;
    for (int idx = 0; idx < count; ++idx) {
        int n = arity + int(rng() % std::uint64_t(max_vars - arity + 1));
        int m = 1 + int(rng() % std::uint64_t(n));
        std::vector<std::vector<int>> scopes;
        for (int c = 0; c < m; ++c) {
            std::vector<int> vars(n);
            std::iota(vars.begin(), vars.end(), 0);
            for (int i = 0; i < arity; ++i) {
                int j = i + int(rng() % std::uint64_t(n - i));
                std::swap(vars[i], vars[j]);
            }
            scopes.push_back({vars.begin(), vars.begin() + arity});
        }
        out.push_back(one_in_k_instance(n, scopes,
                                        "seeded one-in-" + std::to_string(arity) + " #" +
                                            std::to_string(idx)));
    }
    return out;
}

std::vector<CspInstance> random_satisfiable_cnf_suite(int count, int max_vars, int max_clauses,
                                                      int clause_len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CspInstance> out;
    while (int(out.size()) < count) {
        int n = clause_len + int(rng() % std::uint64_t(std::max(1, max_vars - clause_len + 1)));
        n = std::min(n, max_vars);
        int m = 1 + int(rng() % std::uint64_t(max_clauses));
        std::vector<std::vector<Literal>> clauses;
        for (int c = 0; c < m; ++c) {
            std::vector<int> vars(n);
            std::iota(vars.begin(), vars.end(), 0);
            std::vector<Literal> lits;
            int len = std::min(n, clause_len);
            for (int i = 0; i < len; ++i) {
                int j = i + int(rng() % std::uint64_t(n - i));
                std::swap(vars[i], vars[j]);
                lits.push_back(Literal{vars[i], (rng() & 1) == 0});
            }
            clauses.push_back(std::move(lits));
        }
        CspInstance inst = make_cnf(n, clauses, "seeded cnf #" + std::to_string(out.size()));
        if (!enumerate_solutions(inst, std::uint64_t(1) << 20).empty())
            out.push_back(std::move(inst));
    }
    return out;
}

std::vector<CspInstance> cover_comparison_cnf_suite() {
    std::vector<CspInstance> out;
    auto lit = [](int v, bool p) { return Literal{v, p}; };

    out.push_back(make_cnf(2, {{lit(0, true), lit(1, true)}}, "single 2-clause"));
    out.push_back(make_cnf(2,
                           {{lit(0, true), lit(1, true)},
                            {lit(0, true), lit(1, false)},
                            {lit(0, false), lit(1, true)}},
                           "three 2-clauses"));
    out.push_back(make_cnf(1, {{lit(0, true)}, {lit(0, false)}}, "unsatisfiable unit pair"));
    out.push_back(make_cnf(3,
                           {{lit(0, true), lit(1, true), lit(2, true)},
                            {lit(0, false), lit(1, false)},
                            {lit(0, false), lit(2, false)},
                            {lit(1, false), lit(2, false)}},
                           "exact-one over three variables"));
    out.push_back(counterexample_4cnf());

    auto seeded = random_satisfiable_cnf_suite(8, 8, 10, 3, 0x9e3779b97f4a7c15ull);
    out.insert(out.end(), seeded.begin(), seeded.end());
    return out;
}

std::vector<NamedGraph> bisection_suite_n10() {
    auto clique = [](Graph& g, const std::vector<int>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
    };
    std::vector<NamedGraph> out;
    {
        Graph g;
        g.vertices = 10;
        clique(g, {0, 1, 2, 3});
        clique(g, {4, 5, 6, 7});
        g.canonicalize();
        out.push_back({"two-k4-two-isolated", std::move(g)});
    }
    {
        Graph g;
        g.vertices = 10;
        clique(g, {0, 1, 2});
        clique(g, {3, 4, 5});
        clique(g, {6, 7});
        clique(g, {8, 9});
        g.canonicalize();
        out.push_back({"two-k3-two-k2", std::move(g)});
    }
    {
        Graph g;
        g.vertices = 10;
        clique(g, {0, 1, 2});
        clique(g, {3, 4});
        clique(g, {5, 6});
        clique(g, {7, 8});
        g.canonicalize();
        out.push_back({"k3-three-k2-one-isolated", std::move(g)});
    }
    {
        Graph g;
        g.vertices = 10;
        clique(g, {0, 1, 2, 3});
        clique(g, {4, 5});
        clique(g, {6, 7});
        g.canonicalize();
        out.push_back({"k4-two-k2-two-isolated", std::move(g)});
    }
    return out;
}

} // namespace geored
