#include "geored/csp.hpp"

#include <algorithm>
#include <stdexcept>

namespace geored {

void Graph::canonicalize() {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::string to_string(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::decision: return "decision";
        case InstanceKind::weighted_maxsat: return "weighted-maxsat";
        case InstanceKind::counting_csp: return "counting-csp";
    }
    throw std::logic_error("unreachable");
}

InstanceKind instance_kind_from_string(const std::string& s) {
    if (s == "decision") return InstanceKind::decision;
    if (s == "weighted-maxsat") return InstanceKind::weighted_maxsat;
    if (s == "counting-csp") return InstanceKind::counting_csp;
    throw ParseError("unknown instance kind: " + s);
}

namespace {

std::size_t body_arity(const ConstraintBody& body, const std::vector<int>& scope) {
    if (const auto* cl = std::get_if<ClauseBody>(&body)) return cl->literals.size();
    if (const auto* ex = std::get_if<ExtensionalBody>(&body)) {
        return ex->allowed.empty() ? scope.size() : ex->allowed.front().size();
    }
    return scope.size(); // counting: any arity >= 1
}

} // namespace

void CspInstance::validate() const {
    if (n < 0) throw std::invalid_argument("instance: negative variable count");
    for (const auto& c : constraints) {
        if (c.scope.empty()) throw std::invalid_argument("constraint: empty scope");
        std::set<int> seen;
        for (int v : c.scope) {
            if (v < 0 || v >= n) throw std::invalid_argument("constraint: scope variable out of range");
            if (!seen.insert(v).second) throw std::invalid_argument("constraint: repeated scope variable");
        }
        if (c.scope.size() != body_arity(c.body, c.scope))
            throw std::invalid_argument("constraint: scope length does not match body arity");
        if (c.weight && *c.weight == 0) throw std::invalid_argument("constraint: zero weight");

        if (const auto* cl = std::get_if<ClauseBody>(&c.body)) {
            if (domain.k != 2) throw std::invalid_argument("clause constraint on a non-boolean domain");
            for (std::size_t i = 0; i < cl->literals.size(); ++i) {
                if (cl->literals[i].var != c.scope[i])
                    throw std::invalid_argument("clause literals must list the scope variables in order");
            }
        } else if (const auto* ex = std::get_if<ExtensionalBody>(&c.body)) {
            if (ex->allowed.empty()) throw std::invalid_argument("extensional constraint: empty allowed set");
            for (const auto& tuple : ex->allowed) {
                if (tuple.size() != c.scope.size())
                    throw std::invalid_argument("extensional constraint: tuple arity mismatch");
                for (Value v : tuple)
                    if (int(v) >= domain.k)
                        throw std::invalid_argument("extensional constraint: tuple value out of domain");
            }
        } else if (const auto* cc = std::get_if<CountingBody>(&c.body)) {
            if (!domain.is_counting_labels())
                throw std::invalid_argument("counting constraint requires the -1/0/1 labeled domain");
            if (cc->target < 0) throw std::invalid_argument("counting constraint: negative target");
        }
    }
    if (kind == InstanceKind::weighted_maxsat) {
        for (const auto& c : constraints)
            if (!c.weight) throw std::invalid_argument("weighted-maxsat instance with an unweighted constraint");
    }
    if (kind == InstanceKind::counting_csp) {
        for (const auto& c : constraints)
            if (!std::holds_alternative<CountingBody>(c.body))
                throw std::invalid_argument("counting-csp instance with a non-counting constraint");
    }
}

bool CspInstance::is_boolean_cnf() const {
    if (domain.k != 2) return false;
    for (const auto& c : constraints)
        if (!std::holds_alternative<ClauseBody>(c.body)) return false;
    return true;
}

std::uint64_t CspInstance::candidate_count_or_throw(std::uint64_t budget) const {
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) {
        if (count > std::uint64_t(-1) / std::uint64_t(domain.k))
            throw BudgetError(std::uint64_t(-1), budget);
        count *= std::uint64_t(domain.k);
    }
    if (count > budget) throw BudgetError(count, budget);
    return count;
}

CspInstance make_cnf(int n, const std::vector<std::vector<Literal>>& clauses, std::string provenance) {
    CspInstance inst;
    inst.n = n;
    inst.domain = Domain(2);
    inst.kind = InstanceKind::decision;
    inst.provenance = std::move(provenance);
    for (const auto& lits : clauses) {
        Constraint c;
        for (const auto& l : lits) c.scope.push_back(l.var);
        c.body = ClauseBody{lits};
        inst.constraints.push_back(std::move(c));
    }
    inst.validate();
    return inst;
}

CspInstance make_weighted_cnf(int n,
                              const std::vector<std::pair<std::vector<Literal>, std::uint64_t>>& clauses,
                              std::string provenance) {
    CspInstance inst;
    inst.n = n;
    inst.domain = Domain(2);
    inst.kind = InstanceKind::weighted_maxsat;
    inst.provenance = std::move(provenance);
    for (const auto& [lits, w] : clauses) {
        Constraint c;
        for (const auto& l : lits) c.scope.push_back(l.var);
        c.body = ClauseBody{lits};
        c.weight = w;
        inst.constraints.push_back(std::move(c));
    }
    inst.validate();
    return inst;
}

bool constraint_satisfied(const CspInstance& instance, const Constraint& c, const Assignment& a) {
    if (a.size() != std::size_t(instance.n))
        throw std::invalid_argument("assignment length does not match instance");
    if (const auto* cl = std::get_if<ClauseBody>(&c.body)) {
        for (const auto& l : cl->literals)
            if ((a[l.var] == 1) == l.positive) return true;
        return false;
    }
    if (const auto* ex = std::get_if<ExtensionalBody>(&c.body)) {
        Assignment tuple(c.scope.size());
        for (std::size_t i = 0; i < c.scope.size(); ++i) tuple[i] = a[c.scope[i]];
        return std::find(ex->allowed.begin(), ex->allowed.end(), tuple) != ex->allowed.end();
    }
    const auto& cc = std::get<CountingBody>(c.body);
    int sum = 0;
    for (int v : c.scope) sum += counting_value(a[v]);
    return sum == cc.target || sum == -cc.target;
}

bool evaluate(const CspInstance& instance, const Assignment& a) {
    if (instance.kind == InstanceKind::weighted_maxsat)
        throw std::invalid_argument("evaluate: weighted instances use maxsat_weight");
    for (const auto& c : instance.constraints)
        if (!constraint_satisfied(instance, c, a)) return false;
    return true;
}

std::uint64_t maxsat_weight(const CspInstance& instance, const Assignment& a) {
    if (instance.kind != InstanceKind::weighted_maxsat)
        throw std::invalid_argument("maxsat_weight requires a weighted-maxsat instance");
    std::uint64_t total = 0;
    for (const auto& c : instance.constraints)
        if (constraint_satisfied(instance, c, a)) total += *c.weight;
    return total;
}

namespace {

/// Depth-first lexicographic enumeration. Constraints are checked as soon
/// as their deepest scope variable is assigned, which prunes dead subtrees
/// without changing the emitted order.
struct SolutionSearch {
    const CspInstance& inst;
    std::vector<std::vector<const Constraint*>> by_last_var;
    Assignment current;
    std::vector<Assignment> out;

    explicit SolutionSearch(const CspInstance& i) : inst(i), by_last_var(i.n) {
        for (const auto& c : inst.constraints) {
            int last = *std::max_element(c.scope.begin(), c.scope.end());
            by_last_var[last].push_back(&c);
        }
        current.assign(inst.n, 0);
    }

    void run(int depth) {
        if (depth == inst.n) {
            out.push_back(current);
            return;
        }
        for (Value v = 0; int(v) < inst.domain.k; ++v) {
            current[depth] = v;
            bool ok = true;
            for (const Constraint* c : by_last_var[depth]) {
                if (!constraint_satisfied(inst, *c, current)) { ok = false; break; }
            }
            if (ok) run(depth + 1);
        }
        current[depth] = 0;
    }
};

} // namespace

std::vector<Assignment> enumerate_solutions(const CspInstance& instance, std::uint64_t budget) {
    if (instance.kind == InstanceKind::weighted_maxsat)
        throw std::invalid_argument("enumerate_solutions: weighted instances have no decision semantics");
    instance.candidate_count_or_throw(budget);
    if (instance.n == 0) {
        // the empty assignment either satisfies everything or nothing applies
        std::vector<Assignment> out;
        Assignment empty;
        if (evaluate(instance, empty)) out.push_back(empty);
        return out;
    }
    SolutionSearch search(instance);
    search.run(0);
    return search.out;
}

} // namespace geored
