#include "geored/covers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace geored {

namespace {

constexpr ValueMask kBoolStar = 3; // {0,1}

bool literal_true(const Literal& l, const GeneralizedAssignment& sigma) {
    return sigma.sets[l.var] == (ValueMask(1) << (l.positive ? 1 : 0));
}

bool literal_false(const Literal& l, const GeneralizedAssignment& sigma) {
    return sigma.sets[l.var] == (ValueMask(1) << (l.positive ? 0 : 1));
}

bool satisfied_on_scope(const Constraint& c, const Assignment& scope_values) {
    if (const auto* cl = std::get_if<ClauseBody>(&c.body)) {
        for (std::size_t i = 0; i < cl->literals.size(); ++i)
            if ((scope_values[i] == 1) == cl->literals[i].positive) return true;
        return false;
    }
    if (const auto* ex = std::get_if<ExtensionalBody>(&c.body)) {
        return std::find(ex->allowed.begin(), ex->allowed.end(), scope_values) != ex->allowed.end();
    }
    const auto& cc = std::get<CountingBody>(c.body);
    int sum = 0;
    for (Value v : scope_values) sum += counting_value(v);
    return sum == cc.target || sum == -cc.target;
}

/// Can var (scope position pos) take value d in constraint c, given the
/// other scope variables' current sets?
bool has_support(const Constraint& c, const GeneralizedAssignment& sigma,
                 std::size_t pos, Value d) {
    if (const auto* cl = std::get_if<ClauseBody>(&c.body)) {
        const Literal& own = cl->literals[pos];
        if ((d == 1) == own.positive) return true; // the literal itself satisfies
        for (std::size_t i = 0; i < cl->literals.size(); ++i) {
            if (i == pos) continue;
            const Literal& l = cl->literals[i];
            if (sigma.allows(l.var, l.positive ? 1 : 0)) return true;
        }
        return false;
    }
    if (const auto* ex = std::get_if<ExtensionalBody>(&c.body)) {
        for (const auto& tuple : ex->allowed) {
            if (tuple[pos] != d) continue;
            bool ok = true;
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                if (i == pos) continue;
                if (!sigma.allows(c.scope[i], tuple[i])) { ok = false; break; }
            }
            if (ok) return true;
        }
        return false;
    }
    const auto& cc = std::get<CountingBody>(c.body);
    std::vector<ValueMask> others;
    others.reserve(c.scope.size() - 1);
    for (std::size_t i = 0; i < c.scope.size(); ++i)
        if (i != pos) others.push_back(sigma.sets[c.scope[i]]);
    auto reach = counting_reachable_sums(others);
    int r = int(others.size());
    int pinned = counting_value(d);
    for (int goal : {cc.target - pinned, -cc.target - pinned}) {
        if (goal >= -r && goal <= r && reach[goal + r]) return true;
    }
    return false;
}

/// True when no value of the constraint's own scope is eliminable; used for
/// subtree pruning once a constraint's scope is fully assigned.
bool constraint_gac_closed(const CspInstance& instance, const Constraint& c,
                           const GeneralizedAssignment& sigma) {
    for (std::size_t pos = 0; pos < c.scope.size(); ++pos) {
        int var = c.scope[pos];
        for (Value d = 0; int(d) < instance.domain.k; ++d) {
            if (!sigma.allows(var, d)) continue;
            if (!has_support(c, sigma, pos, d)) return false;
        }
    }
    return true;
}

/// Boolean cover condition 1 for one clause: a satisfying literal or two *s.
bool clause_cover_condition(const Constraint& c, const GeneralizedAssignment& sigma) {
    const auto& cl = std::get<ClauseBody>(c.body);
    int stars = 0;
    for (const auto& l : cl.literals) {
        if (literal_true(l, sigma)) return true;
        if (sigma.sets[l.var] == kBoolStar) ++stars;
    }
    return stars >= 2;
}

void require_same_length(const CspInstance& instance, const GeneralizedAssignment& sigma) {
    if (sigma.size() != std::size_t(instance.n))
        throw std::invalid_argument("generalized assignment length does not match instance");
}

} // namespace

bool is_compatible(const Assignment& a, const GeneralizedAssignment& sigma) {
    if (a.size() != sigma.size()) throw std::invalid_argument("is_compatible: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!sigma.allows(i, a[i])) return false;
    return true;
}

bool is_supported_boolean(const CspInstance& cnf, const GeneralizedAssignment& sigma, int var) {
    require_same_length(cnf, sigma);
    if (!cnf.is_boolean_cnf()) throw std::invalid_argument("is_supported_boolean: not a boolean CNF");
    if (!sigma.is_singleton(var)) throw std::invalid_argument("is_supported_boolean: variable not fixed");
    for (const auto& c : cnf.constraints) {
        const auto& cl = std::get<ClauseBody>(c.body);
        bool own_true = false;
        bool others_false = true;
        bool contains = false;
        for (const auto& l : cl.literals) {
            if (l.var == var) {
                contains = true;
                own_true = literal_true(l, sigma);
            } else if (!literal_false(l, sigma)) {
                others_false = false;
            }
        }
        if (contains && own_true && others_false) return true;
    }
    return false;
}

CoverVerdict is_cover_boolean(const CspInstance& cnf, const GeneralizedAssignment& sigma) {
    require_same_length(cnf, sigma);
    if (!cnf.is_boolean_cnf()) throw std::invalid_argument("is_cover_boolean: not a boolean CNF");
    for (std::size_t ci = 0; ci < cnf.constraints.size(); ++ci) {
        if (!clause_cover_condition(cnf.constraints[ci], sigma)) {
            CoverVerdict v;
            v.is_cover = false;
            v.failure = CoverFailure::clause_violation;
            v.constraint = int(ci);
            return v;
        }
    }
    for (int var = 0; var < cnf.n; ++var) {
        if (!sigma.is_singleton(var)) continue;
        if (!is_supported_boolean(cnf, sigma, var)) {
            CoverVerdict v;
            v.is_cover = false;
            v.failure = CoverFailure::unsupported_variable;
            v.variable = var;
            return v;
        }
    }
    return CoverVerdict::ok();
}

bool is_true_cover(const CspInstance& instance, const GeneralizedAssignment& sigma,
                   std::uint64_t budget) {
    require_same_length(instance, sigma);
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        std::uint64_t size = std::uint64_t(std::popcount(sigma.sets[i]));
        if (product > budget / size) throw BudgetError(std::uint64_t(-1), budget);
        product *= size;
    }
    if (product > budget) throw BudgetError(product, budget);

    Assignment choice(sigma.size(), 0);
    std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
        if (depth == sigma.size()) return evaluate(instance, choice);
        for (Value v = 0; int(v) < instance.domain.k; ++v) {
            if (!sigma.allows(depth, v)) continue;
            choice[depth] = v;
            if (search(depth + 1)) return true;
        }
        return false;
    };
    return search(0);
}

bool is_supported_general(const CspInstance& instance, const GeneralizedAssignment& sigma, int var) {
    require_same_length(instance, sigma);
    if (!sigma.is_singleton(var)) throw std::invalid_argument("is_supported_general: variable not fixed");
    for (const auto& c : instance.constraints) {
        auto it = std::find(c.scope.begin(), c.scope.end(), var);
        if (it == c.scope.end()) continue;
        std::size_t pos = std::size_t(it - c.scope.begin());
        bool all_singleton = true;
        Assignment tuple(c.scope.size());
        for (std::size_t i = 0; i < c.scope.size(); ++i) {
            if (!sigma.is_singleton(c.scope[i])) { all_singleton = false; break; }
            tuple[i] = sigma.singleton_value(c.scope[i]);
        }
        if (!all_singleton) continue;
        if (!satisfied_on_scope(c, tuple)) continue;
        bool all_alternatives_violate = true;
        Value own = tuple[pos];
        for (Value lambda = 0; int(lambda) < instance.domain.k; ++lambda) {
            if (lambda == own) continue;
            tuple[pos] = lambda;
            if (satisfied_on_scope(c, tuple)) { all_alternatives_violate = false; break; }
        }
        tuple[pos] = own;
        if (all_alternatives_violate) return true;
    }
    return false;
}

std::vector<char> counting_reachable_sums(const std::vector<ValueMask>& sets) {
    int r = int(sets.size());
    std::vector<char> reach(2 * r + 1, 0);
    std::vector<char> next(2 * r + 1, 0);
    reach[r] = 1; // sum 0 before any choice
    for (ValueMask m : sets) {
        if (m == 0) throw std::invalid_argument("counting: empty value set");
        std::fill(next.begin(), next.end(), 0);
        for (int s = 0; s < int(reach.size()); ++s) {
            if (!reach[s]) continue;
            for (Value v = 0; v < 3; ++v) {
                if (!((m >> v) & 1u)) continue;
                next[s + counting_value(v)] = 1;
            }
        }
        reach.swap(next);
    }
    return reach;
}

bool counting_feasible(const std::vector<ValueMask>& sets, int target) {
    if (target < 0) throw std::invalid_argument("counting: negative target");
    int r = int(sets.size());
    if (target > r) return false;
    auto reach = counting_reachable_sums(sets);
    return reach[r + target] || reach[r - target];
}

std::vector<EliminationFinding> gac_eliminable(const CspInstance& instance,
                                               const GeneralizedAssignment& sigma) {
    require_same_length(instance, sigma);
    std::vector<EliminationFinding> out;
    for (std::size_t ci = 0; ci < instance.constraints.size(); ++ci) {
        const Constraint& c = instance.constraints[ci];
        for (std::size_t pos = 0; pos < c.scope.size(); ++pos) {
            int var = c.scope[pos];
            for (Value d = 0; int(d) < instance.domain.k; ++d) {
                if (!sigma.allows(var, d)) continue;
                if (!has_support(c, sigma, pos, d))
                    out.push_back(EliminationFinding{var, d, int(ci)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CoverVerdict is_cover_general(const CspInstance& instance, const GeneralizedAssignment& sigma) {
    require_same_length(instance, sigma);
    auto eliminations = gac_eliminable(instance, sigma);
    if (!eliminations.empty()) {
        CoverVerdict v;
        v.is_cover = false;
        v.failure = CoverFailure::eliminable_value;
        v.elimination = eliminations.front();
        return v;
    }
    for (int var = 0; var < instance.n; ++var) {
        if (!sigma.is_singleton(var)) continue;
        if (!is_supported_general(instance, sigma, var)) {
            CoverVerdict v;
            v.is_cover = false;
            v.failure = CoverFailure::unsupported_variable;
            v.variable = var;
            return v;
        }
    }
    return CoverVerdict::ok();
}

CoverVerdict check_cover(const CspInstance& instance, const GeneralizedAssignment& sigma,
                         CoverPredicate predicate) {
    return predicate == CoverPredicate::boolean ? is_cover_boolean(instance, sigma)
                                                : is_cover_general(instance, sigma);
}

namespace {

struct CoverSearch {
    const CspInstance& inst;
    CoverPredicate predicate;
    std::vector<std::vector<const Constraint*>> by_last_var;
    GeneralizedAssignment current;
    std::vector<GeneralizedAssignment> out;

    CoverSearch(const CspInstance& i, CoverPredicate p)
        : inst(i), predicate(p), by_last_var(i.n) {
        for (const auto& c : inst.constraints) {
            int last = *std::max_element(c.scope.begin(), c.scope.end());
            by_last_var[last].push_back(&c);
        }
        current.sets.assign(i.n, 1);
    }

    bool prune_at(int depth) const {
        for (const Constraint* c : by_last_var[depth]) {
            if (predicate == CoverPredicate::boolean) {
                if (!clause_cover_condition(*c, current)) return true;
            } else {
                if (!constraint_gac_closed(inst, *c, current)) return true;
            }
        }
        return false;
    }

    bool supported_at_leaf() const {
        for (int var = 0; var < inst.n; ++var) {
            if (!current.is_singleton(var)) continue;
            bool ok = predicate == CoverPredicate::boolean
                          ? is_supported_boolean(inst, current, var)
                          : is_supported_general(inst, current, var);
            if (!ok) return false;
        }
        return true;
    }

    void run(int depth) {
        if (depth == inst.n) {
            if (supported_at_leaf()) out.push_back(current);
            return;
        }
        ValueMask full = inst.domain.full_mask();
        for (ValueMask m = 1; m <= full; ++m) {
            current.sets[depth] = m;
            if (!prune_at(depth)) run(depth + 1);
        }
        current.sets[depth] = 1;
    }
};

} // namespace

std::vector<GeneralizedAssignment> enumerate_covers(const CspInstance& instance,
                                                    std::uint64_t budget,
                                                    CoverPredicate predicate) {
    if (predicate == CoverPredicate::boolean && !instance.is_boolean_cnf())
        throw std::invalid_argument("enumerate_covers: boolean predicate needs a boolean CNF");
    std::uint64_t per_var = (std::uint64_t(1) << instance.domain.k) - 1;
    std::uint64_t count = 1;
    for (int i = 0; i < instance.n; ++i) {
        if (count > std::uint64_t(-1) / per_var) throw BudgetError(std::uint64_t(-1), budget);
        count *= per_var;
    }
    if (count > budget) throw BudgetError(count, budget);

    if (instance.n == 0) return {GeneralizedAssignment{}};
    CoverSearch search(instance, predicate);
    search.run(0);
    return search.out;
}

bool hamming1_adjacent(const Assignment& a, const Assignment& b) {
    if (a.size() != b.size()) return false;
    int diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i] && ++diff > 1) return false;
    }
    return diff == 1;
}

bool swap_adjacent(const Assignment& a, const Assignment& b) {
    if (a.size() != b.size()) return false;
    int first = -1, second = -1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        if (first < 0) first = int(i);
        else if (second < 0) second = int(i);
        else return false;
    }
    return second >= 0 && a[first] != a[second];
}

std::vector<GeneralizedAssignment> cluster_cover(const std::vector<Assignment>& solutions,
                                                 const AdjacencyPredicate& adjacent,
                                                 const std::optional<Involution>& involution) {
    if (solutions.empty()) throw std::invalid_argument("cluster_cover: empty solution set");

    std::vector<Assignment> nodes = solutions;
    if (involution) {
        for (auto& s : nodes) s = involution->canonical(s);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    auto linked = [&](const Assignment& a, const Assignment& b) {
        if (adjacent(a, b)) return true;
        if (involution && adjacent(a, involution->apply(b))) return true;
        return false;
    };

    std::vector<int> component(nodes.size(), -1);
    int components = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (component[i] >= 0) continue;
        int id = components++;
        std::vector<std::size_t> stack{i};
        component[i] = id;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < nodes.size(); ++j) {
                if (component[j] >= 0) continue;
                if (linked(nodes[cur], nodes[j])) {
                    component[j] = id;
                    stack.push_back(j);
                }
            }
        }
    }

    std::vector<GeneralizedAssignment> covers(components);
    std::vector<bool> started(components, false);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        int id = component[i];
        if (!started[id]) {
            covers[id] = GeneralizedAssignment::of(nodes[i]);
            started[id] = true;
        } else {
            for (std::size_t v = 0; v < nodes[i].size(); ++v)
                covers[id].sets[v] |= ValueMask(1) << nodes[i][v];
        }
    }
    // components are numbered by first (lexicographically smallest) member
    return covers;
}

CoverPredicateComparison compare_cover_predicates(const CspInstance& cnf, std::uint64_t budget) {
    if (!cnf.is_boolean_cnf())
        throw std::invalid_argument("compare_cover_predicates: needs a boolean CNF");
    std::uint64_t count = 1;
    for (int i = 0; i < cnf.n; ++i) {
        if (count > budget / 3) throw BudgetError(std::uint64_t(-1), budget);
        count *= 3;
    }
    CoverPredicateComparison report;
    report.candidates = count;

    GeneralizedAssignment sigma;
    sigma.sets.assign(cnf.n, 1);
    std::function<void(int)> scan = [&](int depth) {
        if (depth == cnf.n) {
            bool b = is_cover_boolean(cnf, sigma).is_cover;
            bool g = is_cover_general(cnf, sigma).is_cover;
            report.boolean_covers += b;
            report.general_covers += g;
            if (b != g) {
                ++report.disagreements;
                if (report.disagreement_examples.size() < 8)
                    report.disagreement_examples.push_back(sigma);
            }
            return;
        }
        for (ValueMask m = 1; m <= 3; ++m) {
            sigma.sets[depth] = m;
            scan(depth + 1);
        }
        sigma.sets[depth] = 1;
    };
    if (cnf.n > 0) scan(0);
    return report;
}

} // namespace geored
