#include "geored/reductions.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace geored {

namespace {

Literal pos(int var) { return Literal{var, true}; }
Literal neg(int var) { return Literal{var, false}; }

std::uint64_t pow_or_throw(std::uint64_t base, int exp, std::uint64_t budget) {
    std::uint64_t count = 1;
    for (int i = 0; i < exp; ++i) {
        if (count > std::uint64_t(-1) / base) throw BudgetError(std::uint64_t(-1), budget);
        count *= base;
    }
    if (count > budget) throw BudgetError(count, budget);
    return count;
}

} // namespace

CspInstance coloring_csp(const Graph& g, int k) {
    CspInstance inst;
    inst.n = g.vertices;
    inst.domain = Domain(k);
    inst.kind = InstanceKind::decision;
    inst.provenance = "proper " + std::to_string(k) + "-coloring";
    ExtensionalBody disequal;
    for (Value a = 0; int(a) < k; ++a)
        for (Value b = 0; int(b) < k; ++b)
            if (a != b) disequal.allowed.push_back({a, b});
    for (auto [u, v] : g.edges) {
        Constraint c;
        c.scope = {u, v};
        c.body = disequal;
        inst.constraints.push_back(std::move(c));
    }
    inst.validate();
    return inst;
}

// ---------------------------------------------------------------------------
// k-COL -> k-SAT

Reduction reduce_kcol_to_ksat(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("kcol-ksat: k must be at least 2");
    const int n = g.vertices;
    auto var_of = [k](int vertex, int color) { return vertex * k + color; };

    std::vector<std::vector<Literal>> clauses;
    for (int v = 0; v < n; ++v) {
        std::vector<Literal> alo;
        for (int i = 0; i < k; ++i) alo.push_back(pos(var_of(v, i)));
        clauses.push_back(std::move(alo));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                clauses.push_back({neg(var_of(v, i)), neg(var_of(v, j))});
    }
    for (auto [u, v] : g.edges)
        for (int i = 0; i < k; ++i)
            clauses.push_back({neg(var_of(u, i)), neg(var_of(v, i))});

    CspInstance target = make_cnf(n * k, clauses, "one-hot image of a " + std::to_string(k) +
                                                      "-coloring instance");

    Reduction r;
    r.name = "kcol-ksat";
    r.source = csp_witness_side(coloring_csp(g, k), "coloring:k=" + std::to_string(k));
    r.target = csp_witness_side(target, "cnf");

    r.map_witness = [n, k, var_of](const Assignment& coloring) {
        if (int(coloring.size()) != n) throw std::invalid_argument("coloring length mismatch");
        Assignment bits(std::size_t(n) * k, 0);
        for (int v = 0; v < n; ++v) {
            if (int(coloring[v]) >= k) throw std::invalid_argument("color out of range");
            bits[var_of(v, coloring[v])] = 1;
        }
        return bits;
    };
    r.invert_witness = [n, k, var_of](const Assignment& bits) {
        if (int(bits.size()) != n * k) throw std::invalid_argument("witness length mismatch");
        Assignment coloring(n, 0);
        for (int v = 0; v < n; ++v) {
            int ones = 0;
            for (int i = 0; i < k; ++i) {
                if (bits[var_of(v, i)]) {
                    coloring[v] = Value(i);
                    ++ones;
                }
            }
            if (ones != 1) throw std::invalid_argument("witness is not one-hot per vertex");
        }
        return coloring;
    };
    r.map_cover = [n, k, var_of](const GeneralizedAssignment& lists) {
        if (int(lists.size()) != n) throw std::invalid_argument("list-coloring length mismatch");
        std::vector<ValueMask> sets(std::size_t(n) * k);
        for (int v = 0; v < n; ++v) {
            bool single = lists.is_singleton(v);
            for (int i = 0; i < k; ++i) {
                if (!lists.allows(v, Value(i))) sets[var_of(v, i)] = 1;        // {0}
                else if (single) sets[var_of(v, i)] = 2;                       // {1}
                else sets[var_of(v, i)] = 3;                                   // {0,1}
            }
        }
        return GeneralizedAssignment(std::move(sets));
    };
    r.claim = OverlapClaim::scale(Rational(2, k));
    r.claimed = {ReductionProperty::witness_isomorphic, ReductionProperty::overlap_preserving,
                 ReductionProperty::cover_preserving};
    r.target_instance = target;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < k; ++i)
            r.provenance.push_back("vertex " + std::to_string(v + 1) + " has color " +
                                   std::to_string(i));
    return r;
}

// ---------------------------------------------------------------------------
// 1-in-k -> k-SAT

CspInstance one_in_k_instance(int n, const std::vector<std::vector<int>>& constraint_scopes,
                              std::string provenance) {
    CspInstance inst;
    inst.n = n;
    inst.domain = Domain(2);
    inst.kind = InstanceKind::decision;
    inst.provenance = std::move(provenance);
    for (const auto& scope : constraint_scopes) {
        Constraint c;
        c.scope = scope;
        ExtensionalBody body;
        for (std::size_t i = 0; i < scope.size(); ++i) {
            Assignment tuple(scope.size(), 0);
            tuple[i] = 1;
            body.allowed.push_back(std::move(tuple));
        }
        c.body = std::move(body);
        inst.constraints.push_back(std::move(c));
    }
    inst.validate();
    return inst;
}

namespace {

bool is_exactly_one_body(const Constraint& c) {
    const auto* ex = std::get_if<ExtensionalBody>(&c.body);
    if (!ex) return false;
    std::size_t r = c.scope.size();
    if (ex->allowed.size() != r) return false;
    auto sorted = ex->allowed;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Assignment> expected;
    for (std::size_t i = 0; i < r; ++i) {
        Assignment tuple(r, 0);
        tuple[i] = 1;
        expected.push_back(std::move(tuple));
    }
    std::sort(expected.begin(), expected.end());
    return sorted == expected;
}

} // namespace

Reduction reduce_oneink_to_ksat(const CspInstance& instance, OneInKVariant variant) {
    instance.validate();
    if (instance.domain.k != 2 || instance.kind != InstanceKind::decision)
        throw std::invalid_argument("oneink-ksat: source must be a boolean decision instance");
    for (const auto& c : instance.constraints)
        if (!is_exactly_one_body(c))
            throw std::invalid_argument("oneink-ksat: every constraint must be an exactly-one relation");

    std::vector<std::vector<Literal>> clauses;
    for (const auto& c : instance.constraints) {
        std::vector<Literal> all_pos, all_neg;
        for (int v : c.scope) {
            all_pos.push_back(pos(v));
            all_neg.push_back(neg(v));
        }
        if (variant == OneInKVariant::paper_nae) {
            clauses.push_back(all_pos);
            clauses.push_back(all_neg);
        } else {
            clauses.push_back(all_pos);
            for (std::size_t i = 0; i < c.scope.size(); ++i)
                for (std::size_t j = i + 1; j < c.scope.size(); ++j)
                    clauses.push_back({neg(c.scope[i]), neg(c.scope[j])});
        }
    }
    CspInstance target = make_cnf(instance.n, clauses,
                                  variant == OneInKVariant::paper_nae
                                      ? "two-clause translation of exactly-one constraints"
                                      : "exact-one CNF of exactly-one constraints");

    Reduction r;
    r.name = "oneink-ksat";
    r.source = csp_witness_side(instance, "one-in-k");
    r.target = csp_witness_side(target, "cnf");
    r.map_witness = [](const Assignment& a) { return a; };
    r.invert_witness = [](const Assignment& a) { return a; };
    r.map_cover = [](const GeneralizedAssignment& g) { return g; };
    r.claim = OverlapClaim::identity();
    r.claimed = {ReductionProperty::witness_isomorphic, ReductionProperty::overlap_preserving,
                 ReductionProperty::cover_preserving};
    r.target_instance = target;
    for (int v = 0; v < instance.n; ++v)
        r.provenance.push_back("source variable " + std::to_string(v + 1));
    return r;
}

// ---------------------------------------------------------------------------
// SAT -> MAX-SAT*

Reduction reduce_sat_to_maxsatstar(const CspInstance& cnf) {
    cnf.validate();
    if (!cnf.is_boolean_cnf() || cnf.kind != InstanceKind::decision)
        throw std::invalid_argument("sat-maxsatstar: source must be a plain CNF");
    const int n = cnf.n;
    const std::uint64_t m = cnf.constraints.size();
    if (n < 1 || m < 1)
        throw std::invalid_argument("sat-maxsatstar: source needs at least one variable and clause");

    // base variables: x_i = i, b_i = n+i, gate = 2n
    const int gate = 2 * n;
    std::vector<std::pair<std::vector<Literal>, std::uint64_t>> weighted;
    for (int i = 0; i < n; ++i)
        weighted.push_back({{pos(i), pos(n + i)}, m + 1});
    for (const auto& c : cnf.constraints) {
        auto lits = std::get<ClauseBody>(c.body).literals;
        lits.push_back(pos(gate));
        weighted.push_back({std::move(lits), 1});
    }
    for (int j = 0; j < n - 1; ++j) {
        for (int i = j + 1; i < n; ++i) {
            weighted.push_back({{pos(j), pos(n + j), neg(i)}, 3 * m});
            weighted.push_back({{pos(j), pos(n + j), neg(n + i)}, 3 * m});
        }
    }
    AStarInstance astar;
    astar.base = make_weighted_cnf(2 * n + 1, weighted, "augmenting-path image of a CNF");
    astar.start = Assignment(std::size_t(2 * n + 1), 0);
    astar.bound = n;
    astar.validate();

    const FlipPositionMap layout = FlipPositionMap::maxsatstar_layout(n);
    const std::size_t encoded_length = std::size_t(n) * (2 * n + 2);
    auto shared = std::make_shared<const AStarInstance>(astar);

    Reduction r;
    r.name = "sat-maxsatstar";
    r.source = csp_witness_side(cnf, "cnf");

    WitnessSide target;
    target.kind = "maxsatstar-path";
    target.witness_length = encoded_length;
    target.domain = Domain(2);
    target.enumerate_witnesses = [shared, layout, encoded_length](std::uint64_t budget) {
        // flip sequences are bounded by (2n+1)^d candidates
        pow_or_throw(std::uint64_t(shared->base.n), shared->bound, budget);
        auto paths = exhaustive_augmenting_paths(*shared);
        std::vector<Assignment> out;
        out.reserve(paths.size());
        for (const auto& p : paths)
            out.push_back(encode_path(p, layout).padded_bits(shared->bound));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    target.is_witness = [shared, layout, encoded_length](const Assignment& bits) {
        if (bits.size() != encoded_length) return false;
        try {
            PathWitness w = decode_path(bits, shared->start, layout);
            return is_augmenting_path(*shared, w);
        } catch (const std::invalid_argument&) {
            return false;
        }
    };
    r.target = std::move(target);

    Assignment start = astar.start;
    r.map_witness = [n, layout, start](const Assignment& a) {
        if (int(a.size()) != n) throw std::invalid_argument("witness length mismatch");
        PathWitness w;
        w.start = start;
        for (int i = 0; i < n; ++i) w.flips.push_back(a[i] ? i : n + i);
        return encode_path(w, layout).padded_bits(n);
    };
    r.invert_witness = [n, layout, start](const Assignment& bits) {
        PathWitness w = decode_path(bits, start, layout);
        if (int(w.flips.size()) != n)
            throw std::invalid_argument("path does not flip every variable pair");
        Assignment a(n, 0);
        for (int i = 0; i < n; ++i) {
            if (w.flips[i] == i) a[i] = 1;
            else if (w.flips[i] == n + i) a[i] = 0;
            else throw std::invalid_argument("path flips variables out of order");
        }
        return a;
    };
    r.claim = OverlapClaim::identity();
    r.claimed = {ReductionProperty::witness_isomorphic, ReductionProperty::overlap_preserving};
    r.target_instance = astar;
    for (int i = 0; i < n; ++i) r.provenance.push_back("source variable " + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        r.provenance.push_back("shadow of source variable " + std::to_string(i + 1));
    r.provenance.push_back("auxiliary clause gate");
    return r;
}

// ---------------------------------------------------------------------------
// PGB -> counting CSP

namespace {

int pair_index(int n, int k, int l) {
    // pairs (k,l), k < l, in lexicographic order
    return k * (2 * n - k - 1) / 2 + (l - k - 1);
}

} // namespace

CspInstance counting_instance(const Graph& g) {
    const int n = g.vertices;
    CspInstance inst;
    inst.n = n * (n - 1) / 2;
    inst.domain = Domain::counting();
    inst.kind = InstanceKind::counting_csp;
    inst.provenance = "counting image of a bisection instance";
    for (auto [i, j] : g.edges) {
        Constraint c;
        for (int m = 0; m < n; ++m) {
            if (m == i || m == j) continue;
            c.scope.push_back(pair_index(n, std::min(i, m), std::max(i, m)));
            c.scope.push_back(pair_index(n, std::min(j, m), std::max(j, m)));
        }
        std::sort(c.scope.begin(), c.scope.end());
        c.body = CountingBody{n - 4};
        inst.constraints.push_back(std::move(c));
    }
    inst.validate();
    return inst;
}

Reduction reduce_pgb_to_counting(const Graph& g) {
    const int n = g.vertices;
    if (n % 2 != 0) throw std::invalid_argument("pgb-counting: vertex count must be even");
    if (n < 4) throw std::invalid_argument("pgb-counting: needs at least 4 vertices");

    auto shared_graph = std::make_shared<const Graph>(g);
    CspInstance target = counting_instance(g);

    Reduction r;
    r.name = "pgb-counting";

    WitnessSide source;
    source.kind = "pgb";
    source.witness_length = std::size_t(n);
    source.domain = Domain::sign();
    source.metric = OverlapMetricKind::mod_negation;
    source.involution = Involution::sign_flip();
    auto is_bisection = [shared_graph, n](const Assignment& s) {
        if (int(s.size()) != n) return false;
        int ones = 0;
        for (Value v : s) ones += v;
        if (ones * 2 != n) return false;
        for (auto [u, v] : shared_graph->edges)
            if (s[u] != s[v]) return false;
        return true;
    };
    source.is_witness = is_bisection;
    Involution flip = Involution::sign_flip();
    source.enumerate_witnesses = [is_bisection, flip, n](std::uint64_t budget) {
        pow_or_throw(2, n, budget);
        std::vector<Assignment> out;
        Assignment s(n, 0);
        while (true) {
            if (is_bisection(s)) {
                Assignment canon = flip.canonical(s);
                if (canon == s) out.push_back(s);
            }
            int i = n - 1;
            while (i >= 0 && s[i] == 1) s[i--] = 0;
            if (i < 0) break;
            s[i] = 1;
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto enumerate_bisections = source.enumerate_witnesses;
    source.enumerate_covers = [enumerate_bisections, flip](std::uint64_t budget) {
        auto solutions = enumerate_bisections(budget);
        if (solutions.empty()) return std::vector<GeneralizedAssignment>{};
        return cluster_cover(solutions, swap_adjacent, flip);
    };
    r.source = std::move(source);

    r.target = csp_witness_side(target, "counting");

    Involution counting_flip = Involution::counting_negation();
    r.map_witness = [n, counting_flip](const Assignment& s) {
        if (int(s.size()) != n) throw std::invalid_argument("bisection length mismatch");
        Assignment x;
        x.reserve(std::size_t(n) * (n - 1) / 2);
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l) x.push_back(Value(s[k] + s[l]));
        return counting_flip.canonical(x);
    };
    r.invert_witness = [n, flip](const Assignment& x) {
        if (int(x.size()) != n * (n - 1) / 2) throw std::invalid_argument("witness length mismatch");
        Assignment s(n, 0);
        bool s0_high = false;
        for (int l = 1; l < n; ++l)
            if (x[pair_index(n, 0, l)] == 2) s0_high = true;
        s[0] = s0_high ? 1 : 0;
        for (int l = 1; l < n; ++l) {
            int value = int(x[pair_index(n, 0, l)]) - int(s[0]);
            if (value < 0 || value > 1)
                throw std::invalid_argument("witness is not a pair image");
            s[l] = Value(value);
        }
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l)
                if (int(x[pair_index(n, k, l)]) != int(s[k]) + int(s[l]))
                    throw std::invalid_argument("witness is not a pair image");
        return flip.canonical(s);
    };
    r.map_cover = [n](const GeneralizedAssignment& c) {
        if (int(c.size()) != n) throw std::invalid_argument("cover length mismatch");
        std::vector<ValueMask> sets;
        sets.reserve(std::size_t(n) * (n - 1) / 2);
        for (int k = 0; k < n; ++k) {
            for (int l = k + 1; l < n; ++l) {
                ValueMask m = 0;
                for (Value a = 0; a < 2; ++a)
                    for (Value b = 0; b < 2; ++b)
                        if (c.allows(k, a) && c.allows(l, b)) m |= ValueMask(1) << (a + b);
                sets.push_back(m);
            }
        }
        return GeneralizedAssignment(std::move(sets));
    };
    r.claim = OverlapClaim::square();
    r.claimed = {ReductionProperty::witness_isomorphic, ReductionProperty::overlap_preserving,
                 ReductionProperty::cover_preserving};
    r.target_instance = target;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            r.provenance.push_back("vertex pair {" + std::to_string(k + 1) + "," +
                                   std::to_string(l + 1) + "}");
    if (n <= 8)
        r.notes.push_back("instance equivalence of the counting construction is only argued for "
                          "more than 8 vertices");
    return r;
}

// ---------------------------------------------------------------------------
// 4-SAT -> 3-SAT

Reduction reduce_foursat_to_threesat(const CspInstance& cnf) {
    cnf.validate();
    if (!cnf.is_boolean_cnf() || cnf.kind != InstanceKind::decision)
        throw std::invalid_argument("foursat-threesat: source must be a plain CNF");
    const int n = cnf.n;

    std::vector<std::vector<Literal>> clauses;
    // aux var per split clause; split_of records (aux, first two source literals)
    std::vector<std::pair<Literal, Literal>> split_halves;
    int aux = n;
    for (const auto& c : cnf.constraints) {
        const auto& lits = std::get<ClauseBody>(c.body).literals;
        if (lits.size() > 4)
            throw std::invalid_argument("foursat-threesat: clause longer than 4 literals");
        if (lits.size() < 4) {
            clauses.push_back(lits);
            continue;
        }
        clauses.push_back({lits[0], lits[1], pos(aux)});
        clauses.push_back({neg(aux), lits[2], lits[3]});
        split_halves.emplace_back(lits[0], lits[1]);
        ++aux;
    }
    CspInstance target = make_cnf(aux, clauses, "clause-split image of a 4-CNF");

    Reduction r;
    r.name = "foursat-threesat";
    r.source = csp_witness_side(cnf, "cnf");
    r.target = csp_witness_side(target, "cnf");

    r.map_witness = [n, aux, split_halves](const Assignment& a) {
        if (int(a.size()) != n) throw std::invalid_argument("witness length mismatch");
        Assignment out = a;
        out.resize(aux, 0);
        for (std::size_t s = 0; s < split_halves.size(); ++s) {
            auto [l1, l2] = split_halves[s];
            bool first_true = (a[l1.var] == 1) == l1.positive;
            bool second_true = (a[l2.var] == 1) == l2.positive;
            out[n + int(s)] = (!first_true && !second_true) ? 1 : 0;
        }
        return out;
    };
    r.invert_witness = [n](const Assignment& a) {
        Assignment out(a.begin(), a.begin() + n);
        return out;
    };
    r.claim = OverlapClaim::none();
    r.claimed = {};
    r.target_instance = target;
    for (int v = 0; v < n; ++v)
        r.provenance.push_back("source variable " + std::to_string(v + 1));
    for (std::size_t s = 0; s < split_halves.size(); ++s)
        r.provenance.push_back("auxiliary for split clause " + std::to_string(s + 1));
    return r;
}

CspInstance counterexample_4cnf() {
    // variables: x y z t x1 x2 x3 x4
    const int x = 0, y = 1, z = 2, t = 3, x1 = 4, x2 = 5, x3 = 6, x4 = 7;
    std::vector<std::vector<Literal>> clauses;
    clauses.push_back({pos(x), pos(y), pos(z), pos(t)});
    for (auto [a, b] : {std::pair{x, y}, std::pair{z, t}}) {
        int u = (a == x) ? x1 : x3;
        int v = (a == x) ? x2 : x4;
        clauses.push_back({pos(a), pos(b), pos(u), pos(v)});
        clauses.push_back({pos(a), pos(b), neg(u), pos(v)});
        clauses.push_back({pos(a), pos(b), pos(u), neg(v)});
        clauses.push_back({pos(a), pos(b), neg(u), neg(v)});
    }
    return make_cnf(8, clauses, "4-CNF counterexample to clause-splitting geometry preservation");
}

Reduction build_reduction(const std::string& name,
                          const std::variant<CspInstance, Graph>& input,
                          const ReductionOptions& options) {
    auto need_csp = [&]() -> const CspInstance& {
        if (const auto* inst = std::get_if<CspInstance>(&input)) return *inst;
        throw std::invalid_argument("reduction '" + name + "' expects a CSP/CNF instance input");
    };
    auto need_graph = [&]() -> const Graph& {
        if (const auto* g = std::get_if<Graph>(&input)) return *g;
        throw std::invalid_argument("reduction '" + name + "' expects a graph input");
    };
    if (name == "kcol-ksat") return reduce_kcol_to_ksat(need_graph(), options.k);
    if (name == "oneink-ksat") return reduce_oneink_to_ksat(need_csp(), options.variant);
    if (name == "sat-maxsatstar") return reduce_sat_to_maxsatstar(need_csp());
    if (name == "pgb-counting") return reduce_pgb_to_counting(need_graph());
    if (name == "foursat-threesat") return reduce_foursat_to_threesat(need_csp());
    if (name == "identity") return identity_reduction(need_csp());
    throw std::invalid_argument("unknown reduction: " + name);
}

} // namespace geored
