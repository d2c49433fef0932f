#include "doctest.h"

#include <random>

#include "geored/csp.hpp"
#include "geored/io.hpp"
#include "geored/reductions.hpp"

using namespace geored;

namespace {

Literal pos(int v) { return Literal{v, true}; }
Literal neg(int v) { return Literal{v, false}; }

/// Independent oracle: flat odometer scan over the whole candidate space.
/// Deliberately shares nothing with the pruned search in the library.
std::vector<Assignment> flat_scan_solutions(const CspInstance& inst) {
    std::vector<Assignment> out;
    Assignment a(inst.n, 0);
    while (true) {
        if (evaluate(inst, a)) out.push_back(a);
        int i = inst.n - 1;
        while (i >= 0 && int(a[i]) == inst.domain.k - 1) a[i--] = 0;
        if (i < 0) break;
        a[i] = Value(a[i] + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CspInstance counting_triple(int target) {
    CspInstance inst;
    inst.n = 3;
    inst.domain = Domain::counting();
    inst.kind = InstanceKind::counting_csp;
    Constraint c;
    c.scope = {0, 1, 2};
    c.body = CountingBody{target};
    inst.constraints.push_back(c);
    inst.validate();
    return inst;
}

/// values given as labels -1/0/1
Assignment labeled(std::initializer_list<int> labels) {
    Assignment a;
    for (int l : labels) a.push_back(Value(l + 1));
    return a;
}

} // namespace

TEST_CASE("dimacs parsing") {
    CspInstance inst = parse_dimacs("p cnf 2 1\n1 -2 0\n");
    CHECK(inst.n == 2);
    CHECK(inst.kind == InstanceKind::decision);
    REQUIRE(inst.constraints.size() == 1);
    auto lits = std::get<ClauseBody>(inst.constraints[0].body).literals;
    REQUIRE(lits.size() == 2);
    CHECK(lits[0] == pos(0));
    CHECK(lits[1] == neg(1));

    CspInstance weighted = parse_dimacs("p wcnf 1 1\n5 1 0\n");
    CHECK(weighted.kind == InstanceKind::weighted_maxsat);
    CHECK(weighted.constraints[0].weight == 5);

    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);  // literal out of range
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n0\n"), ParseError);    // zero-length clause
    CHECK_THROWS_AS(parse_dimacs("p dnf 1 1\n1 0\n"), ParseError);  // malformed header
    CHECK_THROWS_AS(parse_dimacs("1 0\n"), ParseError);             // clause before header

    SUBCASE("clauses may span lines and comments are skipped") {
        CspInstance spread = parse_dimacs("c comment\np cnf 3 1\n1 2\n3 0\n");
        CHECK(std::get<ClauseBody>(spread.constraints[0].body).literals.size() == 3);
    }
}

TEST_CASE("graph parsing") {
    Graph triangle = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(triangle.vertices == 3);
    CHECK(triangle.edges.size() == 3);
    CHECK(triangle.has_edge(0, 2));

    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1\n"), ParseError); // self-loop
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n"), ParseError); // out of range

    Graph disjoint = parse_graph("p edge 4 2\ne 1 2\ne 3 4\n");
    CHECK(disjoint.edges.size() == 2);
    CHECK_FALSE(disjoint.has_edge(1, 2));

    SUBCASE("duplicate edges collapse") {
        Graph g = parse_graph("p edge 2 2\ne 1 2\ne 2 1\n");
        CHECK(g.edges.size() == 1);
    }
    SUBCASE("bare edge list with a vertex-count header") {
        Graph g = parse_graph("3\n1 2\n2 3\n");
        CHECK(g.vertices == 3);
        CHECK(g.edges.size() == 2);
    }
}

TEST_CASE("evaluate") {
    CspInstance inst = parse_dimacs("p cnf 2 1\n1 -2 0\n");
    CHECK(evaluate(inst, {1, 1}));
    CHECK(evaluate(inst, {0, 0}));
    CHECK_FALSE(evaluate(inst, {0, 1}));
    CHECK_THROWS_AS(evaluate(inst, {1}), std::invalid_argument);

    CspInstance cc1 = counting_triple(1);
    CHECK(evaluate(cc1, labeled({1, 0, 0})));        // sum 1
    CHECK_FALSE(evaluate(cc1, labeled({1, 1, 1})));  // sum 3
    CHECK(evaluate(cc1, labeled({-1, 0, 0})));       // sum -1 also counts
}

TEST_CASE("maxsat weight") {
    auto inst = make_weighted_cnf(1, {{{pos(0)}, 5}, {{neg(0)}, 3}});
    CHECK(maxsat_weight(inst, {1}) == 5);
    CHECK(maxsat_weight(inst, {0}) == 3);
    auto empty = make_weighted_cnf(1, {});
    CHECK(maxsat_weight(empty, {0}) == 0);
    CHECK_THROWS_AS(maxsat_weight(parse_dimacs("p cnf 1 1\n1 0\n"), {1}), std::invalid_argument);
}

TEST_CASE("solution enumeration") {
    CspInstance inst = parse_dimacs("p cnf 2 1\n1 2 0\n");
    auto sols = enumerate_solutions(inst, 1 << 10);
    REQUIRE(sols.size() == 3);
    CHECK(sols[0] == Assignment{0, 1});
    CHECK(sols[1] == Assignment{1, 0});
    CHECK(sols[2] == Assignment{1, 1});

    CspInstance unsat = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
    CHECK(enumerate_solutions(unsat, 1 << 10).empty());

    // budget refusal is an error, distinct from an empty answer
    CHECK_THROWS_AS(enumerate_solutions(inst, 3), BudgetError);
    try {
        enumerate_solutions(inst, 3);
    } catch (const BudgetError& e) {
        CHECK(e.required == 4);
        CHECK(e.budget == 3);
    }
}

TEST_CASE("counterexample formula solution space") {
    CspInstance phi1 = counterexample_4cnf();
    CHECK(phi1.n == 8);
    CHECK(phi1.constraints.size() == 9);

    auto sols = enumerate_solutions(phi1, 1 << 10);
    CHECK(sols.size() == 144);
    // cross-check against the independent flat scan
    CHECK(sols == flat_scan_solutions(phi1));
    for (const auto& s : sols) CHECK((s[0] == 1 || s[1] == 1)); // x or y forced
}

TEST_CASE("enumeration is sorted, duplicate-free and complete") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
        int n = 2 + int(rng() % 5);
        int m = 1 + int(rng() % 6);
        std::vector<std::vector<Literal>> clauses;
        for (int c = 0; c < m; ++c) {
            std::vector<Literal> lits;
            int len = 1 + int(rng() % 3);
            for (int i = 0; i < len; ++i) {
                int v = int(rng() % std::uint64_t(n));
                bool dup = false;
                for (const auto& l : lits) dup |= l.var == v;
                if (!dup) lits.push_back(Literal{v, (rng() & 1) == 0});
            }
            clauses.push_back(std::move(lits));
        }
        CspInstance inst = make_cnf(n, clauses);
        auto sols = enumerate_solutions(inst, 1 << 16);
        CHECK(std::is_sorted(sols.begin(), sols.end()));
        CHECK(std::adjacent_find(sols.begin(), sols.end()) == sols.end());
        CHECK(sols == flat_scan_solutions(inst));
    }
}

TEST_CASE("json round trip on all instance kinds") {
    std::vector<CspInstance> instances;
    instances.push_back(parse_dimacs("p cnf 3 2\n1 -2 0\n2 3 0\n"));
    instances.push_back(make_weighted_cnf(2, {{{pos(0), neg(1)}, 4}, {{pos(1)}, 1}}));
    instances.push_back(one_in_k_instance(4, {{0, 1, 2}, {1, 2, 3}}, "one-in-3 pair"));
    instances.push_back(counting_triple(1));
    instances.push_back(counterexample_4cnf());
    for (const auto& inst : instances) {
        CspInstance back = csp_from_json(csp_to_json(inst));
        CHECK(back == inst);
        // serialization itself is deterministic
        CHECK(csp_to_json(back) == csp_to_json(inst));
    }
}

TEST_CASE("dimacs round trip") {
    for (const char* text : {"p cnf 3 2\n1 -2 0\n2 3 0\n", "p wcnf 2 2\n4 1 -2 0\n1 2 0\n"}) {
        CspInstance inst = parse_dimacs(text);
        CHECK(parse_dimacs(to_dimacs(inst)) == inst);
        CHECK(to_dimacs(inst) == text);
    }
}

TEST_CASE("graph dimacs round trip") {
    Graph g = parse_graph("p edge 4 3\ne 1 2\ne 3 4\ne 2 3\n");
    CHECK(parse_graph(to_dimacs(g)) == g);
}

TEST_CASE("instance validation rejects broken structures") {
    CHECK_THROWS_AS(Domain(1), std::invalid_argument);
    CHECK_THROWS_AS(Domain(2, std::vector<std::string>{"a"}), std::invalid_argument);
    CHECK_THROWS_AS(Domain(2, std::vector<std::string>{"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(make_cnf(1, {{pos(0), neg(0)}}), std::invalid_argument); // repeated scope var
    CHECK_THROWS_AS(make_cnf(1, {{pos(1)}}), std::invalid_argument);         // out of range

    CspInstance bad = counting_triple(1);
    bad.domain = Domain(3); // drop the -1/0/1 labels
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
