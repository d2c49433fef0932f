#include "doctest.h"

#include "geored/io.hpp"
#include "geored/overlap.hpp"
#include "geored/reductions.hpp"

using namespace geored;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

constexpr std::uint64_t kBudget = std::uint64_t(1) << 20;

/// Soundness checks shared by every reduction: images are witnesses, the
/// inverse undoes the map, and the cover map extends the witness map.
void check_soundness(const Reduction& r) {
    auto witnesses = r.source.enumerate_witnesses(kBudget);
    for (const auto& y : witnesses) {
        Assignment image = r.map_witness(y);
        CHECK(r.target.is_witness(image));
        CHECK(r.invert_witness(image) == y);
        if (r.map_cover)
            CHECK(r.map_cover(GeneralizedAssignment::of(y)) == GeneralizedAssignment::of(image));
    }
}

} // namespace

TEST_CASE("coloring csp") {
    CspInstance csp = coloring_csp(triangle(), 3);
    CHECK(csp.n == 3);
    CHECK(csp.constraints.size() == 3);
    auto colorings = enumerate_solutions(csp, kBudget);
    CHECK(colorings.size() == 6); // 3! proper colorings of a triangle
}

TEST_CASE("kcol to ksat") {
    Reduction r = reduce_kcol_to_ksat(triangle(), 3);
    const auto& target = std::get<CspInstance>(r.target_instance);
    CHECK(target.n == 9);
    // 3 at-least-one + 9 at-most-one + 9 edge conflicts
    CHECK(target.constraints.size() == 21);

    auto colorings = r.source.enumerate_witnesses(kBudget);
    auto solutions = enumerate_solutions(target, kBudget);
    CHECK(colorings.size() == 6);
    CHECK(solutions.size() == 6);
    check_soundness(r);

    SUBCASE("one-hot images differ in two positions per differing vertex") {
        Reduction edge = reduce_kcol_to_ksat(Graph(2, {{0, 1}}), 3);
        Assignment c1 = {0, 1}, c2 = {0, 2};
        CHECK(hamming_distance(edge.map_witness(c1), edge.map_witness(c2)) == 2);
    }
    SUBCASE("all-colors list coloring maps to the all-star assignment") {
        auto image = r.map_cover(GeneralizedAssignment::full(3, 3));
        CHECK(image == GeneralizedAssignment::full(9, 2));
    }
    SUBCASE("a singleton list pins the one-hot block") {
        GeneralizedAssignment lists(std::vector<ValueMask>{0b001, 0b111, 0b111});
        auto image = r.map_cover(lists);
        CHECK(image.sets[0] == 2); // vertex 1 color 0 -> {1}
        CHECK(image.sets[1] == 1);
        CHECK(image.sets[2] == 1);
        CHECK(image.sets[3] == 3);
    }
    SUBCASE("claimed overlap map is the 2/k scale") {
        CHECK(r.claim == OverlapClaim::scale(Rational(2, 3)));
    }
}

TEST_CASE("one-in-k to ksat") {
    CspInstance source = one_in_k_instance(3, {{0, 1, 2}});

    SUBCASE("exact-one variant preserves the solution set") {
        Reduction r = reduce_oneink_to_ksat(source, OneInKVariant::exact_one);
        const auto& target = std::get<CspInstance>(r.target_instance);
        auto source_solutions = enumerate_solutions(source, kBudget);
        auto target_solutions = enumerate_solutions(target, kBudget);
        CHECK(source_solutions == target_solutions);
        REQUIRE(source_solutions.size() == 3);
        check_soundness(r);
    }
    SUBCASE("the literal two-clause translation admits more solutions") {
        Reduction r = reduce_oneink_to_ksat(source, OneInKVariant::paper_nae);
        const auto& target = std::get<CspInstance>(r.target_instance);
        CHECK(target.constraints.size() == 2);
        CHECK(enumerate_solutions(source, kBudget).size() == 3);
        CHECK(enumerate_solutions(target, kBudget).size() == 6); // all but 000 and 111
    }
    SUBCASE("non-exactly-one sources are rejected") {
        CspInstance bad = parse_dimacs("p cnf 2 1\n1 2 0\n");
        CHECK_THROWS_AS(reduce_oneink_to_ksat(bad, OneInKVariant::exact_one),
                        std::invalid_argument);
    }
}

TEST_CASE("sat to maxsatstar") {
    SUBCASE("single positive unit clause") {
        CspInstance phi = parse_dimacs("p cnf 1 1\n1 0\n");
        Reduction r = reduce_sat_to_maxsatstar(phi);
        const auto& astar = std::get<AStarInstance>(r.target_instance);
        CHECK(astar.base.n == 3);
        CHECK(astar.bound == 1);
        CHECK(astar.start == Assignment{0, 0, 0});

        Assignment image = r.map_witness({1});
        CHECK(image.size() == 4); // one block of length 2n+2
        CHECK(r.target.is_witness(image));
        check_soundness(r);
    }
    SUBCASE("hamming identity and exact overlap preservation") {
        CspInstance phi = parse_dimacs("p cnf 3 2\n1 2 0\n2 -3 0\n");
        Reduction r = reduce_sat_to_maxsatstar(phi);
        auto witnesses = r.source.enumerate_witnesses(kBudget);
        REQUIRE(witnesses.size() >= 2);
        int n = phi.n;
        for (std::size_t i = 0; i < witnesses.size(); ++i) {
            for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
                auto a = r.map_witness(witnesses[i]);
                auto b = r.map_witness(witnesses[j]);
                CHECK(hamming_distance(a, b) ==
                      std::size_t(2 * n + 2) * hamming_distance(witnesses[i], witnesses[j]));
                CHECK(overlap(a, b) == overlap(witnesses[i], witnesses[j]));
            }
        }
        check_soundness(r);
    }
    SUBCASE("the canonical path is augmenting for every witness") {
        CspInstance phi = parse_dimacs("p cnf 2 2\n1 2 0\n-1 2 0\n");
        Reduction r = reduce_sat_to_maxsatstar(phi);
        const auto& astar = std::get<AStarInstance>(r.target_instance);
        FlipPositionMap layout = FlipPositionMap::maxsatstar_layout(phi.n);
        for (const auto& y : r.source.enumerate_witnesses(kBudget)) {
            PathWitness w = decode_path(r.map_witness(y), astar.start, layout);
            CHECK(is_augmenting_path(astar, w));
        }
    }
    SUBCASE("weighted sources are rejected") {
        auto weighted = make_weighted_cnf(1, {{{Literal{0, true}}, 1}});
        CHECK_THROWS_AS(reduce_sat_to_maxsatstar(weighted), std::invalid_argument);
    }
}

TEST_CASE("pgb to counting") {
    SUBCASE("two disjoint edges on four vertices") {
        Graph g(4, {{0, 1}, {2, 3}});
        Reduction r = reduce_pgb_to_counting(g);
        CHECK_FALSE(r.notes.empty()); // small-n validity warning
        const auto& target = std::get<CspInstance>(r.target_instance);
        CHECK(target.n == 6);
        CHECK(target.constraints.size() == 2);
        CHECK(std::get<CountingBody>(target.constraints[0].body).target == 0);

        auto witnesses = r.source.enumerate_witnesses(kBudget);
        REQUIRE(witnesses.size() == 1); // one bisection class
        CHECK(evaluate(target, r.map_witness(witnesses[0])));
        check_soundness(r);

        auto covers = r.source.enumerate_covers(kBudget);
        REQUIRE(covers.size() == 1);
        CHECK(covers[0].is_assignment()); // singleton cluster
    }
    SUBCASE("all-star cover maps to all three values everywhere") {
        Graph g(4, {{0, 1}, {2, 3}});
        Reduction r = reduce_pgb_to_counting(g);
        auto image = r.map_cover(GeneralizedAssignment::full(4, 2));
        CHECK(image == GeneralizedAssignment::full(6, 3));
    }
    SUBCASE("one edge plus eight isolated vertices") {
        Graph g(10, {{0, 1}});
        Reduction r = reduce_pgb_to_counting(g);
        CHECK(r.notes.empty());
        const auto& target = std::get<CspInstance>(r.target_instance);
        auto witnesses = r.source.enumerate_witnesses(kBudget);
        CHECK(witnesses.size() > 1);
        std::vector<Assignment> images;
        for (const auto& y : witnesses) {
            Assignment image = r.map_witness(y);
            CHECK(evaluate(target, image));
            CHECK(r.invert_witness(image) == y);
            images.push_back(std::move(image));
        }
        std::sort(images.begin(), images.end());
        CHECK(std::adjacent_find(images.begin(), images.end()) == images.end()); // injective
    }
    SUBCASE("sign quotient makes the map well defined") {
        Graph g(4, {{0, 1}, {2, 3}});
        Reduction r = reduce_pgb_to_counting(g);
        Assignment f = {0, 0, 1, 1};
        Assignment minus_f = {1, 1, 0, 0};
        CHECK(r.map_witness(f) == r.map_witness(minus_f));
    }
    SUBCASE("odd vertex counts are rejected") {
        CHECK_THROWS_AS(reduce_pgb_to_counting(Graph(5, {})), std::invalid_argument);
    }
}

TEST_CASE("foursat to threesat") {
    SUBCASE("a four-clause splits in two") {
        CspInstance phi = parse_dimacs("p cnf 4 1\n1 2 3 4 0\n");
        Reduction r = reduce_foursat_to_threesat(phi);
        const auto& target = std::get<CspInstance>(r.target_instance);
        CHECK(target.n == 5);
        REQUIRE(target.constraints.size() == 2);
        auto first = std::get<ClauseBody>(target.constraints[0].body).literals;
        auto second = std::get<ClauseBody>(target.constraints[1].body).literals;
        CHECK(first == std::vector<Literal>{{0, true}, {1, true}, {4, true}});
        CHECK(second == std::vector<Literal>{{4, false}, {2, true}, {3, true}});
        check_soundness(r);
    }
    SUBCASE("short clauses pass through unchanged") {
        CspInstance phi = parse_dimacs("p cnf 3 2\n1 -2 0\n2 3 0\n");
        Reduction r = reduce_foursat_to_threesat(phi);
        CHECK(std::get<CspInstance>(r.target_instance).constraints == phi.constraints);
        CHECK(r.map_witness({1, 0, 1}) == Assignment{1, 0, 1});
    }
    SUBCASE("the counterexample image has nine auxiliaries") {
        Reduction r = reduce_foursat_to_threesat(counterexample_4cnf());
        const auto& target = std::get<CspInstance>(r.target_instance);
        CHECK(target.n == 17);
        CHECK(target.constraints.size() == 18);
        check_soundness(r);
    }
    SUBCASE("clauses longer than four literals are rejected") {
        CspInstance wide = parse_dimacs("p cnf 5 1\n1 2 3 4 5 0\n");
        CHECK_THROWS_AS(reduce_foursat_to_threesat(wide), std::invalid_argument);
    }
}

TEST_CASE("identity and composition") {
    CspInstance source = one_in_k_instance(3, {{0, 1, 2}});
    Reduction r = reduce_oneink_to_ksat(source, OneInKVariant::exact_one);
    Reduction id_source = identity_reduction_on(r.source, source);
    Reduction id_target = identity_reduction_on(r.target, r.target_instance);

    Reduction left = compose(id_source, r);
    Reduction right = compose(r, id_target);
    auto witnesses = r.source.enumerate_witnesses(kBudget);
    auto covers = r.source.enumerate_covers(kBudget);
    for (const auto& y : witnesses) {
        CHECK(left.map_witness(y) == r.map_witness(y));
        CHECK(right.map_witness(y) == r.map_witness(y));
        CHECK(left.invert_witness(r.map_witness(y)) == y);
    }
    for (const auto& z : covers) {
        CHECK(left.map_cover(z) == r.map_cover(z));
        CHECK(right.map_cover(z) == r.map_cover(z));
    }
    CHECK(left.claim == r.claim);
    CHECK(right.claim == r.claim);

    SUBCASE("kind mismatches are rejected") {
        CspInstance other = parse_dimacs("p cnf 2 1\n1 2 0\n");
        Reduction foursat = reduce_foursat_to_threesat(other);
        CHECK_THROWS_AS(compose(r, foursat), std::invalid_argument);
    }

    SUBCASE("composition through maxsatstar is associative pointwise") {
        CspInstance cnf = std::get<CspInstance>(r.target_instance);
        Reduction to_path = reduce_sat_to_maxsatstar(cnf);
        Reduction ab_c = compose(compose(id_source, r), to_path);
        Reduction a_bc = compose(id_source, compose(r, to_path));
        for (const auto& y : witnesses) {
            CHECK(ab_c.map_witness(y) == a_bc.map_witness(y));
            CHECK(ab_c.invert_witness(ab_c.map_witness(y)) == y);
        }
        CHECK(ab_c.claim == a_bc.claim);
    }
}

TEST_CASE("symbolic overlap-claim composition") {
    auto idc = OverlapClaim::identity();
    auto half = OverlapClaim::scale(Rational(1, 2));
    auto third = OverlapClaim::scale(Rational(1, 3));
    auto sq = OverlapClaim::square();
    CHECK(compose_claims(idc, half) == half);
    CHECK(compose_claims(half, idc) == half);
    CHECK(compose_claims(half, third) == OverlapClaim::scale(Rational(1, 6)));
    CHECK(compose_claims(sq, idc) == sq);
    CHECK(compose_claims(idc, sq) == sq);
    CHECK(compose_claims(sq, half) == OverlapClaim::none());
    CHECK(compose_claims(OverlapClaim::none(), idc) == OverlapClaim::none());
}

TEST_CASE("reduction registry") {
    CHECK_THROWS_AS(build_reduction("unknown", counterexample_4cnf(), {}), std::invalid_argument);
    CHECK_THROWS_AS(build_reduction("kcol-ksat", counterexample_4cnf(), {}), std::invalid_argument);
    CHECK_THROWS_AS(build_reduction("sat-maxsatstar", Graph(2, {{0, 1}}), {}),
                    std::invalid_argument);
    Reduction r = build_reduction("foursat-threesat", counterexample_4cnf(), {});
    CHECK(r.name == "foursat-threesat");
}
