// Acceptance suite: one pass/fail line per criterion, driven at desk scale
// entirely by brute-force oracles. The CLI binary path must be passed as
// argv[1] for the determinism criterion.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "geored/corpus.hpp"
#include "geored/covers.hpp"
#include "geored/io.hpp"
#include "geored/overlap.hpp"
#include "geored/reductions.hpp"
#include "geored/verify.hpp"

using namespace geored;
namespace fs = std::filesystem;

namespace {

int checks_failed = 0;

struct Criterion {
    std::string label;
    bool ok = true;
    std::vector<std::string> details;

    explicit Criterion(std::string l) : label(std::move(l)) {}

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            ++checks_failed;
            std::string line = "FAILED: " + what;
            if (details.empty() || details.back() != line) details.push_back(std::move(line));
        }
    }
    void note(const std::string& what) { details.push_back(what); }
};

Budgets acceptance_budgets() {
    Budgets b;
    b.witnesses = std::uint64_t(1) << 20;
    b.source_covers = std::uint64_t(1) << 20;
    b.target_covers = std::uint64_t(1) << 25; // 3^15 target cover spaces fit
    return b;
}

// --------------------------------------------------------------------------

Criterion criterion1_counterexample() {
    Criterion crit{"counterexample reproduction (4-SAT to 3-SAT)"};
    CspInstance phi1 = counterexample_4cnf();
    crit.require(phi1.n == 8, "source has 8 variables");
    crit.require(phi1.constraints.size() == 9, "source has 9 clauses");

    auto source_solutions = enumerate_solutions(phi1, std::uint64_t(1) << 10);
    crit.require(source_solutions.size() == 144, "source has exactly 144 solutions");

    Reduction split = reduce_foursat_to_threesat(phi1);
    const auto& phi2 = std::get<CspInstance>(split.target_instance);
    auto image_solutions = enumerate_solutions(phi2, std::uint64_t(1) << 20);
    crit.require(image_solutions.size() > source_solutions.size(),
                 "image has strictly more solutions");
    crit.require(image_solutions.size() == 18432, "image solution count matches frozen value");

    auto wi = check_witness_isomorphism(split, acceptance_budgets());
    crit.require(wi.verdict == Verdict::fails, "witness isomorphism fails");

    auto covers = enumerate_covers(phi1, std::uint64_t(1) << 16, CoverPredicate::boolean);
    crit.require(covers.size() == 1, "source cover count matches frozen value (trivial cover only)");
    crit.require(covers[0] == GeneralizedAssignment::full(8, 2), "the only cover is all-star");

    GeneralizedAssignment claimed = GeneralizedAssignment::full(std::size_t(phi2.n), 2);
    claimed.sets[0] = 2; // x = 1
    claimed.sets[2] = 2; // z = 1
    CoverVerdict verdict = is_cover_boolean(phi2, claimed);
    crit.note(std::string("claimed image cover (x=1, z=1, rest *) verdict: ") +
              (verdict.is_cover ? "is a cover" : "is NOT a cover"));
    if (!verdict.is_cover && verdict.failure == CoverFailure::unsupported_variable)
        crit.note("  reason: variable " + std::to_string(*verdict.variable) +
                  " is fixed but unsupported");
    return crit;
}

// --------------------------------------------------------------------------

Criterion criterion2_kcol() {
    Criterion crit{"k-COL to k-SAT on all connected graphs with at most 5 vertices, k=3"};
    Budgets budgets = acceptance_budgets();
    auto suite = connected_graphs(1, 5);
    crit.note("graphs (one per isomorphism class): " + std::to_string(suite.size()));

    std::size_t overlap_profiles = 0;
    std::size_t endpoint_one_seen = 0;
    std::size_t membership_failures = 0;
    std::string first_membership_failure;

    for (std::size_t gi = 0; gi < suite.size(); ++gi) {
        const Graph& g = suite[gi];
        Reduction r = reduce_kcol_to_ksat(g, 3);
        std::string id = "graph#" + std::to_string(gi) + "(n=" + std::to_string(g.vertices) + ")";

        auto wi = check_witness_isomorphism(r, budgets);
        crit.require(wi.verdict == Verdict::holds, id + ": witness isomorphism holds");
        crit.require(wi.source_count == wi.target_count,
                     id + ": coloring count equals target solution count");

        auto profile = collect_overlap_pairs(r, budgets.witnesses);
        if (!profile.empty()) {
            ++overlap_profiles;
            auto ov = check_overlap_preservation(profile, r.claim, Tolerance::exact_mode());
            crit.require(ov.functional == Verdict::holds, id + ": overlap profile functional");
            crit.require(ov.monotone == Verdict::holds, id + ": overlap profile monotone");
            crit.require(ov.fitted_scale == Rational(2, 3), id + ": fitted scale is 2/3");
            if (ov.endpoint_one != Verdict::not_applicable) {
                ++endpoint_one_seen;
                crit.require(ov.endpoint_one == Verdict::fails,
                             id + ": h(1)=1 endpoint violation is reported");
            }
        }

        auto cover = check_cover_preservation(r, budgets);
        crit.require(cover.extends_witness_map == Verdict::holds,
                     id + ": cover map extends the witness map");
        crit.require(cover.bijection != Verdict::partial,
                     id + ": cover bijection was checked exhaustively on both sides");
        if (cover.membership == Verdict::fails) {
            ++membership_failures;
            if (first_membership_failure.empty() && cover.membership_counterexample) {
                first_membership_failure =
                    id + ": witness " +
                    assignment_to_string(cover.membership_counterexample->witness,
                                         r.source.domain) +
                    ", cover " +
                    generalized_to_string(cover.membership_counterexample->cover,
                                          r.source.domain) +
                    " -> " + cover.membership_counterexample->reason;
            }
        }
        // the stated requirement: every compatible source cover maps to a
        // compatible target cover
        crit.require(cover.membership == Verdict::holds,
                     id + ": every list-coloring cover maps to a compatible target cover");
    }
    crit.note("graphs with nonempty overlap profiles: " + std::to_string(overlap_profiles));
    crit.note("graphs realizing source overlap 1 (endpoint reported): " +
              std::to_string(endpoint_one_seen));
    if (membership_failures > 0) {
        crit.note("cover membership (item 3) failed on " + std::to_string(membership_failures) +
                  " graphs; first counterexample:");
        crit.note("  " + first_membership_failure);
    }
    return crit;
}

// --------------------------------------------------------------------------

Criterion criterion3_oneink() {
    Criterion crit{"1-in-3 to 3-SAT on 50 seeded random instances"};
    Budgets budgets = acceptance_budgets();
    auto suite = random_one_in_k_suite(50, 3, 12, 20240817);

    std::size_t compared_cover_sets = 0;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        const CspInstance& source = suite[i];
        std::string id = "oneink#" + std::to_string(i) + "(n=" + std::to_string(source.n) + ")";
        Reduction r = reduce_oneink_to_ksat(source, OneInKVariant::exact_one);
        const auto& target = std::get<CspInstance>(r.target_instance);

        auto source_solutions = enumerate_solutions(source, budgets.witnesses);
        auto target_solutions = enumerate_solutions(target, budgets.witnesses);
        crit.require(source_solutions == target_solutions, id + ": solution sets identical");

        auto wi = check_witness_isomorphism(r, budgets);
        crit.require(wi.verdict == Verdict::holds, id + ": witness isomorphism holds");

        auto profile = collect_overlap_pairs(r, budgets.witnesses);
        auto ov = check_overlap_preservation(profile, OverlapClaim::identity(),
                                             Tolerance::exact_mode());
        if (!profile.empty()) {
            crit.require(ov.verdict == Verdict::holds && ov.max_claim_deviation == Rational(0),
                         id + ": overlap profile exactly diagonal");
        }

        if (source.n <= 8) {
            ++compared_cover_sets;
            auto source_covers = enumerate_covers(source, budgets.source_covers,
                                                  CoverPredicate::general);
            auto target_covers = enumerate_covers(target, budgets.source_covers,
                                                  CoverPredicate::boolean);
            crit.require(source_covers == target_covers,
                         id + ": cover sets identical under the identity map");
        }
    }
    crit.note("instances with exhaustive cover-set comparison (n <= 8): " +
              std::to_string(compared_cover_sets));

    CspInstance single = one_in_k_instance(3, {{0, 1, 2}});
    Reduction nae = reduce_oneink_to_ksat(single, OneInKVariant::paper_nae);
    auto wi = check_witness_isomorphism(nae, budgets);
    crit.require(wi.verdict == Verdict::fails && wi.source_count == 3 && wi.target_count == 6,
                 "literal two-clause variant fails witness isomorphism (3 vs 6 solutions)");
    return crit;
}

// --------------------------------------------------------------------------

Criterion criterion4_maxsatstar() {
    Criterion crit{"SAT to MAX-SAT* on a fixed satisfiable suite (n <= 5, m <= 8)"};
    Budgets budgets = acceptance_budgets();
    // exhaustive target path search stays below (2n+1)^n candidates; this
    // budget admits n <= 4 and refuses n = 5, where surjectivity is partial
    budgets.witnesses = 100000;

    std::vector<CspInstance> suite;
    suite.push_back(parse_dimacs("p cnf 1 1\n1 0\n"));
    suite.push_back(parse_dimacs("p cnf 2 2\n1 2 0\n-1 2 0\n"));
    suite.push_back(parse_dimacs("p cnf 3 3\n1 2 0\n2 -3 0\n1 3 0\n"));
    for (auto& inst : random_satisfiable_cnf_suite(9, 5, 8, 3, 20240818))
        suite.push_back(std::move(inst));

    std::size_t surjectivity_checked = 0;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        const CspInstance& phi = suite[i];
        std::string id = "cnf#" + std::to_string(i) + "(n=" + std::to_string(phi.n) +
                         ",m=" + std::to_string(phi.constraints.size()) + ")";
        Reduction r = reduce_sat_to_maxsatstar(phi);
        const auto& astar = std::get<AStarInstance>(r.target_instance);
        FlipPositionMap layout = FlipPositionMap::maxsatstar_layout(phi.n);

        auto witnesses = r.source.enumerate_witnesses(budgets.witnesses);
        crit.require(!witnesses.empty(), id + ": satisfiable member has witnesses");
        for (const auto& y : witnesses) {
            Assignment image = r.map_witness(y);
            PathWitness path = decode_path(image, astar.start, layout);
            crit.require(is_augmenting_path(astar, path),
                         id + ": mapped path is augmenting and ends at a local maximum");
            crit.require(r.invert_witness(image) == y, id + ": decode inverts encode");
        }
        for (std::size_t a = 0; a < witnesses.size(); ++a) {
            for (std::size_t b = a + 1; b < witnesses.size(); ++b) {
                auto ia = r.map_witness(witnesses[a]);
                auto ib = r.map_witness(witnesses[b]);
                crit.require(hamming_distance(ia, ib) ==
                                 std::size_t(2 * phi.n + 2) *
                                     hamming_distance(witnesses[a], witnesses[b]),
                             id + ": block-encoding Hamming identity");
            }
        }

        auto profile = collect_overlap_pairs(r, budgets.witnesses);
        if (!profile.empty()) {
            auto ov = check_overlap_preservation(profile, OverlapClaim::identity(),
                                                 Tolerance::exact_mode());
            crit.require(ov.verdict == Verdict::holds && ov.max_claim_deviation == Rational(0),
                         id + ": overlap preserved exactly with identity map");
        }

        auto wi = check_witness_isomorphism(r, budgets);
        if (phi.n <= 4) {
            ++surjectivity_checked;
            crit.require(wi.verdict == Verdict::holds,
                         id + ": full witness isomorphism incl. exhaustive-path surjectivity");
        } else {
            crit.require(wi.verdict == Verdict::partial && wi.surjectivity == Verdict::partial,
                         id + ": surjectivity is partial at n=5, all other checks hold");
        }
    }
    crit.note("members with exhaustive path-search surjectivity (n <= 4): " +
              std::to_string(surjectivity_checked));
    return crit;
}

// --------------------------------------------------------------------------

Criterion criterion5_pgb() {
    Criterion crit{"PGB to counting CSP on 10-vertex graphs with >= 2 witness classes"};
    Budgets budgets = acceptance_budgets();

    for (const auto& [name, graph] : bisection_suite_n10()) {
        Reduction r = reduce_pgb_to_counting(graph);
        const auto& target = std::get<CspInstance>(r.target_instance);
        std::string id = name;

        auto witnesses = r.source.enumerate_witnesses(budgets.witnesses);
        crit.require(witnesses.size() >= 2, id + ": at least two witness classes modulo sign");

        std::vector<Assignment> images;
        for (const auto& y : witnesses) {
            Assignment image = r.map_witness(y);
            crit.require(evaluate(target, image), id + ": mapped witness satisfies the counting image");
            images.push_back(std::move(image));
        }
        std::sort(images.begin(), images.end());
        crit.require(std::adjacent_find(images.begin(), images.end()) == images.end(),
                     id + ": witness map injective modulo sign");

        auto clusters = r.source.enumerate_covers(budgets.source_covers);
        crit.note(id + ": " + std::to_string(witnesses.size()) + " witness classes, " +
                  std::to_string(clusters.size()) + " cluster covers");
        for (const auto& c : clusters) {
            GeneralizedAssignment image = r.map_cover(c);
            auto eliminations = gac_eliminable(target, image);
            bool gac_ok = eliminations.empty();
            CoverVerdict verdict = is_cover_general(target, image);
            std::ostringstream line;
            line << id << ": cluster cover " << generalized_to_string(c, r.source.domain)
                 << " -> image GAC " << (gac_ok ? "closed" : "eliminates values")
                 << ", full cover predicate " << (verdict.is_cover ? "holds" : "fails");
            if (!verdict.is_cover && verdict.failure == CoverFailure::unsupported_variable)
                line << " (variable " << *verdict.variable << " fixed but unsupported)";
            crit.note(line.str());
            crit.require(verdict.is_cover, id + ": mapped cluster cover passes the general "
                                                "cover predicate");
        }

        auto profile = collect_overlap_pairs(r, budgets.witnesses);
        crit.require(!profile.empty(), id + ": overlap profile sampled (mod-negation metrics)");
        auto ov = check_overlap_preservation(profile, r.claim, Tolerance::c_over_n(2));
        crit.require(ov.max_claim_deviation.has_value(),
                     id + ": deviation from the square claim reported");
        if (ov.max_claim_deviation) {
            std::ostringstream line;
            line << id << ": max deviation from h(x)=x^2 is " << ov.max_claim_deviation->str()
                 << " over " << profile.total_pairs() << " pairs; fitted points:";
            crit.note(line.str());
            for (const auto& band : ov.bands) {
                crit.note("  source " + band.source.str() + " -> target [" +
                          band.target_min.str() + ", " + band.target_max.str() + "] (" +
                          std::to_string(band.count) + " pairs)");
            }
        }
    }
    return crit;
}

// --------------------------------------------------------------------------

Criterion criterion6_composition() {
    Criterion crit{"identity and composition laws"};
    Budgets budgets = acceptance_budgets();

    struct Case {
        std::string name;
        Reduction reduction;
        TargetArtifact source_artifact;
    };
    std::vector<Case> cases;
    {
        Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
        cases.push_back({"kcol-ksat", reduce_kcol_to_ksat(tri, 3), tri});
        CspInstance oneink = one_in_k_instance(4, {{0, 1, 2}, {1, 2, 3}});
        cases.push_back({"oneink-ksat(exact-one)",
                         reduce_oneink_to_ksat(oneink, OneInKVariant::exact_one), oneink});
        cases.push_back({"oneink-ksat(paper-nae)",
                         reduce_oneink_to_ksat(oneink, OneInKVariant::paper_nae), oneink});
        CspInstance cnf = parse_dimacs("p cnf 3 2\n1 2 0\n2 -3 0\n");
        cases.push_back({"sat-maxsatstar", reduce_sat_to_maxsatstar(cnf), cnf});
        Graph pairs(4, {{0, 1}, {2, 3}});
        cases.push_back({"pgb-counting", reduce_pgb_to_counting(pairs), pairs});
        cases.push_back({"foursat-threesat", reduce_foursat_to_threesat(counterexample_4cnf()),
                         counterexample_4cnf()});
    }

    for (const auto& c : cases) {
        const Reduction& r = c.reduction;
        Reduction left = compose(identity_reduction_on(r.source, c.source_artifact), r);
        Reduction right = compose(r, identity_reduction_on(r.target, r.target_instance));

        auto witnesses = r.source.enumerate_witnesses(budgets.witnesses);
        for (const auto& y : witnesses) {
            crit.require(left.map_witness(y) == r.map_witness(y),
                         c.name + ": identity;R agrees with R on witness maps");
            crit.require(right.map_witness(y) == r.map_witness(y),
                         c.name + ": R;identity agrees with R on witness maps");
            crit.require(left.invert_witness(r.map_witness(y)) == y,
                         c.name + ": composed inverses agree");
        }
        if (r.map_cover && r.source.enumerate_covers) {
            auto covers = r.source.enumerate_covers(budgets.source_covers);
            for (const auto& z : covers) {
                crit.require(left.map_cover(z) == r.map_cover(z),
                             c.name + ": identity;R agrees with R on cover maps");
                crit.require(right.map_cover(z) == r.map_cover(z),
                             c.name + ": R;identity agrees with R on cover maps");
            }
        }
        crit.require(left.claim == r.claim && right.claim == r.claim,
                     c.name + ": identity composition preserves the overlap claim");
    }

    crit.require(compose_claims(OverlapClaim::identity(), OverlapClaim::square()) ==
                     OverlapClaim::square(),
                 "identity o square law");
    crit.require(compose_claims(OverlapClaim::scale(Rational(1, 2)),
                                OverlapClaim::scale(Rational(2, 3))) ==
                     OverlapClaim::scale(Rational(1, 3)),
                 "scale o scale multiplies factors");
    crit.require(compose_claims(OverlapClaim::square(), OverlapClaim::identity()) ==
                     OverlapClaim::square(),
                 "square o identity law");

    // composed overlap pairs match the uncomposed reduction pointwise
    CspInstance oneink = one_in_k_instance(3, {{0, 1, 2}});
    Reduction r = reduce_oneink_to_ksat(oneink, OneInKVariant::exact_one);
    Reduction composed = compose(identity_reduction_on(r.source, oneink), r);
    auto base_profile = collect_overlap_pairs(r, budgets.witnesses);
    auto composed_profile = collect_overlap_pairs(composed, budgets.witnesses);
    crit.require(base_profile.entries == composed_profile.entries,
                 "overlap profile of identity;R equals the profile of R");
    return crit;
}

// --------------------------------------------------------------------------

Criterion criterion7_oracles() {
    Criterion crit{"oracle equivalences (counting DP, cover predicates)"};

    std::mt19937_64 rng(20240819);
    std::size_t cases = 0;
    bool all_agree = true;
    for (int round = 0; round < 10000; ++round) {
        int r = 1 + int(rng() % 12);
        std::vector<ValueMask> sets(r);
        for (auto& m : sets) m = ValueMask(1 + rng() % 7);
        int target = int(rng() % std::uint64_t(r + 2));

        bool brute = false;
        Assignment choice(r, 0);
        std::function<void(int, int)> rec = [&](int depth, int sum) {
            if (brute) return;
            if (depth == r) {
                if (sum == target || sum == -target) brute = true;
                return;
            }
            for (Value v = 0; v < 3; ++v)
                if ((sets[depth] >> v) & 1u) rec(depth + 1, sum + int(v) - 1);
        };
        rec(0, 0);
        if (counting_feasible(sets, target) != brute) all_agree = false;
        ++cases;
    }
    crit.require(all_agree, "counting DP agrees with brute-force choice enumeration");
    crit.note("counting cases checked: " + std::to_string(cases));

    auto suite = cover_comparison_cnf_suite();
    std::uint64_t total_boolean = 0, total_general = 0, total_disagreements = 0;
    for (const auto& inst : suite) {
        if (inst.n > 8) continue;
        auto report = compare_cover_predicates(inst, std::uint64_t(1) << 16);
        total_boolean += report.boolean_covers;
        total_general += report.general_covers;
        total_disagreements += report.disagreements;
    }
    crit.note("cover-predicate comparison: boolean=" + std::to_string(total_boolean) +
              " general=" + std::to_string(total_general) +
              " disagreements=" + std::to_string(total_disagreements));
    crit.require(total_disagreements == 0,
                 "boolean and general cover predicates agree on the whole CNF suite");
    // frozen regression value for the comparison report
    crit.require(total_boolean == total_general, "cover counts match between predicates");
    return crit;
}

// --------------------------------------------------------------------------

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Criterion criterion8_determinism(const std::string& cli) {
    Criterion crit{"CLI determinism: identical runs produce byte-identical outputs"};
    if (cli.empty()) {
        crit.require(false, "CLI binary path was not provided to the acceptance driver");
        return crit;
    }
    fs::path base = fs::current_path() / "acceptance_tmp";
    fs::remove_all(base);
    fs::create_directories(base);

    std::ofstream(base / "tiny.cnf") << "p cnf 2 1\n1 2 0\n";
    std::ofstream(base / "triangle.col") << "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
    std::ofstream(base / "oneink.json")
        << csp_to_json(one_in_k_instance(3, {{0, 1, 2}}, "single exactly-one constraint"));

    struct Run {
        std::string name;
        std::string args;
        std::vector<std::string> products; // relative to the run directory
    };
    std::vector<Run> runs = {
        {"solve", "solve {in}/tiny.cnf -o {out}/solutions.txt", {"solutions.txt"}},
        {"covers", "covers {in}/tiny.cnf -o {out}/covers.txt", {"covers.txt"}},
        {"reduce",
         "reduce --reduction kcol-ksat --k 3 {in}/triangle.col -o {out}/kcol",
         {"kcol.target.cnf", "kcol.provenance.json", "kcol.witnesses.tsv"}},
        {"verify",
         "verify --reduction oneink-ksat --variant exact-one --exact {in}/oneink.json "
         "-o {out}/report.json --profile-csv {out}/profile.csv",
         {"report.json", "profile.csv"}},
        {"compose",
         "compose --reductions foursat-threesat,sat-maxsatstar {in}/tiny.cnf -o {out}/chain",
         {"chain.provenance.json", "chain.target.json"}},
        {"counterexample",
         "counterexample -o {out}/ce",
         {"ce.source.cnf", "ce.image.cnf", "ce.audit.json"}},
    };

    auto substitute = [&](std::string text, const std::string& out_dir) {
        auto replace_all = [&](const std::string& what, const std::string& with) {
            std::size_t at = 0;
            while ((at = text.find(what, at)) != std::string::npos) {
                text.replace(at, what.size(), with);
                at += with.size();
            }
        };
        replace_all("{in}", base.string());
        replace_all("{out}", out_dir);
        return text;
    };

    for (const auto& run : runs) {
        fs::path d1 = base / (run.name + "_1");
        fs::path d2 = base / (run.name + "_2");
        fs::create_directories(d1);
        fs::create_directories(d2);
        for (const fs::path& dir : {d1, d2}) {
            std::string cmd = cli + " " + substitute(run.args, dir.string()) + " > " +
                              (dir / "stdout.txt").string() + " 2> " +
                              (dir / "stderr.txt").string();
            int status = std::system(cmd.c_str());
            crit.require(status != -1, run.name + ": command launched");
        }
        std::vector<std::string> products = run.products;
        products.push_back("stdout.txt");
        for (const auto& product : products) {
            std::string a = slurp(d1 / product), b = slurp(d2 / product);
            crit.require(!a.empty() || product == "stdout.txt",
                         run.name + ": " + product + " was produced");
            crit.require(a == b, run.name + ": " + product + " is byte-identical across runs");
        }
    }

    // exit statuses: holds -> 0, verification failure -> 1, budget refusal -> 3
    auto run_status = [&](const std::string& args) {
        std::string cmd = cli + " " + substitute(args, base.string()) + " > /dev/null 2>&1";
        int raw = std::system(cmd.c_str());
        return WEXITSTATUS(raw);
    };
    crit.require(run_status("verify --reduction oneink-ksat --variant exact-one --exact "
                            "{in}/oneink.json") == 0,
                 "exit 0 when all requested checks hold");
    crit.require(run_status("verify --reduction oneink-ksat --variant paper-nae --exact "
                            "{in}/oneink.json") == 1,
                 "exit 1 on verification failure");
    crit.require(run_status("solve --budget 2 {in}/tiny.cnf") == 3, "exit 3 on budget refusal");
    crit.require(run_status("solve {in}/missing.cnf") == 2, "exit 2 on unreadable input");
    return crit;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    std::vector<Criterion> results;
    results.push_back(criterion1_counterexample());
    results.push_back(criterion2_kcol());
    results.push_back(criterion3_oneink());
    results.push_back(criterion4_maxsatstar());
    results.push_back(criterion5_pgb());
    results.push_back(criterion6_composition());
    results.push_back(criterion7_oracles());
    results.push_back(criterion8_determinism(cli));

    int failed = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& crit = results[i];
        std::cout << "criterion " << i + 1 << " [" << crit.label
                  << "]: " << (crit.ok ? "PASS" : "FAIL") << "\n";
        for (const auto& d : crit.details) std::cout << "    " << d << "\n";
        if (!crit.ok) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed"
                              : std::to_string(failed) + " criteria failed")
              << "\n";
    return failed == 0 ? 0 : 1;
}
