#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "geored/corpus.hpp"
#include "geored/covers.hpp"
#include "geored/io.hpp"
#include "geored/reductions.hpp"
#include "geored/verify.hpp"
#include "geored/version.hpp"

using namespace geored;
using json = nlohmann::ordered_json;

namespace {

// exit codes: 0 success/holds, 1 verification failure, 2 usage or parse
// error, 3 budget refusal
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

enum class InputFormat { autodetect, cnf, graphfile, jsonfile };

InputFormat sniff(const std::string& path, const std::string& text) {
    auto ends_with = [&](const char* suffix) {
        std::string s(suffix);
        return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".cnf") || ends_with(".wcnf")) return InputFormat::cnf;
    if (ends_with(".col") || ends_with(".edge") || ends_with(".graph")) return InputFormat::graphfile;
    if (ends_with(".json")) return InputFormat::jsonfile;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return InputFormat::jsonfile;
        if (ch == 'p' || ch == 'c') break;
        break;
    }
    // DIMACS family: decide by the format word on the problem line
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream ls(line);
            std::string p, fmt;
            ls >> p >> fmt;
            if (fmt == "edge") return InputFormat::graphfile;
            return InputFormat::cnf;
        }
        break;
    }
    return InputFormat::cnf;
}

std::variant<CspInstance, Graph> load_input(const std::string& path, InputFormat format) {
    std::string text = read_file(path);
    if (format == InputFormat::autodetect) format = sniff(path, text);
    switch (format) {
        case InputFormat::cnf: return parse_dimacs(text);
        case InputFormat::graphfile: return parse_graph(text);
        case InputFormat::jsonfile: return csp_from_json(text);
        default: throw ParseError("cannot detect input format of " + path);
    }
}

InputFormat format_from_flag(const std::string& flag) {
    if (flag.empty() || flag == "auto") return InputFormat::autodetect;
    if (flag == "cnf") return InputFormat::cnf;
    if (flag == "graph") return InputFormat::graphfile;
    if (flag == "json") return InputFormat::jsonfile;
    throw ParseError("unknown input format: " + flag);
}

ReductionOptions options_from(int k, const std::string& variant) {
    ReductionOptions opts;
    opts.k = k;
    if (variant == "paper-nae") opts.variant = OneInKVariant::paper_nae;
    else if (variant == "exact-one") opts.variant = OneInKVariant::exact_one;
    else throw ParseError("unknown variant: " + variant + " (expected exact-one or paper-nae)");
    return opts;
}

std::string target_instance_text(const TargetArtifact& artifact, std::string* extension) {
    if (const auto* csp = std::get_if<CspInstance>(&artifact)) {
        if (csp->is_boolean_cnf()) {
            *extension = csp->kind == InstanceKind::weighted_maxsat ? ".wcnf" : ".cnf";
            return to_dimacs(*csp);
        }
        *extension = ".json";
        return csp_to_json(*csp);
    }
    if (const auto* astar = std::get_if<AStarInstance>(&artifact)) {
        json j;
        j["schema"] = "geored.astar/1";
        j["base_wcnf"] = to_dimacs(astar->base);
        j["start"] = assignment_to_string(astar->start, astar->base.domain);
        // the path-length bound, written as a decimal integer rather than in unary
        j["bound"] = astar->bound;
        *extension = ".json";
        return j.dump(2) + "\n";
    }
    const auto& g = std::get<Graph>(artifact);
    *extension = ".edge";
    return to_dimacs(g);
}

std::string provenance_json(const Reduction& r) {
    json j;
    j["schema"] = "geored.provenance/1";
    j["reduction"] = r.name;
    j["claimed_overlap_map"] = r.claim.str();
    json claims = json::array();
    for (auto p : r.claimed) claims.push_back(to_string(p));
    j["claimed_properties"] = std::move(claims);
    j["notes"] = r.notes;
    json vars = json::array();
    for (std::size_t i = 0; i < r.provenance.size(); ++i) {
        json v;
        v["index"] = i;
        v["meaning"] = r.provenance[i];
        vars.push_back(std::move(v));
    }
    j["variables"] = std::move(vars);
    return j.dump(2) + "\n";
}

std::string witness_table(const Reduction& r, std::uint64_t budget) {
    std::ostringstream out;
    auto witnesses = r.source.enumerate_witnesses(budget);
    for (const auto& y : witnesses) {
        out << assignment_to_string(y, r.source.domain) << "\t"
            << assignment_to_string(r.map_witness(y), r.target.domain) << "\n";
    }
    return out.str();
}

struct CommonArgs {
    std::string input;
    std::string format = "auto";
    std::string output;
    std::string reduction;
    int k = 3;
    std::string variant = "exact-one";
    std::uint64_t budget = std::uint64_t(1) << 20;
    std::uint64_t cover_budget = std::uint64_t(1) << 20;
    std::uint64_t target_cover_budget = std::uint64_t(1) << 25;
    bool exact = false;
    long long tolerance_c = 2;
    bool strict = false;
    std::uint64_t seed = 1;
};

int cmd_reduce(const CommonArgs& args) {
    auto input = load_input(args.input, format_from_flag(args.format));
    Reduction r = build_reduction(args.reduction, input, options_from(args.k, args.variant));
    std::string prefix = args.output.empty() ? "out" : args.output;

    std::string extension;
    std::string target_text = target_instance_text(r.target_instance, &extension);
    write_file(prefix + ".target" + extension, target_text);
    write_file(prefix + ".provenance.json", provenance_json(r));
    try {
        write_file(prefix + ".witnesses.tsv", witness_table(r, args.budget));
    } catch (const BudgetError&) {
        // witness table is optional when the source space exceeds the budget
    }
    for (const auto& note : r.notes) std::cerr << "note: " << note << "\n";
    std::cerr << "wrote " << prefix << ".target" << extension << "\n";
    return kExitOk;
}

int cmd_solve(const CommonArgs& args) {
    auto input = load_input(args.input, format_from_flag(args.format));
    const auto* inst = std::get_if<CspInstance>(&input);
    if (!inst) throw ParseError("solve expects a CSP or CNF instance");
    auto solutions = enumerate_solutions(*inst, args.budget);
    std::ostringstream out;
    for (const auto& s : solutions) out << assignment_to_string(s, inst->domain) << "\n";
    if (args.output.empty()) std::cout << out.str();
    else write_file(args.output, out.str());
    std::cerr << "solutions: " << solutions.size() << "\n";
    return kExitOk;
}

int cmd_covers(const CommonArgs& args, const std::string& predicate_flag, bool as_json) {
    auto input = load_input(args.input, format_from_flag(args.format));
    const auto* inst = std::get_if<CspInstance>(&input);
    if (!inst) throw ParseError("covers expects a CSP or CNF instance");
    CoverPredicate predicate;
    if (predicate_flag == "auto")
        predicate = inst->is_boolean_cnf() ? CoverPredicate::boolean : CoverPredicate::general;
    else if (predicate_flag == "boolean") predicate = CoverPredicate::boolean;
    else if (predicate_flag == "general") predicate = CoverPredicate::general;
    else throw ParseError("unknown cover predicate: " + predicate_flag);

    auto covers = enumerate_covers(*inst, args.cover_budget, predicate);
    std::ostringstream out;
    for (const auto& c : covers) {
        if (as_json) out << cover_to_json(c, inst->domain);
        else out << generalized_to_string(c, inst->domain) << "\n";
    }
    if (args.output.empty()) std::cout << out.str();
    else write_file(args.output, out.str());
    std::cerr << "covers: " << covers.size() << "\n";
    return kExitOk;
}

int verify_one(const Reduction& r, const std::string& instance_id, const CommonArgs& args,
               const CheckSelection& selection, json* reports) {
    Budgets budgets;
    budgets.witnesses = args.budget;
    budgets.source_covers = args.cover_budget;
    budgets.target_covers = args.target_cover_budget;
    Tolerance tolerance = args.exact ? Tolerance::exact_mode() : Tolerance::c_over_n(args.tolerance_c);

    VerificationReport report = run_verification(r, instance_id, budgets, tolerance, selection);
    reports->push_back(json::parse(emit_report_json(report)));
    return report.acceptable(args.strict) ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const CommonArgs& args, const std::string& checks_flag,
               const std::string& profile_csv, const std::string& corpus, int corpus_count,
               int corpus_arity, int corpus_max_vars) {
    CheckSelection selection;
    if (checks_flag != "all") {
        selection = CheckSelection{false, false, false};
        std::istringstream in(checks_flag);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item == "wi") selection.wi = true;
            else if (item == "overlap") selection.overlap = true;
            else if (item == "cover") selection.cover = true;
            else throw ParseError("unknown check: " + item);
        }
    }

    json reports = json::array();
    int status = kExitOk;
    std::string csv;

    if (!corpus.empty()) {
        if (corpus != "oneink")
            throw ParseError("unknown corpus: " + corpus + " (only oneink is bundled)");
        auto suite = random_one_in_k_suite(corpus_count, corpus_arity, corpus_max_vars, args.seed);
        for (std::size_t i = 0; i < suite.size(); ++i) {
            Reduction r = build_reduction(args.reduction, suite[i],
                                          options_from(args.k, args.variant));
            std::string id = "corpus:oneink:" + std::to_string(args.seed) + ":" + std::to_string(i);
            status = std::max(status, verify_one(r, id, args, selection, &reports));
        }
    } else {
        auto input = load_input(args.input, format_from_flag(args.format));
        Reduction r = build_reduction(args.reduction, input, options_from(args.k, args.variant));
        status = verify_one(r, args.input, args, selection, &reports);
        if (!profile_csv.empty() && selection.overlap) {
            try {
                Budgets budgets;
                budgets.witnesses = args.budget;
                csv = emit_profile_csv(collect_overlap_pairs(r, budgets.witnesses));
            } catch (const BudgetError&) {
                csv = "source_num,source_den,target_num,target_den,multiplicity\n";
            }
            write_file(profile_csv, csv);
        }
    }

    std::string rendered = reports.size() == 1 ? reports[0].dump(2) + "\n" : reports.dump(2) + "\n";
    if (args.output.empty()) std::cout << rendered;
    else write_file(args.output, rendered);
    return status;
}

int cmd_compose(const CommonArgs& args, const std::string& reductions_flag) {
    std::vector<std::string> names;
    std::istringstream in(reductions_flag);
    std::string item;
    while (std::getline(in, item, ',')) names.push_back(item);
    if (names.empty()) throw ParseError("compose needs --reductions name1,name2,...");

    auto input = load_input(args.input, format_from_flag(args.format));
    ReductionOptions opts = options_from(args.k, args.variant);

    Reduction acc = build_reduction(names[0], input, opts);
    for (std::size_t i = 1; i < names.size(); ++i) {
        const auto* csp = std::get_if<CspInstance>(&acc.target_instance);
        if (!csp)
            throw std::invalid_argument("compose: '" + names[i - 1] +
                                        "' does not produce a CSP instance to feed into '" +
                                        names[i] + "'");
        Reduction next = build_reduction(names[i], *csp, opts);
        acc = compose(acc, next);
    }

    std::string prefix = args.output.empty() ? "composed" : args.output;
    std::string extension;
    std::string target_text = target_instance_text(acc.target_instance, &extension);
    write_file(prefix + ".target" + extension, target_text);
    write_file(prefix + ".provenance.json", provenance_json(acc));
    try {
        write_file(prefix + ".witnesses.tsv", witness_table(acc, args.budget));
    } catch (const BudgetError&) {
    }
    std::cerr << "composed " << acc.name << ", claimed overlap map " << acc.claim.str() << "\n";
    return kExitOk;
}

int cmd_counterexample(const CommonArgs& args) {
    std::string prefix = args.output.empty() ? "counterexample" : args.output;
    CspInstance phi1 = counterexample_4cnf();
    Reduction split = reduce_foursat_to_threesat(phi1);
    const CspInstance& phi2 = std::get<CspInstance>(split.target_instance);

    write_file(prefix + ".source.cnf", to_dimacs(phi1));
    write_file(prefix + ".image.cnf", to_dimacs(phi2));

    auto source_solutions = enumerate_solutions(phi1, args.budget);
    auto image_solutions = enumerate_solutions(phi2, args.budget);
    auto source_covers = enumerate_covers(phi1, args.cover_budget, CoverPredicate::boolean);

    // the often-claimed nontrivial cover of the image: x=1, z=1, everything
    // else (including the first split auxiliary) starred
    GeneralizedAssignment claimed = GeneralizedAssignment::full(std::size_t(phi2.n), 2);
    claimed.sets[0] = 2; // x = 1
    claimed.sets[2] = 2; // z = 1
    CoverVerdict verdict = is_cover_boolean(phi2, claimed);

    Budgets budgets;
    budgets.witnesses = args.budget;
    budgets.source_covers = args.cover_budget;
    budgets.target_covers = args.target_cover_budget;
    auto wi = check_witness_isomorphism(split, budgets);

    json audit;
    audit["schema"] = "geored.counterexample-audit/1";
    audit["tool_version"] = kVersion;
    audit["source"] = {{"variables", phi1.n},
                       {"clauses", phi1.constraints.size()},
                       {"solutions", source_solutions.size()},
                       {"boolean_covers", source_covers.size()}};
    audit["image"] = {{"variables", phi2.n},
                      {"clauses", phi2.constraints.size()},
                      {"solutions", image_solutions.size()}};
    audit["witness_isomorphism"] = to_string(wi.verdict);
    json cc;
    cc["assignment"] = generalized_to_string(claimed, phi2.domain);
    cc["is_cover"] = verdict.is_cover;
    if (!verdict.is_cover && verdict.failure == CoverFailure::unsupported_variable)
        cc["failure"] = "variable " + std::to_string(*verdict.variable) + " is fixed but unsupported";
    else if (!verdict.is_cover)
        cc["failure"] = "cover conditions violated";
    audit["claimed_image_cover"] = std::move(cc);
    write_file(prefix + ".audit.json", audit.dump(2) + "\n");

    std::cout << "source solutions: " << source_solutions.size() << "\n"
              << "image solutions: " << image_solutions.size() << "\n"
              << "source boolean covers: " << source_covers.size() << "\n"
              << "witness isomorphism: " << to_string(wi.verdict) << "\n"
              << "claimed image cover is a cover: " << (verdict.is_cover ? "yes" : "no") << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometry-preserving reduction toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommonArgs args;
    std::string checks_flag = "all";
    std::string predicate_flag = "auto";
    std::string profile_csv;
    std::string reductions_flag;
    std::string corpus;
    int corpus_count = 10;
    int corpus_arity = 3;
    int corpus_max_vars = 12;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("input", args.input, "input instance file")->required();
        cmd->add_option("--format", args.format, "input format: auto|cnf|graph|json");
        cmd->add_option("-o,--output", args.output, "output path or prefix");
        cmd->add_option("--budget", args.budget, "solution/witness enumeration budget");
        cmd->add_option("--cover-budget", args.cover_budget, "source cover enumeration budget");
        cmd->add_option("--target-cover-budget", args.target_cover_budget,
                        "target cover enumeration budget");
    };
    auto add_reduction_opts = [&](CLI::App* cmd) {
        cmd->add_option("--reduction", args.reduction,
                        "kcol-ksat|oneink-ksat|sat-maxsatstar|pgb-counting|foursat-threesat|identity")
            ->required();
        cmd->add_option("--k", args.k, "color count for kcol-ksat");
        cmd->add_option("--variant", args.variant, "oneink variant: exact-one|paper-nae");
    };

    CLI::App* reduce = app.add_subcommand("reduce", "apply a reduction and write the target");
    add_common(reduce, true);
    add_reduction_opts(reduce);

    CLI::App* solve = app.add_subcommand("solve", "enumerate all solutions");
    add_common(solve, true);

    CLI::App* covers = app.add_subcommand("covers", "enumerate all covers");
    add_common(covers, true);
    covers->add_option("--predicate", predicate_flag, "cover predicate: auto|boolean|general");
    bool covers_json = false;
    covers->add_flag("--json", covers_json, "emit covers as JSON value-label lists");

    CLI::App* verify = app.add_subcommand("verify", "audit a reduction on an instance");
    verify->add_option("input", args.input, "input instance file");
    verify->add_option("--format", args.format, "input format: auto|cnf|graph|json");
    verify->add_option("-o,--output", args.output, "report path");
    verify->add_option("--budget", args.budget, "witness enumeration budget");
    verify->add_option("--cover-budget", args.cover_budget, "source cover budget");
    verify->add_option("--target-cover-budget", args.target_cover_budget, "target cover budget");
    add_reduction_opts(verify);
    verify->add_option("--checks", checks_flag, "comma list of wi,overlap,cover or all");
    verify->add_flag("--exact", args.exact, "exact overlap tolerance");
    verify->add_option("--tolerance-c", args.tolerance_c, "overlap tolerance c in c/n");
    verify->add_flag("--strict", args.strict, "partial verdicts count as failure");
    verify->add_option("--profile-csv", profile_csv, "write the overlap profile CSV here");
    verify->add_option("--corpus", corpus, "verify a bundled corpus instead of a file (oneink)");
    verify->add_option("--corpus-count", corpus_count, "corpus size");
    verify->add_option("--corpus-arity", corpus_arity, "constraint arity for the corpus");
    verify->add_option("--corpus-max-vars", corpus_max_vars, "max variables per corpus instance");
    verify->add_option("--seed", args.seed, "corpus generator seed");

    CLI::App* compose_cmd = app.add_subcommand("compose", "chain reductions left to right");
    add_common(compose_cmd, true);
    compose_cmd->add_option("--reductions", reductions_flag, "comma list of reduction names")
        ->required();
    compose_cmd->add_option("--k", args.k, "color count for kcol-ksat");
    compose_cmd->add_option("--variant", args.variant, "oneink variant");

    CLI::App* counterexample =
        app.add_subcommand("counterexample", "emit the 4-CNF counterexample and its audit");
    counterexample->add_option("-o,--output", args.output, "output prefix");
    counterexample->add_option("--budget", args.budget, "enumeration budget");
    counterexample->add_option("--cover-budget", args.cover_budget, "cover budget");
    counterexample->add_option("--target-cover-budget", args.target_cover_budget,
                               "target cover budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (reduce->parsed()) return cmd_reduce(args);
        if (solve->parsed()) return cmd_solve(args);
        if (covers->parsed()) return cmd_covers(args, predicate_flag, covers_json);
        if (verify->parsed()) {
            if (corpus.empty() && args.input.empty())
                throw ParseError("verify needs an input file or --corpus");
            return cmd_verify(args, checks_flag, profile_csv, corpus, corpus_count, corpus_arity,
                              corpus_max_vars);
        }
        if (compose_cmd->parsed()) return cmd_compose(args, reductions_flag);
        if (counterexample->parsed()) return cmd_counterexample(args);
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
