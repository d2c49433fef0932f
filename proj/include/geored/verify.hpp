#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geored/rational.hpp"
#include "geored/reduction.hpp"

namespace geored {

enum class Verdict { holds, fails, partial, not_applicable };
std::string to_string(Verdict v);

/// Combine sub-verdicts: any fails dominates, then partial, then holds;
/// not_applicable verdicts do not contribute.
Verdict combine(std::initializer_list<Verdict> verdicts);

struct Budgets {
    std::uint64_t witnesses = std::uint64_t(1) << 20;
    std::uint64_t source_covers = std::uint64_t(1) << 20;
    std::uint64_t target_covers = std::uint64_t(1) << 25;
};

struct Tolerance {
    bool exact = false;
    long long c = 2;

    static Tolerance exact_mode() { return Tolerance{true, 0}; }
    static Tolerance c_over_n(long long c) { return Tolerance{false, c}; }

    Rational value(std::size_t witness_length) const {
        return exact ? Rational(0) : Rational(c, static_cast<long long>(witness_length));
    }
    std::string str() const { return exact ? "exact" : std::to_string(c) + "/n"; }
};

struct WitnessIsomorphismResult {
    Verdict verdict = Verdict::not_applicable;
    std::uint64_t source_count = 0;
    std::optional<std::uint64_t> target_count; // absent when not enumerable

    Verdict totality = Verdict::not_applicable;
    Verdict membership = Verdict::not_applicable;
    Verdict injectivity = Verdict::not_applicable;
    Verdict inversion = Verdict::not_applicable;
    Verdict surjectivity = Verdict::not_applicable;

    std::optional<Assignment> totality_counterexample;
    std::optional<Assignment> membership_counterexample;
    std::optional<std::pair<Assignment, Assignment>> injectivity_counterexample;
    std::optional<Assignment> inversion_counterexample;
    std::optional<Assignment> surjectivity_counterexample; // unmapped target witness
};

/// (source overlap, target overlap) multiset over all unordered pairs of
/// distinct enumerated source witnesses.
struct OverlapProfile {
    struct Entry {
        Rational source;
        Rational target;
        std::uint64_t multiplicity = 0;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> entries; // sorted by (source, target)
    std::size_t source_witness_length = 0;

    std::uint64_t total_pairs() const;
    bool empty() const { return entries.empty(); }
};

OverlapProfile collect_overlap_pairs(const Reduction& r, std::uint64_t witness_budget);

struct OverlapBand {
    Rational source;
    Rational target_min;
    Rational target_max;
    std::uint64_t count = 0;
};

struct OverlapCheckResult {
    Verdict verdict = Verdict::not_applicable;
    Verdict functional = Verdict::not_applicable;
    Verdict monotone = Verdict::not_applicable;
    Verdict endpoint_zero = Verdict::not_applicable; // h(0)=0, untestable unless sampled
    Verdict endpoint_one = Verdict::not_applicable;  // h(1)=1, untestable unless sampled
    std::vector<OverlapBand> bands;
    std::optional<Rational> fitted_scale; // target/source constant over all nonzero sources
    std::optional<Rational> max_claim_deviation;
    std::optional<std::pair<OverlapProfile::Entry, OverlapProfile::Entry>>
        functionality_counterexample;
};

OverlapCheckResult check_overlap_preservation(const OverlapProfile& profile,
                                              const OverlapClaim& claim,
                                              const Tolerance& tolerance);

struct CoverItem3Failure {
    Assignment witness;
    GeneralizedAssignment cover;
    std::string reason;
};

struct CoverPreservationResult {
    Verdict verdict = Verdict::not_applicable;
    Verdict extends_witness_map = Verdict::not_applicable; // item 1
    Verdict membership = Verdict::not_applicable;          // item 3
    Verdict bijection = Verdict::not_applicable;           // item 2
    std::uint64_t source_cover_count = 0;
    std::optional<std::uint64_t> target_cover_count;
    std::uint64_t membership_checks = 0;
    std::optional<Assignment> extends_counterexample;
    std::optional<CoverItem3Failure> membership_counterexample;
    std::optional<GeneralizedAssignment> bijection_counterexample;
    std::string bijection_failure; // which direction broke
};

WitnessIsomorphismResult check_witness_isomorphism(const Reduction& r, const Budgets& budgets);

CoverPreservationResult check_cover_preservation(const Reduction& r, const Budgets& budgets);

/// Full audit of one reduction on one instance. Checks run in dependency
/// order; overlap and cover sections record the witness-isomorphism verdict
/// they build on.
struct VerificationReport {
    std::string reduction;
    std::string instance_id;
    std::vector<std::string> notes;
    Budgets budgets;
    Tolerance tolerance;
    OverlapClaim claim;
    Domain source_domain;
    Domain target_domain;

    std::optional<WitnessIsomorphismResult> wi;
    std::optional<OverlapProfile> profile;
    std::optional<OverlapCheckResult> overlap;
    std::optional<CoverPreservationResult> cover;

    /// Conjunction of the requested verdicts; partial fails only in strict
    /// mode and not_applicable never fails.
    bool acceptable(bool strict) const;
};

struct CheckSelection {
    bool wi = true;
    bool overlap = true;
    bool cover = true;
};

VerificationReport run_verification(const Reduction& r, const std::string& instance_id,
                                    const Budgets& budgets, const Tolerance& tolerance,
                                    const CheckSelection& selection);

/// Deterministic JSON serialization of a report.
std::string emit_report_json(const VerificationReport& report);

/// CSV rows source_num,source_den,target_num,target_den,multiplicity.
std::string emit_profile_csv(const OverlapProfile& profile);

} // namespace geored
