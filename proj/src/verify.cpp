#include "geored/verify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

#include "geored/io.hpp"
#include "geored/version.hpp"

namespace geored {

using json = nlohmann::ordered_json;

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::partial: return "partial";
        case Verdict::not_applicable: return "not-applicable";
    }
    throw std::logic_error("unreachable");
}

Verdict combine(std::initializer_list<Verdict> verdicts) {
    Verdict out = Verdict::not_applicable;
    for (Verdict v : verdicts) {
        if (v == Verdict::fails) return Verdict::fails;
        if (v == Verdict::partial) out = Verdict::partial;
        else if (v == Verdict::holds && out == Verdict::not_applicable) out = Verdict::holds;
    }
    return out;
}

WitnessIsomorphismResult check_witness_isomorphism(const Reduction& r, const Budgets& budgets) {
    WitnessIsomorphismResult res;
    std::vector<Assignment> source;
    try {
        source = r.source.enumerate_witnesses(budgets.witnesses);
    } catch (const BudgetError&) {
        res.verdict = Verdict::partial; // nothing checkable without the source space
        return res;
    }
    res.source_count = source.size();

    res.totality = Verdict::holds;
    res.membership = Verdict::holds;
    res.inversion = Verdict::holds;
    std::vector<std::pair<Assignment, const Assignment*>> images;
    images.reserve(source.size());
    for (const auto& y : source) {
        Assignment image;
        try {
            image = r.map_witness(y);
        } catch (const std::exception&) {
            res.totality = Verdict::fails;
            if (!res.totality_counterexample) res.totality_counterexample = y;
            continue;
        }
        if (!r.target.is_witness(image)) {
            res.membership = Verdict::fails;
            if (!res.membership_counterexample) res.membership_counterexample = y;
        }
        try {
            if (r.invert_witness(image) != y) throw std::invalid_argument("mismatch");
        } catch (const std::exception&) {
            res.inversion = Verdict::fails;
            if (!res.inversion_counterexample) res.inversion_counterexample = y;
        }
        images.emplace_back(std::move(image), &y);
    }

    res.injectivity = Verdict::holds;
    std::sort(images.begin(), images.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < images.size(); ++i) {
        if (images[i].first == images[i - 1].first) {
            res.injectivity = Verdict::fails;
            res.injectivity_counterexample = {*images[i - 1].second, *images[i].second};
            break;
        }
    }
    std::vector<Assignment> sorted_images;
    sorted_images.reserve(images.size());
    for (const auto& [image, _] : images) sorted_images.push_back(image);

    try {
        auto target = r.target.enumerate_witnesses(budgets.witnesses);
        res.target_count = target.size();
        res.surjectivity = Verdict::holds;
        // image list is sorted; target enumerations are canonical and sorted
        for (const auto& t : target) {
            if (!std::binary_search(sorted_images.begin(), sorted_images.end(), t)) {
                res.surjectivity = Verdict::fails;
                res.surjectivity_counterexample = t;
                break;
            }
        }
        if (res.surjectivity == Verdict::holds && sorted_images.size() != target.size())
            res.surjectivity = Verdict::fails; // images outside the witness set
    } catch (const BudgetError&) {
        res.surjectivity = Verdict::partial;
    }

    res.verdict = combine({res.totality, res.membership, res.injectivity, res.inversion,
                           res.surjectivity});
    return res;
}

std::uint64_t OverlapProfile::total_pairs() const {
    std::uint64_t total = 0;
    for (const auto& e : entries) total += e.multiplicity;
    return total;
}

OverlapProfile collect_overlap_pairs(const Reduction& r, std::uint64_t witness_budget) {
    OverlapProfile profile;
    profile.source_witness_length = r.source.witness_length;
    auto source = r.source.enumerate_witnesses(witness_budget);
    std::vector<Assignment> images;
    images.reserve(source.size());
    for (const auto& y : source) images.push_back(r.map_witness(y));

    std::map<std::pair<Rational, Rational>, std::uint64_t> counts;
    for (std::size_t i = 0; i < source.size(); ++i) {
        for (std::size_t j = i + 1; j < source.size(); ++j) {
            Rational s = r.source.overlap_of(source[i], source[j]);
            Rational t = r.target.overlap_of(images[i], images[j]);
            ++counts[{s, t}];
        }
    }
    for (const auto& [key, count] : counts)
        profile.entries.push_back({key.first, key.second, count});
    return profile;
}

OverlapCheckResult check_overlap_preservation(const OverlapProfile& profile,
                                              const OverlapClaim& claim,
                                              const Tolerance& tolerance) {
    OverlapCheckResult res;
    if (profile.empty()) return res; // nothing sampled, everything not-applicable

    Rational tol = tolerance.value(profile.source_witness_length);

    // group into bands by source overlap (entries are sorted)
    for (const auto& e : profile.entries) {
        if (res.bands.empty() || !(res.bands.back().source == e.source)) {
            res.bands.push_back({e.source, e.target, e.target, e.multiplicity});
        } else {
            auto& band = res.bands.back();
            band.target_min = std::min(band.target_min, e.target);
            band.target_max = std::max(band.target_max, e.target);
            band.count += e.multiplicity;
        }
    }

    res.functional = Verdict::holds;
    for (const auto& band : res.bands) {
        if (band.target_max - band.target_min > tol) {
            res.functional = Verdict::fails;
            OverlapProfile::Entry lo, hi;
            for (const auto& e : profile.entries) {
                if (e.source == band.source && e.target == band.target_min) lo = e;
                if (e.source == band.source && e.target == band.target_max) hi = e;
            }
            res.functionality_counterexample = {lo, hi};
            break;
        }
    }

    res.monotone = Verdict::holds;
    for (std::size_t i = 1; i < res.bands.size(); ++i) {
        // non-decreasing within tolerance, compared band to band
        if (res.bands[i].target_min + tol < res.bands[i - 1].target_max) {
            res.monotone = Verdict::fails;
            break;
        }
    }

    for (const auto& band : res.bands) {
        if (band.source == Rational(0)) {
            res.endpoint_zero =
                band.target_max <= tol ? Verdict::holds : Verdict::fails;
        }
        if (band.source == Rational(1)) {
            bool ok = (Rational(1) - band.target_min) <= tol && band.target_max <= Rational(1) + tol;
            res.endpoint_one = ok ? Verdict::holds : Verdict::fails;
        }
    }

    bool scale_consistent = true;
    std::optional<Rational> scale;
    for (const auto& e : profile.entries) {
        if (e.source.is_zero()) continue;
        Rational ratio = e.target / e.source;
        if (!scale) scale = ratio;
        else if (!(*scale == ratio)) { scale_consistent = false; break; }
    }
    if (scale_consistent && scale) res.fitted_scale = scale;

    if (claim.has_value()) {
        Rational worst(0);
        for (const auto& e : profile.entries) {
            Rational dev = (e.target - claim.apply(e.source)).abs();
            worst = std::max(worst, dev);
        }
        res.max_claim_deviation = worst;
    }

    res.verdict = combine({res.functional, res.monotone, res.endpoint_zero, res.endpoint_one});
    return res;
}

CoverPreservationResult check_cover_preservation(const Reduction& r, const Budgets& budgets) {
    CoverPreservationResult res;
    if (!r.has_cover_map()) return res; // not applicable
    if (!r.source.enumerate_covers) return res;

    std::vector<Assignment> source;
    try {
        source = r.source.enumerate_witnesses(budgets.witnesses);
    } catch (const BudgetError&) {
        res.verdict = Verdict::partial;
        return res;
    }

    // item 1: the cover map extends the witness map on assignments
    res.extends_witness_map = Verdict::holds;
    for (const auto& y : source) {
        GeneralizedAssignment lifted = r.map_cover(GeneralizedAssignment::of(y));
        if (!(lifted == GeneralizedAssignment::of(r.map_witness(y)))) {
            res.extends_witness_map = Verdict::fails;
            res.extends_counterexample = y;
            break;
        }
    }

    // item 3: mapped covers are covers of the image, compatible with the
    // mapped witness; this needs only the target predicate, so it always runs
    std::vector<GeneralizedAssignment> source_covers;
    bool have_source_covers = false;
    try {
        source_covers = r.source.enumerate_covers(budgets.source_covers);
        have_source_covers = true;
    } catch (const BudgetError&) {
        res.membership = Verdict::partial;
    }
    if (have_source_covers) {
        res.source_cover_count = source_covers.size();
        res.membership = Verdict::holds;
        if (!r.target.cover_predicate) {
            res.membership = Verdict::not_applicable;
        } else {
            for (const auto& y : source) {
                for (const auto& z : source_covers) {
                    if (!is_compatible(y, z)) continue;
                    ++res.membership_checks;
                    GeneralizedAssignment image = r.map_cover(z);
                    Assignment gy = r.map_witness(y);
                    CoverVerdict verdict = r.target.cover_predicate(image);
                    std::string reason;
                    if (!verdict.is_cover) {
                        switch (verdict.failure) {
                            case CoverFailure::eliminable_value:
                                reason = "image is not a cover: constraint " +
                                         std::to_string(verdict.elimination->constraint_index) +
                                         " eliminates value " +
                                         std::to_string(int(verdict.elimination->value)) +
                                         " of variable " + std::to_string(verdict.elimination->var);
                                break;
                            case CoverFailure::unsupported_variable:
                                reason = "image is not a cover: variable " +
                                         std::to_string(*verdict.variable) +
                                         " is fixed but unsupported";
                                break;
                            case CoverFailure::clause_violation:
                                reason = "image is not a cover: clause " +
                                         std::to_string(*verdict.constraint) +
                                         " has no satisfying literal and fewer than two stars";
                                break;
                            default: reason = "image is not a cover";
                        }
                    } else if (!is_compatible(gy, image)) {
                        reason = "image cover is incompatible with the mapped witness";
                    }
                    if (!reason.empty()) {
                        res.membership = Verdict::fails;
                        if (!res.membership_counterexample)
                            res.membership_counterexample = CoverItem3Failure{y, z, reason};
                    }
                }
            }
        }
    }

    // item 2: bijectivity between the full cover sets, budget permitting
    if (have_source_covers && r.target.enumerate_covers) {
        try {
            auto target_covers = r.target.enumerate_covers(budgets.target_covers);
            res.target_cover_count = target_covers.size();
            std::vector<GeneralizedAssignment> images;
            images.reserve(source_covers.size());
            for (const auto& z : source_covers) images.push_back(r.map_cover(z));
            std::sort(images.begin(), images.end());
            res.bijection = Verdict::holds;
            for (std::size_t i = 1; i < images.size(); ++i) {
                if (images[i] == images[i - 1]) {
                    res.bijection = Verdict::fails;
                    res.bijection_failure = "cover map is not injective";
                    res.bijection_counterexample = images[i];
                    break;
                }
            }
            if (res.bijection == Verdict::holds) {
                std::sort(target_covers.begin(), target_covers.end());
                for (const auto& img : images) {
                    if (!std::binary_search(target_covers.begin(), target_covers.end(), img)) {
                        res.bijection = Verdict::fails;
                        res.bijection_failure = "a mapped cover is not a target cover";
                        res.bijection_counterexample = img;
                        break;
                    }
                }
            }
            if (res.bijection == Verdict::holds) {
                for (const auto& t : target_covers) {
                    if (!std::binary_search(images.begin(), images.end(), t)) {
                        res.bijection = Verdict::fails;
                        res.bijection_failure = "a target cover has no preimage";
                        res.bijection_counterexample = t;
                        break;
                    }
                }
            }
        } catch (const BudgetError&) {
            res.bijection = Verdict::partial;
        }
    } else if (have_source_covers) {
        res.bijection = Verdict::partial; // target covers not enumerable at all
    }

    res.verdict = combine({res.extends_witness_map, res.membership, res.bijection});
    return res;
}

bool VerificationReport::acceptable(bool strict) const {
    auto ok = [strict](Verdict v) {
        if (v == Verdict::fails) return false;
        if (v == Verdict::partial && strict) return false;
        return true;
    };
    if (wi && !ok(wi->verdict)) return false;
    if (overlap && !ok(overlap->verdict)) return false;
    if (cover && !ok(cover->verdict)) return false;
    return true;
}

VerificationReport run_verification(const Reduction& r, const std::string& instance_id,
                                    const Budgets& budgets, const Tolerance& tolerance,
                                    const CheckSelection& selection) {
    VerificationReport report;
    report.reduction = r.name;
    report.instance_id = instance_id;
    report.notes = r.notes;
    report.budgets = budgets;
    report.tolerance = tolerance;
    report.claim = r.claim;
    report.source_domain = r.source.domain;
    report.target_domain = r.target.domain;

    if (selection.wi || selection.overlap || selection.cover)
        report.wi = check_witness_isomorphism(r, budgets);

    if (selection.overlap) {
        try {
            report.profile = collect_overlap_pairs(r, budgets.witnesses);
            report.overlap = check_overlap_preservation(*report.profile, r.claim, tolerance);
        } catch (const BudgetError&) {
            report.overlap = OverlapCheckResult{};
            report.overlap->verdict = Verdict::partial;
        }
    }

    if (selection.cover) report.cover = check_cover_preservation(r, budgets);
    return report;
}

namespace {

json entry_json(const OverlapProfile::Entry& e) {
    json j;
    j["source"] = e.source.str();
    j["target"] = e.target.str();
    j["multiplicity"] = e.multiplicity;
    return j;
}

} // namespace

std::string emit_report_json(const VerificationReport& report) {
    json j;
    j["schema"] = "geored.report/1";
    j["tool_version"] = kVersion;
    j["reduction"] = report.reduction;
    j["instance"] = report.instance_id;
    j["claimed_overlap_map"] = report.claim.str();
    j["notes"] = report.notes;
    j["budgets"] = {{"witnesses", report.budgets.witnesses},
                    {"source_covers", report.budgets.source_covers},
                    {"target_covers", report.budgets.target_covers}};
    j["tolerance"] = report.tolerance.str();

    json checks = json::object();
    if (report.wi) {
        const auto& wi = *report.wi;
        json w;
        w["verdict"] = to_string(wi.verdict);
        w["source_witnesses"] = wi.source_count;
        w["target_witnesses"] = wi.target_count ? json(*wi.target_count) : json(nullptr);
        w["totality"] = to_string(wi.totality);
        w["membership"] = to_string(wi.membership);
        w["injectivity"] = to_string(wi.injectivity);
        w["inversion"] = to_string(wi.inversion);
        w["surjectivity"] = to_string(wi.surjectivity);
        json cex = json::object();
        if (wi.injectivity_counterexample) {
            cex["colliding_witnesses"] = json::array(
                {assignment_to_string(wi.injectivity_counterexample->first, report.source_domain),
                 assignment_to_string(wi.injectivity_counterexample->second,
                                      report.source_domain)});
        }
        if (wi.membership_counterexample)
            cex["image_not_witness_of"] =
                assignment_to_string(*wi.membership_counterexample, report.source_domain);
        if (wi.inversion_counterexample)
            cex["inverse_mismatch_on"] =
                assignment_to_string(*wi.inversion_counterexample, report.source_domain);
        if (wi.surjectivity_counterexample)
            cex["unmapped_target"] =
                assignment_to_string(*wi.surjectivity_counterexample, report.target_domain);
        if (!cex.empty()) w["counterexample"] = cex;
        checks["witness_isomorphism"] = w;
    }
    if (report.overlap) {
        const auto& ov = *report.overlap;
        json o;
        o["verdict"] = to_string(ov.verdict);
        o["prerequisite"] = "witness_isomorphism";
        o["prerequisite_verdict"] = report.wi ? to_string(report.wi->verdict) : "not-run";
        o["pairs"] = report.profile ? json(report.profile->total_pairs()) : json(nullptr);
        o["functional"] = to_string(ov.functional);
        o["monotone"] = to_string(ov.monotone);
        o["h0"] = to_string(ov.endpoint_zero);
        o["h1"] = to_string(ov.endpoint_one);
        o["fitted_scale"] = ov.fitted_scale ? json(ov.fitted_scale->str()) : json(nullptr);
        o["max_claim_deviation"] =
            ov.max_claim_deviation ? json(ov.max_claim_deviation->str()) : json(nullptr);
        json bands = json::array();
        for (const auto& band : ov.bands) {
            json b;
            b["source"] = band.source.str();
            b["target_min"] = band.target_min.str();
            b["target_max"] = band.target_max.str();
            b["count"] = band.count;
            bands.push_back(std::move(b));
        }
        o["bands"] = std::move(bands);
        if (ov.functionality_counterexample) {
            o["counterexample"] = json::array({entry_json(ov.functionality_counterexample->first),
                                               entry_json(ov.functionality_counterexample->second)});
        }
        checks["overlap_preservation"] = o;
    }
    if (report.cover) {
        const auto& cov = *report.cover;
        json c;
        c["verdict"] = to_string(cov.verdict);
        c["prerequisite"] = "witness_isomorphism";
        c["prerequisite_verdict"] = report.wi ? to_string(report.wi->verdict) : "not-run";
        c["extends_witness_map"] = to_string(cov.extends_witness_map);
        c["membership"] = to_string(cov.membership);
        c["bijection"] = to_string(cov.bijection);
        c["source_covers"] = cov.source_cover_count;
        c["target_covers"] = cov.target_cover_count ? json(*cov.target_cover_count) : json(nullptr);
        c["membership_checks"] = cov.membership_checks;
        if (cov.membership_counterexample) {
            json f;
            f["reason"] = cov.membership_counterexample->reason;
            f["witness"] =
                assignment_to_string(cov.membership_counterexample->witness, report.source_domain);
            f["cover"] = generalized_to_string(cov.membership_counterexample->cover,
                                               report.source_domain);
            c["counterexample"] = f;
        }
        if (!cov.bijection_failure.empty()) c["bijection_failure"] = cov.bijection_failure;
        checks["cover_preservation"] = c;
    }
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
}

std::string emit_profile_csv(const OverlapProfile& profile) {
    std::ostringstream out;
    out << "source_num,source_den,target_num,target_den,multiplicity\n";
    for (const auto& e : profile.entries) {
        out << e.source.num() << "," << e.source.den() << "," << e.target.num() << ","
            << e.target.den() << "," << e.multiplicity << "\n";
    }
    return out.str();
}

} // namespace geored
