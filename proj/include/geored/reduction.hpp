#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geored/covers.hpp"
#include "geored/csp.hpp"
#include "geored/overlap.hpp"
#include "geored/pls.hpp"
#include "geored/rational.hpp"
#include "geored/types.hpp"

namespace geored {

enum class OverlapMetricKind { plain, mod_negation };

/// One side of a reduction: how to enumerate, recognize and compare
/// witnesses, and (when defined for the problem) how to enumerate and check
/// covers. Witnesses are fixed-length strings; quotiented problems carry an
/// involution and enumerate canonical representatives only.
struct WitnessSide {
    std::string kind;
    std::size_t witness_length = 0;
    Domain domain;
    OverlapMetricKind metric = OverlapMetricKind::plain;
    std::optional<Involution> involution;

    std::function<std::vector<Assignment>(std::uint64_t budget)> enumerate_witnesses;
    std::function<bool(const Assignment&)> is_witness;

    // cover machinery; either may be absent when the notion is undefined
    std::function<std::vector<GeneralizedAssignment>(std::uint64_t budget)> enumerate_covers;
    std::function<CoverVerdict(const GeneralizedAssignment&)> cover_predicate;

    Rational overlap_of(const Assignment& a, const Assignment& b) const {
        if (metric == OverlapMetricKind::mod_negation)
            return overlap_mod_negation(a, b, *involution);
        return overlap(a, b);
    }

    Assignment canonical(const Assignment& a) const {
        return involution ? involution->canonical(a) : a;
    }
};

/// Claimed shape of the overlap map h, kept symbolic so compositions can be
/// tracked exactly.
struct OverlapClaim {
    enum class Kind { none, identity, scale, square };
    Kind kind = Kind::none;
    Rational factor{1};

    static OverlapClaim none() { return {}; }
    static OverlapClaim identity() { return {Kind::identity, Rational(1)}; }
    static OverlapClaim scale(Rational c) { return {Kind::scale, c}; }
    static OverlapClaim square() { return {Kind::square, Rational(1)}; }

    bool has_value() const { return kind != Kind::none; }

    /// h(x); only valid when has_value().
    Rational apply(const Rational& x) const;

    std::string str() const;

    friend bool operator==(const OverlapClaim&, const OverlapClaim&) = default;
};

/// Symbolic composition outer(inner(x)); unrepresentable combinations
/// collapse to none.
OverlapClaim compose_claims(const OverlapClaim& inner, const OverlapClaim& outer);

enum class ReductionProperty { witness_isomorphic, overlap_preserving, cover_preserving };

std::string to_string(ReductionProperty p);

/// The produced instance plus a human-readable meaning for every target
/// variable (auxiliaries say so).
using TargetArtifact = std::variant<CspInstance, AStarInstance, Graph>;

/// A reduction bound to one concrete source instance: the transformed
/// target, the witness map with its inverse, the optional cover map, the
/// claimed overlap shape, and the properties the construction claims.
struct Reduction {
    std::string name;
    WitnessSide source;
    WitnessSide target;

    std::function<Assignment(const Assignment&)> map_witness;    // g
    std::function<Assignment(const Assignment&)> invert_witness; // g^-1
    std::function<GeneralizedAssignment(const GeneralizedAssignment&)> map_cover; // optional

    OverlapClaim claim;
    std::vector<ReductionProperty> claimed;

    TargetArtifact target_instance;
    std::vector<std::string> provenance; // per target variable
    std::vector<std::string> notes;

    bool has_cover_map() const { return bool(map_cover); }
};

/// Witness side for a CSP instance of decision or counting kind. Boolean
/// CNF uses the boolean cover predicate; everything else the general one.
/// Counting instances are quotiented by global negation.
WitnessSide csp_witness_side(CspInstance instance, std::string kind_tag);

/// Identity reduction on a CSP instance: target equals source, all maps are
/// the identity.
Reduction identity_reduction(const CspInstance& instance);

/// Identity reduction over an arbitrary witness side (used to compose with
/// reductions whose source is not a CSP instance).
Reduction identity_reduction_on(const WitnessSide& side, TargetArtifact artifact);

/// Sequential composition: apply first, then second. The second reduction
/// must have been built on the first one's target (kinds and witness
/// lengths must agree).
Reduction compose(const Reduction& first, const Reduction& second);

} // namespace geored
