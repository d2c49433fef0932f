#include "geored/reduction.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace geored {

Rational OverlapClaim::apply(const Rational& x) const {
    switch (kind) {
        case Kind::identity: return x;
        case Kind::scale: return x * factor;
        case Kind::square: return x * x;
        case Kind::none: break;
    }
    throw std::logic_error("overlap claim has no value");
}

std::string OverlapClaim::str() const {
    switch (kind) {
        case Kind::none: return "none";
        case Kind::identity: return "identity";
        case Kind::scale: return "scale(" + factor.str() + ")";
        case Kind::square: return "square";
    }
    throw std::logic_error("unreachable");
}

OverlapClaim compose_claims(const OverlapClaim& inner, const OverlapClaim& outer) {
    using K = OverlapClaim::Kind;
    if (inner.kind == K::none || outer.kind == K::none) return OverlapClaim::none();
    if (inner.kind == K::identity) return outer;
    if (outer.kind == K::identity) return inner;
    if (inner.kind == K::scale && outer.kind == K::scale)
        return OverlapClaim::scale(inner.factor * outer.factor);
    return OverlapClaim::none(); // square/scale mixtures have no tagged form
}

std::string to_string(ReductionProperty p) {
    switch (p) {
        case ReductionProperty::witness_isomorphic: return "witness-isomorphic";
        case ReductionProperty::overlap_preserving: return "overlap-preserving";
        case ReductionProperty::cover_preserving: return "cover-preserving";
    }
    throw std::logic_error("unreachable");
}

WitnessSide csp_witness_side(CspInstance instance, std::string kind_tag) {
    instance.validate();
    auto shared = std::make_shared<const CspInstance>(std::move(instance));
    WitnessSide side;
    side.kind = std::move(kind_tag);
    side.witness_length = std::size_t(shared->n);
    side.domain = shared->domain;

    bool counting = shared->kind == InstanceKind::counting_csp;
    if (counting) {
        side.metric = OverlapMetricKind::mod_negation;
        side.involution = Involution::counting_negation();
    }

    if (counting) {
        auto inv = *side.involution;
        side.enumerate_witnesses = [shared, inv](std::uint64_t budget) {
            auto all = enumerate_solutions(*shared, budget);
            for (auto& a : all) a = inv.canonical(a);
            std::sort(all.begin(), all.end());
            all.erase(std::unique(all.begin(), all.end()), all.end());
            return all;
        };
    } else {
        side.enumerate_witnesses = [shared](std::uint64_t budget) {
            return enumerate_solutions(*shared, budget);
        };
    }
    side.is_witness = [shared](const Assignment& a) {
        return a.size() == std::size_t(shared->n) && evaluate(*shared, a);
    };

    if (shared->kind != InstanceKind::weighted_maxsat) {
        CoverPredicate predicate =
            shared->is_boolean_cnf() ? CoverPredicate::boolean : CoverPredicate::general;
        side.enumerate_covers = [shared, predicate](std::uint64_t budget) {
            return enumerate_covers(*shared, budget, predicate);
        };
        side.cover_predicate = [shared, predicate](const GeneralizedAssignment& sigma) {
            return check_cover(*shared, sigma, predicate);
        };
    }
    return side;
}

Reduction identity_reduction_on(const WitnessSide& side, TargetArtifact artifact) {
    Reduction r;
    r.name = "identity";
    r.source = side;
    r.target = side;
    r.map_witness = [](const Assignment& a) { return a; };
    r.invert_witness = [](const Assignment& a) { return a; };
    r.map_cover = [](const GeneralizedAssignment& g) { return g; };
    r.claim = OverlapClaim::identity();
    r.claimed = {ReductionProperty::witness_isomorphic, ReductionProperty::overlap_preserving,
                 ReductionProperty::cover_preserving};
    r.target_instance = std::move(artifact);
    return r;
}

Reduction identity_reduction(const CspInstance& instance) {
    WitnessSide side = csp_witness_side(instance, "csp");
    return identity_reduction_on(side, instance);
}

Reduction compose(const Reduction& first, const Reduction& second) {
    if (first.target.kind != second.source.kind ||
        first.target.witness_length != second.source.witness_length ||
        first.target.metric != second.source.metric)
        throw std::invalid_argument("compose: target of '" + first.name +
                                    "' does not match source of '" + second.name + "'");
    Reduction r;
    r.name = first.name + ">" + second.name;
    r.source = first.source;
    r.target = second.target;

    auto g1 = first.map_witness, g2 = second.map_witness;
    r.map_witness = [g1, g2](const Assignment& a) { return g2(g1(a)); };
    auto i1 = first.invert_witness, i2 = second.invert_witness;
    r.invert_witness = [i1, i2](const Assignment& a) { return i1(i2(a)); };
    if (first.map_cover && second.map_cover) {
        auto c1 = first.map_cover, c2 = second.map_cover;
        r.map_cover = [c1, c2](const GeneralizedAssignment& g) { return c2(c1(g)); };
    }
    r.claim = compose_claims(first.claim, second.claim);

    for (auto p : first.claimed)
        if (std::find(second.claimed.begin(), second.claimed.end(), p) != second.claimed.end())
            r.claimed.push_back(p);

    r.target_instance = second.target_instance;
    r.provenance = second.provenance;
    r.notes = first.notes;
    r.notes.insert(r.notes.end(), second.notes.begin(), second.notes.end());
    return r;
}

} // namespace geored
