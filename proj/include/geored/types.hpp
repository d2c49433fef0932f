#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace geored {

/// A domain value, canonically one of 0..k-1.
using Value = std::uint8_t;

/// A total assignment: one value per variable, lexicographic order on the
/// value sequence is the canonical order everywhere.
using Assignment = std::vector<Value>;

/// Nonempty subset of domain values as a bitmask (bit d = value d allowed).
/// Supports k up to 31.
using ValueMask = std::uint32_t;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an enumeration would exceed its candidate budget. Carries the
/// budget that would have been required, so callers can distinguish refusal
/// from an empty result.
struct BudgetError : std::runtime_error {
    BudgetError(std::uint64_t required_, std::uint64_t budget_)
        : std::runtime_error("candidate space of size " + std::to_string(required_) +
                             " exceeds budget " + std::to_string(budget_)),
          required(required_), budget(budget_) {}
    std::uint64_t required;
    std::uint64_t budget;
};

/// Finite value domain. Values are 0..k-1; labels, when present, give them
/// external names (counting constraints require labels -1, 0, 1).
struct Domain {
    int k = 2;
    std::optional<std::vector<std::string>> labels;

    explicit Domain(int size = 2, std::optional<std::vector<std::string>> names = std::nullopt)
        : k(size), labels(std::move(names)) {
        if (k < 2) throw std::invalid_argument("domain size must be at least 2");
        if (k > 31) throw std::invalid_argument("domain size above 31 is not supported");
        if (labels) {
            if (static_cast<int>(labels->size()) != k)
                throw std::invalid_argument("label count must equal domain size");
            for (std::size_t i = 0; i < labels->size(); ++i)
                for (std::size_t j = i + 1; j < labels->size(); ++j)
                    if ((*labels)[i] == (*labels)[j])
                        throw std::invalid_argument("domain labels must be distinct");
        }
    }

    /// Domain {0..2} labeled -1, 0, 1 as used by counting constraints.
    static Domain counting() { return Domain(3, std::vector<std::string>{"-1", "0", "1"}); }

    /// Domain {0,1} labeled -1, +1 as used by graph bisection witnesses.
    static Domain sign() { return Domain(2, std::vector<std::string>{"-1", "1"}); }

    bool is_counting_labels() const {
        return labels && *labels == std::vector<std::string>{"-1", "0", "1"};
    }

    std::string label_of(Value v) const {
        if (labels) return (*labels)[v];
        return std::to_string(int(v));
    }

    ValueMask full_mask() const { return (ValueMask(1) << k) - 1; }

    friend bool operator==(const Domain&, const Domain&) = default;
};

/// Per-variable nonempty sets of allowed values; an ordinary assignment is
/// the all-singleton case. The boolean * symbol is the set {0,1}.
struct GeneralizedAssignment {
    std::vector<ValueMask> sets;

    GeneralizedAssignment() = default;
    explicit GeneralizedAssignment(std::vector<ValueMask> s) : sets(std::move(s)) {
        for (ValueMask m : sets)
            if (m == 0) throw std::invalid_argument("generalized assignment: empty value set");
    }

    /// All-singleton lift of an assignment.
    static GeneralizedAssignment of(const Assignment& a) {
        std::vector<ValueMask> s(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) s[i] = ValueMask(1) << a[i];
        return GeneralizedAssignment(std::move(s));
    }

    /// Every variable allowed every value of a k-sized domain.
    static GeneralizedAssignment full(std::size_t n, int k) {
        return GeneralizedAssignment(std::vector<ValueMask>(n, (ValueMask(1) << k) - 1));
    }

    std::size_t size() const { return sets.size(); }

    bool allows(std::size_t var, Value v) const { return (sets[var] >> v) & 1u; }
    bool is_singleton(std::size_t var) const { return (sets[var] & (sets[var] - 1)) == 0; }
    Value singleton_value(std::size_t var) const {
        if (!is_singleton(var)) throw std::logic_error("value set is not a singleton");
        Value v = 0;
        while (!((sets[var] >> v) & 1u)) ++v;
        return v;
    }

    bool is_assignment() const {
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (!is_singleton(i)) return false;
        return true;
    }

    Assignment to_assignment() const {
        Assignment a(sets.size());
        for (std::size_t i = 0; i < sets.size(); ++i) a[i] = singleton_value(i);
        return a;
    }

    friend bool operator==(const GeneralizedAssignment&, const GeneralizedAssignment&) = default;
    friend auto operator<=>(const GeneralizedAssignment& a, const GeneralizedAssignment& b) {
        return a.sets <=> b.sets;
    }
};

/// Undirected graph without self-loops or duplicate edges. Edges are stored
/// with u < v, sorted.
struct Graph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> es) : vertices(n) {
        edges.reserve(es.size());
        for (auto [u, v] : es) add_edge(u, v);
        canonicalize();
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("graph: self-loop on vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= vertices || v >= vertices)
            throw std::invalid_argument("graph: vertex index out of range");
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }

    /// Sorts and deduplicates the edge list.
    void canonicalize();

    bool has_edge(int u, int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;
};

/// Self-inverse value permutation, e.g. -1 <-> +1 with 0 fixed. Used to
/// quotient witness spaces by global negation.
struct Involution {
    std::vector<Value> table;

    explicit Involution(std::vector<Value> t) : table(std::move(t)) {
        for (std::size_t v = 0; v < table.size(); ++v) {
            if (table[v] >= table.size() || table[table[v]] != v)
                throw std::invalid_argument("involution must be a self-inverse value permutation");
        }
    }

    /// 0 <-> 1 (two-valued sign domains).
    static Involution sign_flip() { return Involution({1, 0}); }
    /// -1 <-> +1 with 0 fixed (counting domains, values 0,1,2).
    static Involution counting_negation() { return Involution({2, 1, 0}); }

    Value operator()(Value v) const { return table[v]; }

    Assignment apply(const Assignment& a) const {
        Assignment out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = table[a[i]];
        return out;
    }

    ValueMask apply(ValueMask m) const {
        ValueMask out = 0;
        for (std::size_t v = 0; v < table.size(); ++v)
            if ((m >> v) & 1u) out |= ValueMask(1) << table[v];
        return out;
    }

    GeneralizedAssignment apply(const GeneralizedAssignment& g) const {
        std::vector<ValueMask> s(g.sets.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = apply(g.sets[i]);
        return GeneralizedAssignment(std::move(s));
    }

    /// Lexicographically smaller of a and its image; the canonical
    /// representative of a's negation class.
    Assignment canonical(const Assignment& a) const {
        Assignment b = apply(a);
        return b < a ? b : a;
    }
};

} // namespace geored
