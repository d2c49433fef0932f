#include "geored/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

#include "geored/pls.hpp"

namespace geored {

using json = nlohmann::ordered_json;

namespace {

Literal literal_from_dimacs(long long lit, int n) {
    long long var = lit < 0 ? -lit : lit;
    if (var == 0 || var > n)
        throw ParseError("literal " + std::to_string(lit) + " out of range for " +
                         std::to_string(n) + " variables");
    return Literal{int(var - 1), lit > 0};
}

long long read_number(std::istringstream& line, const std::string& context) {
    long long x;
    if (!(line >> x)) throw ParseError("expected a number in " + context);
    return x;
}

} // namespace

CspInstance parse_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    bool weighted = false;
    std::vector<std::vector<Literal>> clauses;
    std::vector<std::uint64_t> weights;

    std::vector<long long> pending; // literals of a clause may span lines
    std::optional<std::uint64_t> pending_weight;
    bool expecting_weight = false;

    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            if (n >= 0) throw ParseError("duplicate problem line");
            std::string p, fmt;
            ls >> p >> fmt;
            if (fmt != "cnf" && fmt != "wcnf") throw ParseError("malformed header: expected cnf or wcnf");
            weighted = (fmt == "wcnf");
            long long nn = read_number(ls, "problem line");
            long long mm = read_number(ls, "problem line");
            if (nn < 0 || mm < 0) throw ParseError("malformed header: negative counts");
            n = int(nn);
            expecting_weight = weighted;
            continue;
        }
        if (n < 0) throw ParseError("clause data before the problem line");
        long long x;
        while (ls >> x) {
            if (expecting_weight) {
                if (x <= 0) throw ParseError("clause weight must be positive");
                pending_weight = std::uint64_t(x);
                expecting_weight = false;
                continue;
            }
            if (x == 0) {
                if (pending.empty()) throw ParseError("zero-length clause");
                std::vector<Literal> lits;
                lits.reserve(pending.size());
                for (long long l : pending) lits.push_back(literal_from_dimacs(l, n));
                clauses.push_back(std::move(lits));
                weights.push_back(pending_weight.value_or(1));
                pending.clear();
                pending_weight.reset();
                expecting_weight = weighted;
            } else {
                pending.push_back(x);
            }
        }
    }
    if (n < 0) throw ParseError("missing problem line");
    if (!pending.empty()) throw ParseError("unterminated clause at end of input");

    if (weighted) {
        std::vector<std::pair<std::vector<Literal>, std::uint64_t>> wc;
        for (std::size_t i = 0; i < clauses.size(); ++i) wc.emplace_back(clauses[i], weights[i]);
        return make_weighted_cnf(n, wc);
    }
    return make_cnf(n, clauses);
}

CspInstance parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string to_dimacs(const CspInstance& instance) {
    if (!instance.is_boolean_cnf())
        throw std::invalid_argument("to_dimacs: only boolean clause instances have a DIMACS form");
    bool weighted = instance.kind == InstanceKind::weighted_maxsat;
    std::ostringstream out;
    out << "p " << (weighted ? "wcnf" : "cnf") << " " << instance.n << " "
        << instance.constraints.size() << "\n";
    for (const auto& c : instance.constraints) {
        const auto& cl = std::get<ClauseBody>(c.body);
        if (weighted) out << *c.weight << " ";
        for (const auto& l : cl.literals) out << (l.positive ? l.var + 1 : -(l.var + 1)) << " ";
        out << "0\n";
    }
    return out.str();
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    auto add = [&](long long u, long long v) {
        if (u < 1 || v < 1 || u > n || v > n)
            throw ParseError("edge vertex out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u));
        edges.emplace_back(int(u - 1), int(v - 1));
    };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            ls >> p >> fmt;
            if (fmt != "edge") throw ParseError("malformed header: expected edge format");
            n = int(read_number(ls, "problem line"));
            continue;
        }
        if (line[0] == 'e') {
            if (n < 0) throw ParseError("edge before the problem line");
            char e;
            ls >> e;
            long long u = read_number(ls, "edge line");
            long long v = read_number(ls, "edge line");
            add(u, v);
            continue;
        }
        // bare format: first data line is the vertex count, then "u v" pairs
        if (n < 0) {
            n = int(read_number(ls, "vertex count"));
            continue;
        }
        long long u = read_number(ls, "edge line");
        long long v = read_number(ls, "edge line");
        add(u, v);
    }
    if (n < 0) throw ParseError("missing vertex count");
    return Graph(n, edges);
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertices << " " << g.edges.size() << "\n";
    for (auto [u, v] : g.edges) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

CspInstance csp_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        CspInstance inst;
        inst.n = j.at("n").get<int>();
        const auto& dj = j.at("domain");
        std::optional<std::vector<std::string>> labels;
        if (dj.contains("labels") && !dj.at("labels").is_null())
            labels = dj.at("labels").get<std::vector<std::string>>();
        inst.domain = Domain(dj.at("k").get<int>(), labels);
        inst.kind = instance_kind_from_string(j.at("kind").get<std::string>());
        if (j.contains("provenance")) inst.provenance = j.at("provenance").get<std::string>();
        for (const auto& cj : j.at("constraints")) {
            Constraint c;
            c.scope = cj.at("scope").get<std::vector<int>>();
            const auto& bj = cj.at("body");
            std::string type = bj.at("type").get<std::string>();
            if (type == "clause") {
                ClauseBody body;
                for (const auto& lj : bj.at("literals"))
                    body.literals.push_back(Literal{lj.at(0).get<int>(), lj.at(1).get<bool>()});
                c.body = std::move(body);
            } else if (type == "extensional") {
                ExtensionalBody body;
                for (const auto& tj : bj.at("allowed")) {
                    Assignment tuple;
                    for (const auto& vj : tj) tuple.push_back(Value(vj.get<int>()));
                    body.allowed.push_back(std::move(tuple));
                }
                c.body = std::move(body);
            } else if (type == "counting") {
                c.body = CountingBody{bj.at("target").get<int>()};
            } else {
                throw ParseError("unknown constraint body type: " + type);
            }
            if (cj.contains("weight") && !cj.at("weight").is_null())
                c.weight = cj.at("weight").get<std::uint64_t>();
            inst.constraints.push_back(std::move(c));
        }
        inst.validate();
        return inst;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad instance JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    }
}

std::string csp_to_json(const CspInstance& instance) {
    json j;
    j["schema"] = "geored.csp/1";
    j["n"] = instance.n;
    j["domain"]["k"] = instance.domain.k;
    j["domain"]["labels"] = instance.domain.labels ? json(*instance.domain.labels) : json(nullptr);
    j["kind"] = to_string(instance.kind);
    j["constraints"] = json::array();
    for (const auto& c : instance.constraints) {
        json cj;
        cj["scope"] = c.scope;
        if (const auto* cl = std::get_if<ClauseBody>(&c.body)) {
            cj["body"]["type"] = "clause";
            auto lits = json::array();
            for (const auto& l : cl->literals) lits.push_back(json::array({l.var, l.positive}));
            cj["body"]["literals"] = std::move(lits);
        } else if (const auto* ex = std::get_if<ExtensionalBody>(&c.body)) {
            cj["body"]["type"] = "extensional";
            auto allowed = json::array();
            for (const auto& tuple : ex->allowed) {
                auto tj = json::array();
                for (Value v : tuple) tj.push_back(int(v));
                allowed.push_back(std::move(tj));
            }
            cj["body"]["allowed"] = std::move(allowed);
        } else {
            cj["body"]["type"] = "counting";
            cj["body"]["target"] = std::get<CountingBody>(c.body).target;
        }
        if (c.weight) cj["weight"] = *c.weight;
        j["constraints"].push_back(std::move(cj));
    }
    if (!instance.provenance.empty()) j["provenance"] = instance.provenance;
    return j.dump(2) + "\n";
}

std::string assignment_to_string(const Assignment& a, const Domain& domain) {
    std::ostringstream out;
    if (domain.k <= 10) {
        for (Value v : a) out << int(v);
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) out << ",";
            out << int(a[i]);
        }
    }
    return out.str();
}

Assignment assignment_from_string(const std::string& s, const Domain& domain, int n) {
    Assignment a;
    if (domain.k <= 10) {
        for (char ch : s) {
            if (ch < '0' || ch >= '0' + domain.k) throw ParseError("bad assignment digit");
            a.push_back(Value(ch - '0'));
        }
    } else {
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            int v = std::stoi(tok);
            if (v < 0 || v >= domain.k) throw ParseError("assignment value out of domain");
            a.push_back(Value(v));
        }
    }
    if (int(a.size()) != n) throw ParseError("assignment length mismatch");
    return a;
}

std::string generalized_to_string(const GeneralizedAssignment& g, const Domain& domain) {
    std::ostringstream out;
    if (domain.k == 2 && !domain.labels) {
        for (ValueMask m : g.sets) out << (m == 1 ? '0' : m == 2 ? '1' : '*');
        return out.str();
    }
    for (std::size_t i = 0; i < g.sets.size(); ++i) {
        if (i) out << ";";
        out << "{";
        bool first = true;
        for (Value v = 0; int(v) < domain.k; ++v) {
            if (!g.allows(i, v)) continue;
            if (!first) out << ",";
            out << domain.label_of(v);
            first = false;
        }
        out << "}";
    }
    return out.str();
}

GeneralizedAssignment generalized_from_string(const std::string& s, const Domain& domain, int n) {
    std::vector<ValueMask> sets;
    if (domain.k == 2 && !domain.labels) {
        for (char ch : s) {
            if (ch == '0') sets.push_back(1);
            else if (ch == '1') sets.push_back(2);
            else if (ch == '*') sets.push_back(3);
            else throw ParseError("bad cover symbol, expected 0, 1 or *");
        }
    } else {
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ';')) {
            if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}')
                throw ParseError("bad value set, expected {a,b,...}");
            ValueMask m = 0;
            std::istringstream ts(tok.substr(1, tok.size() - 2));
            std::string label;
            while (std::getline(ts, label, ',')) {
                bool found = false;
                for (Value v = 0; int(v) < domain.k; ++v) {
                    if (domain.label_of(v) == label) {
                        m |= ValueMask(1) << v;
                        found = true;
                        break;
                    }
                }
                if (!found) throw ParseError("unknown domain label: " + label);
            }
            if (m == 0) throw ParseError("empty value set");
            sets.push_back(m);
        }
    }
    if (int(sets.size()) != n) throw ParseError("generalized assignment length mismatch");
    return GeneralizedAssignment(std::move(sets));
}

std::string cover_to_json(const GeneralizedAssignment& g, const Domain& domain) {
    json j = json::array();
    for (std::size_t i = 0; i < g.sets.size(); ++i) {
        json labels = json::array();
        for (Value v = 0; int(v) < domain.k; ++v)
            if (g.allows(i, v)) labels.push_back(domain.label_of(v));
        j.push_back(std::move(labels));
    }
    return j.dump() + "\n";
}

GeneralizedAssignment cover_from_json(const std::string& text, const Domain& domain, int n) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid cover JSON: ") + e.what());
    }
    if (!j.is_array() || int(j.size()) != n) throw ParseError("cover JSON length mismatch");
    std::vector<ValueMask> sets;
    for (const auto& labels : j) {
        ValueMask m = 0;
        for (const auto& lj : labels) {
            std::string label = lj.get<std::string>();
            bool found = false;
            for (Value v = 0; int(v) < domain.k; ++v) {
                if (domain.label_of(v) == label) {
                    m |= ValueMask(1) << v;
                    found = true;
                    break;
                }
            }
            if (!found) throw ParseError("unknown domain label: " + label);
        }
        if (m == 0) throw ParseError("empty value set in cover JSON");
        sets.push_back(m);
    }
    return GeneralizedAssignment(std::move(sets));
}

std::string path_to_json(const PathWitness& w) {
    json j;
    j["start"] = assignment_to_string(w.start, Domain(2));
    j["flips"] = w.flips;
    return j.dump() + "\n";
}

PathWitness path_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid path JSON: ") + e.what());
    }
    try {
        PathWitness w;
        std::string start = j.at("start").get<std::string>();
        w.start = assignment_from_string(start, Domain(2), int(start.size()));
        w.flips = j.at("flips").get<std::vector<int>>();
        return w;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad path JSON: ") + e.what());
    }
}

} // namespace geored
