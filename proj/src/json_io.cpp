#include "pmd/json_io.hpp"

namespace pmd {

namespace {

[[noreturn]] void bad(const std::string& what) {
    fail(Errc::parse_error, what);
}

json edges_to_json(const EdgeList& edges) {
    json out = json::array();
    for (const Edge& e : edges)
        out.push_back(e);
    return out;
}

EdgeList edges_from_json(const json& j, const char* where) {
    if (!j.is_array())
        bad(std::string(where) + " must be an array of edges");
    EdgeList edges;
    for (const json& item : j) {
        if (!item.is_array())
            bad(std::string(where) + " entries must be vertex arrays");
        Edge e;
        for (const json& v : item) {
            if (!v.is_number_integer())
                bad("vertices must be integers");
            e.push_back(v.get<int>());
        }
        edges.push_back(std::move(e));
    }
    return edges;
}

} // namespace

json hypergraph_to_json(const Hypergraph& h) {
    json out;
    out["n"] = h.vertex_count();
    out["edges"] = edges_to_json(h.edges());
    if (h.edges().empty())
        out["r"] = h.uniformity();
    return out;
}

Hypergraph hypergraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        bad("hypergraph needs fields n and edges");
    if (!j["n"].is_number_integer())
        bad("n must be an integer");
    const int declared = j.value("r", 0);
    return Hypergraph(j["n"].get<int>(), edges_from_json(j["edges"], "edges"), declared);
}

json matching_to_json(const Matching& m) {
    return json{{"edges", edges_to_json(m.edges())}};
}

Matching matching_from_json(const Hypergraph& host, const json& j) {
    if (!j.is_object() || !j.contains("edges"))
        bad("matching needs field edges");
    return Matching(host, edges_from_json(j["edges"], "edges"));
}

json certificate_to_json(const WeightCertificate& w) {
    json weights = json::object();
    for (const auto& [v, q] : w.weights)
        weights[std::to_string(v)] = rational_to_string(q);
    return json{{"weights", weights}};
}

WeightCertificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("weights") || !j["weights"].is_object())
        bad("certificate needs object field weights");
    WeightCertificate w;
    for (const auto& [key, value] : j["weights"].items()) {
        if (!value.is_string())
            bad("weights must be fraction strings");
        std::size_t used = 0;
        int vertex = 0;
        try {
            vertex = std::stoi(key, &used);
        } catch (const std::exception&) {
            bad("weight key '" + key + "' is not a vertex");
        }
        if (used != key.size())
            bad("weight key '" + key + "' is not a vertex");
        w.weights[vertex] = rational_from_string(value.get<std::string>());
    }
    return w;
}

json walk_witness_to_json(const WalkWitness& w) {
    json steps = json::array();
    for (const WalkStep& s : w.steps)
        steps.push_back(json{{"vertex", s.entry}, {"edge", s.edge}, {"in_matching", s.in_matching}});
    return json{{"walk", steps}};
}

WalkWitness walk_witness_from_json(const json& j) {
    if (!j.is_object() || !j.contains("walk") || !j["walk"].is_array())
        bad("witness needs array field walk");
    WalkWitness w;
    for (const json& s : j["walk"]) {
        if (!s.is_object() || !s.contains("vertex") || !s.contains("edge") ||
            !s.contains("in_matching"))
            bad("walk steps need vertex, edge, in_matching");
        WalkStep step;
        step.entry = s["vertex"].get<int>();
        for (const json& v : s["edge"])
            step.edge.push_back(v.get<int>());
        step.in_matching = s["in_matching"].get<bool>();
        w.steps.push_back(std::move(step));
    }
    return w;
}

json regular_witness_to_json(const RegularWitness& w) {
    json degrees = json::object();
    for (std::size_t i = 0; i < w.degrees.size(); ++i)
        degrees[std::to_string(i)] = w.degrees[i];
    return json{{"inner", edges_to_json(w.inner)},
                {"outer", edges_to_json(w.outer)},
                {"degrees", degrees}};
}

RegularWitness regular_witness_from_json(const json& j) {
    if (!j.is_object() || !j.contains("inner") || !j.contains("outer") || !j.contains("degrees"))
        bad("regular witness needs inner, outer, degrees");
    RegularWitness w;
    w.inner = edges_from_json(j["inner"], "inner");
    w.outer = edges_from_json(j["outer"], "outer");
    w.degrees.assign(w.inner.size(), 0);
    for (const auto& [key, value] : j["degrees"].items()) {
        const std::size_t idx = static_cast<std::size_t>(std::stoul(key));
        if (idx >= w.degrees.size())
            bad("degree key out of range");
        w.degrees[idx] = value.get<int>();
    }
    return w;
}

json decomposition_to_json(const PmDecomposition& d) {
    json parts = json::array();
    for (const CertifiedPart& cp : d.parts)
        parts.push_back(json{{"key", cp.part.key},
                             {"edges", edges_to_json(cp.part.edges)},
                             {"certificate", certificate_to_json(cp.certificate)},
                             {"provenance", provenance_name(cp.provenance)}});
    return json{{"host", hypergraph_to_json(d.host)},
                {"parts", parts},
                {"count", d.parts.size()}};
}

PmDecomposition decomposition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("host") || !j.contains("parts"))
        bad("decomposition needs host and parts");
    PmDecomposition d;
    d.host = hypergraph_from_json(j["host"]);
    for (const json& p : j["parts"]) {
        if (!p.is_object() || !p.contains("edges") || !p.contains("certificate"))
            bad("parts need edges and certificate");
        CertifiedPart cp;
        if (p.contains("key"))
            for (const json& k : p["key"])
                cp.part.key.push_back(k.get<int>());
        cp.part.edges = edges_from_json(p["edges"], "part edges");
        cp.certificate = certificate_from_json(p["certificate"]);
        cp.provenance = provenance_from_name(p.value("provenance", "LP-fallback"));
        d.parts.push_back(std::move(cp));
    }
    if (j.contains("count") && j["count"].get<std::size_t>() != d.parts.size())
        bad("count disagrees with the part list");
    return d;
}

json lss_presentation_to_json(const LssPresentation& p) {
    json generators = json::array();
    for (const auto& gen : p.generators) {
        json monos = json::array();
        for (const LssMonomial& mono : gen) {
            json vars = json::array();
            for (const auto& [i, jx] : mono.vars)
                vars.push_back(json::array({i, jx}));
            monos.push_back(json{{"vars", vars}});
        }
        generators.push_back(monos);
    }
    return json{{"n", p.n}, {"d", p.d}, {"r", p.r}, {"generators", generators}};
}

LssPresentation lss_presentation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("r") ||
        !j.contains("generators"))
        bad("presentation needs n, d, r, generators");
    LssPresentation p;
    p.n = j["n"].get<int>();
    p.d = j["d"].get<int>();
    p.r = j["r"].get<int>();
    for (const json& gen : j["generators"]) {
        std::vector<LssMonomial> monos;
        for (const json& m : gen) {
            LssMonomial mono;
            for (const json& v : m.at("vars"))
                mono.vars.emplace_back(v.at(0).get<int>(), v.at(1).get<int>());
            monos.push_back(std::move(mono));
        }
        p.generators.push_back(std::move(monos));
    }
    return p;
}

} // namespace pmd
