#include "copic/jsonio.hpp"

#include <nlohmann/json.hpp>

#include "copic/errors.hpp"

namespace copic {

namespace {

using nlohmann::json;

Cost parse_cost(const json& j) {
    if (!j.is_string()) throw DomainError("costs must be strings, got " + j.dump());
    return Cost::parse(j.get<std::string>());
}

CostVector parse_cost_array(const json& j, const char* what) {
    if (!j.is_array()) throw DomainError(std::string(what) + " must be an array");
    CostVector out;
    for (const auto& item : j) out.push_back(parse_cost(item));
    return out;
}

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw DomainError(std::string(what) + " must be an integer");
    return j.get<int>();
}

Graph parse_graph(const json& j, bool directed) {
    Graph g;
    g.num_vertices = require_int(j.at("vertices"), "vertices");
    g.directed = directed;
    if (!j.at("edges").is_array()) throw DomainError("edges must be an array");
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw DomainError("each edge must be a pair");
        g.edges.emplace_back(require_int(e[0], "edge endpoint"), require_int(e[1], "edge endpoint"));
    }
    g.check();
    return g;
}

FamilySpec parse_family(const json& j, int ground_size) {
    if (!j.is_object() || !j.contains("kind")) throw DomainError("family must be an object with a kind");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "unconstrained") return FamilySpec::unconstrained(ground_size);
    if (kind == "uniform") return FamilySpec::uniform(ground_size, require_int(j.at("k"), "k"));
    if (kind == "partition") {
        std::vector<IndexSet> parts;
        for (const auto& part : j.at("parts")) {
            IndexSet p;
            for (const auto& e : part) p.push_back(require_int(e, "part element"));
            parts.push_back(canonical_set(std::move(p)));
        }
        std::vector<int> quotas;
        for (const auto& g : j.at("quotas")) quotas.push_back(require_int(g, "quota"));
        return FamilySpec::partition(std::move(parts), std::move(quotas));
    }
    if (kind == "graphic") return FamilySpec::graphic(parse_graph(j, false));
    if (kind == "stpath") {
        bool directed = j.value("directed", false);
        Graph g = parse_graph(j, directed);
        return FamilySpec::st_path(std::move(g), require_int(j.at("s"), "s"), require_int(j.at("t"), "t"));
    }
    if (kind == "pm") return FamilySpec::perfect_matching(require_int(j.at("p"), "p"));
    throw DomainError("unknown family kind '" + kind + "'");
}

json emit_family(const FamilySpec& family) {
    json j;
    switch (family.kind()) {
    case FamilySpec::Kind::Unconstrained:
        j["kind"] = "unconstrained";
        break;
    case FamilySpec::Kind::Uniform:
        j["kind"] = "uniform";
        j["k"] = family.as<UniformMatroid>()->k;
        break;
    case FamilySpec::Kind::Partition: {
        const auto* pm = family.as<PartitionMatroid>();
        j["kind"] = "partition";
        j["parts"] = pm->parts;
        j["quotas"] = pm->quotas;
        break;
    }
    case FamilySpec::Kind::Graphic: {
        const auto* gm = family.as<GraphicMatroid>();
        j["kind"] = "graphic";
        j["vertices"] = gm->graph.num_vertices;
        j["edges"] = json::array();
        for (auto [u, v] : gm->graph.edges) j["edges"].push_back({u, v});
        break;
    }
    case FamilySpec::Kind::StPath: {
        const auto* sp = family.as<StPath>();
        j["kind"] = "stpath";
        j["vertices"] = sp->graph.num_vertices;
        j["edges"] = json::array();
        for (auto [u, v] : sp->graph.edges) j["edges"].push_back({u, v});
        j["directed"] = sp->graph.directed;
        j["s"] = sp->s;
        j["t"] = sp->t;
        break;
    }
    case FamilySpec::Kind::PerfectMatching:
        j["kind"] = "pm";
        j["p"] = family.as<BipartitePerfectMatching>()->side_size;
        break;
    }
    return j;
}

} // namespace

ParsedInstance parse_instance_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("JSON parse error: ") + e.what());
    }
    try {
        ParsedInstance parsed;
        Instance& inst = parsed.instance;
        inst.m = require_int(doc.at("m"), "m");
        inst.n = require_int(doc.at("n"), "n");
        inst.family1 = parse_family(doc.at("family1"), inst.m);
        inst.family2 = parse_family(doc.at("family2"), inst.n);
        inst.c = parse_cost_array(doc.at("c"), "c");
        inst.d = parse_cost_array(doc.at("d"), "d");

        const json& q = doc.at("q");
        if (q.contains("dense")) {
            for (const auto& row : q.at("dense")) inst.q.push_back(parse_cost_array(row, "q row"));
        } else if (q.contains("diag")) {
            CostVector diag = parse_cost_array(q.at("diag"), "q diag");
            if (static_cast<int>(diag.size()) != inst.m || inst.m != inst.n)
                throw DomainError("diag form requires m = n = diag length");
            inst.q = expand_diagonal(DiagonalCosts{diag});
            parsed.diag = std::move(diag);
        } else {
            throw DomainError("q must contain 'dense' or 'diag'");
        }

        auto violations = validate_instance(inst);
        if (!violations.empty()) throw DomainError("invalid instance: " + violations.front());
        return parsed;
    } catch (const json::exception& e) {
        throw DomainError(std::string("instance document error: ") + e.what());
    }
}

std::string emit_instance_json(const Instance& instance, const std::optional<CostVector>& diag) {
    json doc;
    doc["m"] = instance.m;
    doc["n"] = instance.n;
    doc["family1"] = emit_family(instance.family1);
    doc["family2"] = emit_family(instance.family2);
    auto cost_array = [](const CostVector& v) {
        json a = json::array();
        for (const Cost& x : v) a.push_back(x.str());
        return a;
    };
    doc["c"] = cost_array(instance.c);
    doc["d"] = cost_array(instance.d);
    if (diag) {
        doc["q"] = json{{"diag", cost_array(*diag)}};
    } else {
        json rows = json::array();
        for (const auto& row : instance.q) rows.push_back(cost_array(row));
        doc["q"] = json{{"dense", rows}};
    }
    return doc.dump(2) + "\n";
}

KCardCutInstance parse_kcard_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("JSON parse error: ") + e.what());
    }
    try {
        KCardCutInstance inst;
        inst.m = require_int(doc.at("m"), "m");
        inst.n = require_int(doc.at("n"), "n");
        if (!doc.at("k").is_number_integer()) throw DomainError("k must be an integer");
        inst.k = doc.at("k").get<long>();
        for (const auto& row : doc.at("q")) inst.q.push_back(parse_cost_array(row, "q row"));
        if (static_cast<int>(inst.q.size()) != inst.m) throw DomainError("q row count mismatch");
        for (const auto& row : inst.q) {
            if (static_cast<int>(row.size()) != inst.n) throw DomainError("q column count mismatch");
            for (const Cost& v : row)
                if (v.is_infinite()) throw DomainError("k-card cut costs must be finite");
        }
        return inst;
    } catch (const json::exception& e) {
        throw DomainError(std::string("k-card document error: ") + e.what());
    }
}

} // namespace copic
