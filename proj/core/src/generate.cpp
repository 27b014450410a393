#include "copic/generate.hpp"

#include <algorithm>
#include <random>

#include "copic/errors.hpp"
#include "copic/jsonio.hpp"

namespace copic {

namespace {

/// mt19937_64 draws reduced by modulo; the sequence is pinned by the C++
/// standard, so output is identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    long uniform(long lo, long hi) {
        if (lo > hi) throw DomainError("empty cost range");
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }
    Cost cost(long lo, long hi) { return Cost(uniform(lo, hi)); }

private:
    std::mt19937_64 engine_;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        if (end == std::string::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DomainError(std::string("invalid integer for ") + what + ": '" + s + "'");
    }
}

FamilySpec build_family(const std::string& spec, int size, Rng& rng) {
    auto fields = split(spec, ':');
    const std::string& kind = fields[0];

    if (kind == "unconstrained") {
        if (size < 0) throw DomainError("unconstrained family needs an explicit ground size");
        return FamilySpec::unconstrained(size);
    }
    if (kind == "uniform") {
        if (fields.size() != 2) throw DomainError("uniform family spec is uniform:K");
        if (size < 0) throw DomainError("uniform family needs an explicit ground size");
        return FamilySpec::uniform(size, parse_int(fields[1], "k"));
    }
    if (kind == "partition") {
        if (fields.size() != 2) throw DomainError("partition family spec is partition:S0.Q0,S1.Q1,...");
        std::vector<IndexSet> parts;
        std::vector<int> quotas;
        int next = 0;
        for (const std::string& block : split(fields[1], ',')) {
            auto dot = block.find('.');
            if (dot == std::string::npos) throw DomainError("partition blocks look like SIZE.QUOTA");
            int block_size = parse_int(block.substr(0, dot), "part size");
            quotas.push_back(parse_int(block.substr(dot + 1), "quota"));
            IndexSet part;
            for (int i = 0; i < block_size; ++i) part.push_back(next++);
            parts.push_back(std::move(part));
        }
        if (size >= 0 && size != next) throw DomainError("partition blocks do not sum to the ground size");
        return FamilySpec::partition(std::move(parts), std::move(quotas));
    }
    if (kind == "graphic") {
        if (fields.size() < 2) throw DomainError("graphic family spec is graphic:complete:P or graphic:random:V");
        if (fields[1] == "complete") {
            if (fields.size() != 3) throw DomainError("graphic:complete:P");
            return FamilySpec::graphic(Graph::complete(parse_int(fields[2], "P")));
        }
        if (fields[1] == "random") {
            if (fields.size() != 3) throw DomainError("graphic:random:V");
            int v = parse_int(fields[2], "V");
            if (size < v - 1) throw DomainError("graphic:random needs at least V-1 edges");
            Graph g;
            g.num_vertices = v;
            for (int i = 1; i < v; ++i) g.edges.emplace_back(static_cast<int>(rng.uniform(0, i - 1)), i);
            while (g.num_edges() < size) {
                int a = static_cast<int>(rng.uniform(0, v - 1));
                int b = static_cast<int>(rng.uniform(0, v - 1));
                if (a == b) continue;
                g.edges.emplace_back(std::min(a, b), std::max(a, b));
            }
            return FamilySpec::graphic(std::move(g));
        }
        throw DomainError("unknown graphic family variant '" + fields[1] + "'");
    }
    if (kind == "stpath") {
        if (fields.size() < 3 || fields[1] != "random")
            throw DomainError("stpath family spec is stpath:random:V[:directed]");
        int v = parse_int(fields[2], "V");
        bool directed = fields.size() == 4 && fields[3] == "directed";
        if (fields.size() > 4 || (fields.size() == 4 && !directed))
            throw DomainError("stpath family spec is stpath:random:V[:directed]");
        if (v < 2) throw DomainError("stpath needs at least two vertices");
        if (size < v - 1) throw DomainError("stpath:random needs at least V-1 edges");
        Graph g;
        g.num_vertices = v;
        g.directed = directed;
        // Seed a 0 -> V-1 path through a shuffled interior, then pad.
        std::vector<int> interior;
        for (int x = 1; x + 1 < v; ++x) interior.push_back(x);
        for (std::size_t i = interior.size(); i > 1; --i)
            std::swap(interior[i - 1], interior[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1))]);
        int prev = 0;
        for (int x : interior) {
            g.edges.emplace_back(prev, x);
            prev = x;
        }
        g.edges.emplace_back(prev, v - 1);
        while (g.num_edges() < size) {
            int a = static_cast<int>(rng.uniform(0, v - 1));
            int b = static_cast<int>(rng.uniform(0, v - 1));
            if (a == b) continue;
            g.edges.emplace_back(a, b);
        }
        return FamilySpec::st_path(std::move(g), 0, v - 1);
    }
    if (kind == "pm") {
        if (fields.size() != 2) throw DomainError("pm family spec is pm:P");
        return FamilySpec::perfect_matching(parse_int(fields[1], "P"));
    }
    throw DomainError("unknown family kind '" + kind + "'");
}

int implied_size(const std::string& spec) {
    auto fields = split(spec, ':');
    if (fields[0] == "partition" && fields.size() == 2) {
        int total = 0;
        for (const std::string& block : split(fields[1], ','))
            total += parse_int(block.substr(0, block.find('.')), "part size");
        return total;
    }
    if (fields[0] == "graphic" && fields.size() == 3 && fields[1] == "complete") {
        int p = parse_int(fields[2], "P");
        return p * (p - 1) / 2;
    }
    if (fields[0] == "pm" && fields.size() == 2) {
        int p = parse_int(fields[1], "P");
        return p * p;
    }
    return -1;
}

/// A random matrix whose sums over the family's members are constant per
/// line: zero for unconstrained (and undirected paths), per-line constants
/// for fixed-cardinality families, potential differences for directed paths.
CostMatrix cvp_component(const FamilySpec& family, int lines, bool family_is_side1, Rng& rng,
                         long lo, long hi) {
    const int ground = family.ground_size();
    CostMatrix component(static_cast<std::size_t>(family_is_side1 ? ground : lines),
                         CostVector(static_cast<std::size_t>(family_is_side1 ? lines : ground), Cost(0)));
    auto entry = [&](int elem, int line) -> Cost& {
        return family_is_side1 ? component[static_cast<std::size_t>(elem)][static_cast<std::size_t>(line)]
                               : component[static_cast<std::size_t>(line)][static_cast<std::size_t>(elem)];
    };
    switch (family.kind()) {
    case FamilySpec::Kind::Unconstrained:
        break; // only the zero matrix has constant sums
    case FamilySpec::Kind::StPath: {
        const auto* sp = family.as<StPath>();
        if (!sp->graph.directed) break; // undirected paths: use zero
        for (int line = 0; line < lines; ++line) {
            CostVector phi(static_cast<std::size_t>(sp->graph.num_vertices));
            for (auto& v : phi) v = rng.cost(lo, hi);
            for (int e = 0; e < ground; ++e) {
                auto [u, w] = sp->graph.edges[static_cast<std::size_t>(e)];
                entry(e, line) = phi[static_cast<std::size_t>(w)] - phi[static_cast<std::size_t>(u)];
            }
        }
        break;
    }
    default:
        // Fixed-cardinality family: constant columns work.
        for (int line = 0; line < lines; ++line) {
            Cost v = rng.cost(lo, hi);
            for (int e = 0; e < ground; ++e) entry(e, line) = v;
        }
        break;
    }
    return component;
}

} // namespace

std::string generate_instance_json(const GenOptions& options) {
    Rng rng(options.seed);

    int m = options.m >= 0 ? options.m : implied_size(options.family1);
    int n = options.n >= 0 ? options.n : implied_size(options.family2);
    if (m < 0 || n < 0) throw DomainError("ground sizes are required (m/n or implied by the family)");
    {
        int implied = implied_size(options.family1);
        if (implied >= 0 && implied != m) throw DomainError("m conflicts with the family1 spec");
        implied = implied_size(options.family2);
        if (implied >= 0 && implied != n) throw DomainError("n conflicts with the family2 spec");
    }

    Instance inst;
    inst.m = m;
    inst.n = n;
    inst.family1 = build_family(options.family1, m, rng);
    inst.family2 = build_family(options.family2, n, rng);

    const long lo = options.cost_lo, hi = options.cost_hi;
    inst.c.resize(static_cast<std::size_t>(m));
    for (auto& v : inst.c) v = rng.cost(lo, hi);
    inst.d.resize(static_cast<std::size_t>(n));
    for (auto& v : inst.d) v = rng.cost(lo, hi);

    std::optional<CostVector> diag_form;
    const std::string& structure = options.structure;
    if (structure == "random") {
        inst.q.assign(static_cast<std::size_t>(m), CostVector(static_cast<std::size_t>(n)));
        for (auto& row : inst.q)
            for (auto& v : row) v = rng.cost(lo, hi);
    } else if (structure.rfind("rank:", 0) == 0) {
        int r = parse_int(structure.substr(5), "rank");
        if (r < 0) throw DomainError("rank must be nonnegative");
        inst.q.assign(static_cast<std::size_t>(m), CostVector(static_cast<std::size_t>(n), Cost(0)));
        for (int p = 0; p < r; ++p) {
            CostVector a(static_cast<std::size_t>(m)), b(static_cast<std::size_t>(n));
            for (auto& v : a) v = rng.cost(lo, hi);
            for (auto& v : b) v = rng.cost(lo, hi);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j)
                    inst.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    } else if (structure == "diagonal") {
        if (m != n) throw DomainError("diagonal structure requires m = n");
        CostVector diag(static_cast<std::size_t>(n));
        for (auto& v : diag) v = rng.cost(lo, hi);
        inst.q = expand_diagonal(DiagonalCosts{diag});
        diag_form = std::move(diag);
    } else if (structure == "linearizable") {
        CostMatrix e = cvp_component(inst.family1, n, true, rng, lo, hi);
        CostMatrix f = cvp_component(inst.family2, m, false, rng, lo, hi);
        inst.q.assign(static_cast<std::size_t>(m), CostVector(static_cast<std::size_t>(n)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                inst.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                    f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    } else {
        throw DomainError("unknown structure '" + structure + "'");
    }

    auto violations = validate_instance(inst);
    if (!violations.empty()) throw DomainError("generated instance invalid: " + violations.front());
    return emit_instance_json(inst, diag_form);
}

} // namespace copic
