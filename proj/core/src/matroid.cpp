#include "copic/matroid.hpp"

#include "copic/errors.hpp"
#include "copic/graph_algos.hpp"

namespace copic {

namespace {

class UniformOracle final : public MatroidOracle {
public:
    UniformOracle(int n, int k) : n_(n), k_(k) {}
    bool is_independent(const IndexSet& s) const override {
        return static_cast<int>(s.size()) <= k_;
    }
    int ground_size() const override { return n_; }
    int rank() const override { return k_; }

private:
    int n_, k_;
};

class PartitionOracle final : public MatroidOracle {
public:
    PartitionOracle(const PartitionMatroid& pm, int ground_size)
        : part_of_(static_cast<std::size_t>(ground_size), -1), quotas_(pm.quotas), ground_(ground_size) {
        for (std::size_t p = 0; p < pm.parts.size(); ++p)
            for (int e : pm.parts[p]) part_of_[static_cast<std::size_t>(e)] = static_cast<int>(p);
        rank_ = 0;
        for (int g : quotas_) rank_ += g;
    }
    bool is_independent(const IndexSet& s) const override {
        std::vector<int> used(quotas_.size(), 0);
        for (int e : s) {
            int p = part_of_[static_cast<std::size_t>(e)];
            if (++used[static_cast<std::size_t>(p)] > quotas_[static_cast<std::size_t>(p)]) return false;
        }
        return true;
    }
    int ground_size() const override { return ground_; }
    int rank() const override { return rank_; }

private:
    std::vector<int> part_of_;
    std::vector<int> quotas_;
    int ground_;
    int rank_;
};

class GraphicOracle final : public MatroidOracle {
public:
    explicit GraphicOracle(Graph graph) : graph_(std::move(graph)), rank_(graphic_rank(graph_)) {}
    bool is_independent(const IndexSet& s) const override {
        DisjointSets dsu(graph_.num_vertices);
        for (int e : s) {
            auto [u, v] = graph_.edges[static_cast<std::size_t>(e)];
            if (!dsu.unite(u, v)) return false;
        }
        return true;
    }
    int ground_size() const override { return graph_.num_edges(); }
    int rank() const override { return rank_; }

private:
    Graph graph_;
    int rank_;
};

} // namespace

MatroidOraclePtr as_matroid_oracle(const FamilySpec& family) {
    switch (family.kind()) {
    case FamilySpec::Kind::Uniform: {
        const auto* u = family.as<UniformMatroid>();
        return std::make_shared<UniformOracle>(u->ground_size, u->k);
    }
    case FamilySpec::Kind::Partition: {
        const auto* p = family.as<PartitionMatroid>();
        return std::make_shared<PartitionOracle>(*p, family.ground_size());
    }
    case FamilySpec::Kind::Graphic: {
        const auto* g = family.as<GraphicMatroid>();
        return std::make_shared<GraphicOracle>(g->graph);
    }
    default:
        throw UnsupportedError("family '" + family.kind_name() + "' is not a matroid family");
    }
}

} // namespace copic
