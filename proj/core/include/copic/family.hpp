#ifndef COPIC_FAMILY_HPP
#define COPIC_FAMILY_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "copic/cost.hpp"
#include "copic/graph.hpp"
#include "copic/index_set.hpp"

namespace copic {

/// All subsets of the ground set.
struct Unconstrained {
    int ground_size;
};

/// All k-subsets of the ground set (bases of the uniform matroid).
struct UniformMatroid {
    int ground_size;
    int k;
};

/// Sets meeting each part of a ground-set partition in exactly its quota.
struct PartitionMatroid {
    std::vector<IndexSet> parts;
    std::vector<int> quotas;
};

/// Bases of the graphic matroid: maximal spanning forests, with the ground
/// set indexing the edges of an undirected multigraph.
struct GraphicMatroid {
    Graph graph;
};

/// Edge sets of simple s-t paths. Directed or undirected.
struct StPath {
    Graph graph;
    int s;
    int t;
};

/// Perfect matchings of K_{p,p}; edge (i, j) is flattened to index i*p + j.
struct BipartitePerfectMatching {
    int side_size;
};

/**
 * A declarative feasible-solution family over a ground set of indexed
 * elements. Every family supports a membership test, exhaustive enumeration
 * (desk scale, capped) and a linear-cost optimization oracle.
 */
class FamilySpec {
public:
    enum class Kind { Unconstrained, Uniform, Partition, Graphic, StPath, PerfectMatching };

    static FamilySpec unconstrained(int ground_size);
    static FamilySpec uniform(int ground_size, int k);
    static FamilySpec partition(std::vector<IndexSet> parts, std::vector<int> quotas);
    static FamilySpec graphic(Graph graph);
    static FamilySpec st_path(Graph graph, int s, int t);
    static FamilySpec perfect_matching(int side_size);

    Kind kind() const;
    int ground_size() const;
    std::string kind_name() const;

    template <typename T>
    const T* as() const {
        return std::get_if<T>(&spec_);
    }

private:
    using Variant = std::variant<Unconstrained, UniformMatroid, PartitionMatroid, GraphicMatroid,
                                 StPath, BipartitePerfectMatching>;
    explicit FamilySpec(Variant spec) : spec_(std::move(spec)) {}
    Variant spec_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1000000;

/// True iff s is a feasible solution of the family. s must be canonical and
/// within the ground set.
bool contains(const FamilySpec& family, const IndexSet& s);

/// Invokes fn on every feasible set exactly once, in graded lexicographic
/// order. Throws EnumerationCapError when the family has more than cap
/// members.
void for_each_member(const FamilySpec& family, const std::function<void(const IndexSet&)>& fn,
                     std::size_t cap = kDefaultEnumerationCap);

/// Materialized enumeration, same order and cap behavior as for_each_member.
std::vector<IndexSet> enumerate_family(const FamilySpec& family,
                                       std::size_t cap = kDefaultEnumerationCap);

/// Number of feasible sets, computed in closed form where one exists.
/// Saturates at cap + 1 to keep the count cheap on huge families.
std::size_t count_members(const FamilySpec& family, std::size_t cap = kDefaultEnumerationCap);

struct LcopResult {
    IndexSet solution;
    Cost value;
};

/**
 * Minimizes sum of w over a feasible set. w must be finite and of ground
 * size. Among optima, matroid-style families return the lexicographically
 * least set; graph-backed families break ties deterministically by index.
 */
LcopResult lcop_solve(const FamilySpec& family, const CostVector& w);

/// lcop_solve over the family restricted to feasible sets avoiding every
/// element with allowed[i] == false. nullopt when the restriction is
/// infeasible. Weights of banned elements are ignored.
std::optional<LcopResult> lcop_solve_restricted(const FamilySpec& family, const CostVector& w,
                                                const std::vector<bool>& allowed);

} // namespace copic

#endif // COPIC_FAMILY_HPP
