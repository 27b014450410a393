#ifndef COPIC_LINEARIZE_HPP
#define COPIC_LINEARIZE_HPP

#include <optional>

#include "copic/certificates.hpp"
#include "copic/instance.hpp"

namespace copic {

/// Dense tensor with a fixed number of indices, row-major.
struct TensorN {
    std::vector<int> dims;
    CostVector data;

    static TensorN zeros(std::vector<int> dims);
    std::size_t offset(const std::vector<int>& index) const;
    Cost& at(const std::vector<int>& index) { return data[offset(index)]; }
    const Cost& at(const std::vector<int>& index) const { return data[offset(index)]; }
    std::size_t size() const { return data.size(); }
};

struct TwoIndexDecomposition {
    CostVector a; // length m
    CostVector b; // length n
};

struct TwoIndexCheck {
    std::optional<TwoIndexDecomposition> decomposition;
    std::vector<int> violation; // first violating (i, j) when empty decomposition
    Cost residual;
};

/// Tests q[i][j] = a[i] + b[j]; the anchored identity
/// q[i][j] - q[i][0] - q[0][j] + q[0][0] = 0 characterizes it and yields the
/// construction a[i] = q[i][0], b[j] = q[0][j] - q[0][0].
TwoIndexCheck check_2index_decomposition(const CostMatrix& q);

struct ThreeIndexDecomposition {
    CostMatrix a; // d0 x d1
    CostMatrix b; // d0 x d2
    CostMatrix c; // d1 x d2
};

struct ThreeIndexCheck {
    std::optional<ThreeIndexDecomposition> decomposition;
    std::vector<int> violation; // first violating (i, j, k)
    Cost residual;
};

/// Tests t[i][j][k] = a[i][j] + b[i][k] + c[j][k] via the eight-term anchored
/// identity; on success the components come from the half/third closed forms
/// anchored at index 0.
ThreeIndexCheck check_3index_decomposition(const TensorN& t);

struct PatternCheck {
    std::optional<std::vector<TensorN>> components; // one per pattern
    std::vector<int> violation;                     // first inconsistent tuple
    Cost residual;
};

/// Generic engine: decides whether t decomposes as a sum of components, one
/// per pattern, where each component only depends on its pattern's indices.
/// Exact Gaussian elimination over the flattened unknowns.
PatternCheck check_pattern_decomposition(const TensorN& t,
                                         const std::vector<std::vector<int>>& patterns);

/**
 * Constant-objective-property test for one side: side 1 asks whether every
 * column j has sum_{i in S1} q[i][j] constant over family members, side 2
 * symmetrically per row. Closed forms cover unconstrained, uniform,
 * spanning trees of complete graphs and perfect matchings; other families
 * fall back to capped enumeration.
 */
CvpResult cvp_membership(const CostMatrix& q, int side, const FamilySpec& family,
                         std::size_t cap = kDefaultEnumerationCap);

/**
 * Structure-specific linearizability test. Supported pairs: both sides in
 * {uniform, spanning trees of a complete graph, perfect matchings} with
 * enough exchange freedom, or either side unconstrained. Unsupported pairs
 * throw UnsupportedError (callers fall back to linearizable_bruteforce).
 */
LinearizabilityCertificate check_copic_linearizable(const Instance& instance);

} // namespace copic

#endif // COPIC_LINEARIZE_HPP
