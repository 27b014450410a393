#ifndef COPIC_CERTIFICATES_HPP
#define COPIC_CERTIFICATES_HPP

#include <optional>
#include <vector>

#include "copic/cost.hpp"
#include "copic/index_set.hpp"

namespace copic {

/// One term of a violated linear combination of feasible pairs.
struct LinearizationWitnessTerm {
    IndexSet s1;
    IndexSet s2;
    Cost coefficient;
};

/**
 * Outcome of a linearizability test. When linearizable, the vectors satisfy
 *   sum_{i in S1} a[i] + sum_{j in S2} b[j] = sum_{i in S1, j in S2} q[i][j]
 * for every feasible pair. Otherwise the witness is a combination of feasible
 * pairs whose interaction sums add up to the nonzero residual although every
 * linearization would make them cancel; the first and last terms are the two
 * primary conflicting pairs.
 */
struct LinearizabilityCertificate {
    bool linearizable = false;
    CostVector a;
    CostVector b;
    std::vector<LinearizationWitnessTerm> witness;
    /// For structural checks: the index tuple of the violated identity.
    std::vector<int> violation;
    Cost residual;
};

/// Constant-objective constants of one side: side 1 holds K1[j] with
/// sum_{i in S1} q[i][j] = K1[j] for every S1; side 2 symmetrically per row.
struct ConstantObjectiveCertificate {
    int side = 1;
    CostVector constants;
};

/// Two family members whose weighted sums differ in the given line (column
/// for side 1, row for side 2).
struct ConstantObjectiveWitness {
    IndexSet member1;
    IndexSet member2;
    int line = 0;
};

struct CvpResult {
    std::optional<ConstantObjectiveCertificate> certificate;
    std::optional<ConstantObjectiveWitness> witness;
};

} // namespace copic

#endif // COPIC_CERTIFICATES_HPP
