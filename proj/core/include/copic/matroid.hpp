#ifndef COPIC_MATROID_HPP
#define COPIC_MATROID_HPP

#include <memory>

#include "copic/family.hpp"
#include "copic/index_set.hpp"

namespace copic {

/// Independence oracle of a matroid over ground set [ground_size).
class MatroidOracle {
public:
    virtual ~MatroidOracle() = default;

    /// s must be canonical and within the ground set.
    virtual bool is_independent(const IndexSet& s) const = 0;
    virtual int ground_size() const = 0;
    virtual int rank() const = 0;
};

using MatroidOraclePtr = std::shared_ptr<const MatroidOracle>;

/// Oracle whose bases coincide with the family's feasible sets. Supported for
/// uniform, partition and graphic families; throws UnsupportedError otherwise.
MatroidOraclePtr as_matroid_oracle(const FamilySpec& family);

} // namespace copic

#endif // COPIC_MATROID_HPP
