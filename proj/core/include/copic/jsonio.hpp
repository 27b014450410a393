#ifndef COPIC_JSONIO_HPP
#define COPIC_JSONIO_HPP

#include <optional>
#include <string>

#include "copic/instance.hpp"
#include "copic/reductions.hpp"

namespace copic {

/**
 * A parsed instance document. Costs travel as strings ("2", "-3.5", "7/2",
 * "inf") so exact rationals survive JSON. diag holds the diagonal vector
 * when q was given in {"diag": [...]} form.
 */
struct ParsedInstance {
    Instance instance;
    std::optional<CostVector> diag;
};

/// Parses an instance document; throws DomainError with a description on any
/// malformed input (including instances violating core invariants).
ParsedInstance parse_instance_json(const std::string& text);

/// Serializes an instance document; diag selects the {"diag": [...]} matrix
/// form. Output is deterministic (sorted keys, fixed layout).
std::string emit_instance_json(const Instance& instance,
                               const std::optional<CostVector>& diag = std::nullopt);

/// {"m":, "n":, "k":, "q": [[...]]} document for the k-card cut command.
KCardCutInstance parse_kcard_json(const std::string& text);

} // namespace copic

#endif // COPIC_JSONIO_HPP
