#ifndef COPIC_SRC_RATIONAL_LINSYS_HPP
#define COPIC_SRC_RATIONAL_LINSYS_HPP

#include <map>
#include <optional>

#include "copic/cost.hpp"
#include "copic/errors.hpp"

namespace copic::detail {

/**
 * Incremental Gauss-Jordan elimination over exact rationals with provenance
 * tracking: every reduced row remembers which input rows combine into it, so
 * an inconsistency can be reported as an explicit violated combination.
 */
class LinearSystem {
public:
    struct Conflict {
        std::map<int, Cost> combination; // input row id -> coefficient
        Cost residual;                   // nonzero
    };

    explicit LinearSystem(std::size_t num_unknowns) : cols_(num_unknowns) {}

    /// Adds one equation; returns the conflict when it contradicts the rows
    /// added so far, nullopt otherwise. Row ids count from zero in add order.
    std::optional<Conflict> add(CostVector coeffs, Cost rhs) {
        if (coeffs.size() != cols_) throw DomainError("equation width mismatch");
        const int id = next_id_++;
        std::map<int, Cost> prov{{id, Cost(1)}};

        for (const Row& row : rows_) {
            const Cost factor = coeffs[row.pivot];
            if (factor.is_zero()) continue;
            for (std::size_t k = 0; k < cols_; ++k) coeffs[k] -= factor * row.coeffs[k];
            rhs -= factor * row.rhs;
            for (const auto& [src, coeff] : row.prov) {
                prov[src] -= factor * coeff;
                if (prov[src].is_zero()) prov.erase(src);
            }
        }

        std::size_t pivot = cols_;
        for (std::size_t k = 0; k < cols_; ++k)
            if (!coeffs[k].is_zero()) {
                pivot = k;
                break;
            }
        if (pivot == cols_) {
            if (rhs.is_zero()) return std::nullopt; // redundant
            return Conflict{std::move(prov), rhs};
        }

        const Cost lead = coeffs[pivot];
        for (std::size_t k = 0; k < cols_; ++k) coeffs[k] /= lead;
        rhs /= lead;
        for (auto& [src, coeff] : prov) coeff /= lead;

        for (Row& row : rows_) {
            const Cost factor = row.coeffs[pivot];
            if (factor.is_zero()) continue;
            for (std::size_t k = 0; k < cols_; ++k) row.coeffs[k] -= factor * coeffs[k];
            row.rhs -= factor * rhs;
            for (const auto& [src, coeff] : prov) {
                row.prov[src] -= factor * coeff;
                if (row.prov[src].is_zero()) row.prov.erase(src);
            }
        }
        rows_.push_back(Row{std::move(coeffs), std::move(rhs), std::move(prov), pivot});
        return std::nullopt;
    }

    /// A particular solution with free unknowns fixed at zero.
    CostVector solve() const {
        CostVector x(cols_, Cost(0));
        for (const Row& row : rows_) x[row.pivot] = row.rhs;
        return x;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        CostVector coeffs;
        Cost rhs;
        std::map<int, Cost> prov;
        std::size_t pivot;
    };

    std::size_t cols_;
    std::vector<Row> rows_;
    int next_id_ = 0;
};

} // namespace copic::detail

#endif // COPIC_SRC_RATIONAL_LINSYS_HPP
