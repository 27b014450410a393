#include "copic/hungarian.hpp"

#include "copic/errors.hpp"

namespace copic {

namespace {

/// Shortest-augmenting-path assignment (Jonker-Volgenant style) with dual
/// potentials over exact rationals. Returns nullopt iff no perfect matching
/// avoids the +inf cells.
std::optional<AssignmentResult> solve_lap(const CostMatrix& a) {
    const int p = static_cast<int>(a.size());
    if (p == 0) return AssignmentResult{{}, Cost(0)};

    // 1-based columns; column 0 is the virtual start.
    std::vector<Cost> u(static_cast<std::size_t>(p) + 1), v(static_cast<std::size_t>(p) + 1);
    std::vector<int> matched_row(static_cast<std::size_t>(p) + 1, 0); // row matched to column j
    std::vector<int> way(static_cast<std::size_t>(p) + 1, 0);

    for (int i = 1; i <= p; ++i) {
        matched_row[0] = i;
        int j0 = 0;
        std::vector<Cost> minv(static_cast<std::size_t>(p) + 1, Cost::infinity());
        std::vector<bool> used(static_cast<std::size_t>(p) + 1, false);
        do {
            used[static_cast<std::size_t>(j0)] = true;
            int i0 = matched_row[static_cast<std::size_t>(j0)];
            int j1 = -1;
            Cost delta = Cost::infinity();
            for (int j = 1; j <= p; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                const Cost& cell = a[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)];
                Cost cur = cell.is_infinite()
                               ? Cost::infinity()
                               : cell - u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            if (delta.is_infinite()) return std::nullopt;
            for (int j = 0; j <= p; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(matched_row[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (matched_row[static_cast<std::size_t>(j0)] != 0);
        do {
            int j1 = way[static_cast<std::size_t>(j0)];
            matched_row[static_cast<std::size_t>(j0)] = matched_row[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }

    AssignmentResult result;
    result.assignment.assign(static_cast<std::size_t>(p), -1);
    for (int j = 1; j <= p; ++j)
        result.assignment[static_cast<std::size_t>(matched_row[static_cast<std::size_t>(j)] - 1)] = j - 1;
    result.value = Cost(0);
    for (int i = 0; i < p; ++i)
        result.value += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(result.assignment[static_cast<std::size_t>(i)])];
    return result;
}

/// Optimal completion value for rows [row..p) over the unused columns,
/// nullopt when infeasible.
std::optional<Cost> completion_value(const CostMatrix& a, int row, const std::vector<bool>& col_used) {
    const int p = static_cast<int>(a.size());
    std::vector<int> cols;
    for (int j = 0; j < p; ++j)
        if (!col_used[static_cast<std::size_t>(j)]) cols.push_back(j);
    const int q = static_cast<int>(cols.size());
    if (p - row != q) return std::nullopt;
    if (q == 0) return Cost(0);
    CostMatrix sub(static_cast<std::size_t>(q), CostVector(static_cast<std::size_t>(q)));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(row + i)][static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])];
    auto r = solve_lap(sub);
    if (!r) return std::nullopt;
    return r->value;
}

std::optional<AssignmentResult> solve_lex(const CostMatrix& a) {
    const int p = static_cast<int>(a.size());
    auto base = solve_lap(a);
    if (!base) return std::nullopt;
    const Cost optimum = base->value;

    // Fix rows in order, choosing the least column that still completes to
    // the optimal value. Keeps exactness; desk-scale matrices only.
    std::vector<int> fixed(static_cast<std::size_t>(p), -1);
    std::vector<bool> col_used(static_cast<std::size_t>(p), false);
    Cost prefix(0);
    for (int i = 0; i < p; ++i) {
        bool placed = false;
        for (int j = 0; j < p && !placed; ++j) {
            if (col_used[static_cast<std::size_t>(j)]) continue;
            const Cost& cell = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (cell.is_infinite()) continue;
            col_used[static_cast<std::size_t>(j)] = true;
            auto rest = completion_value(a, i + 1, col_used);
            if (rest && prefix + cell + *rest == optimum) {
                fixed[static_cast<std::size_t>(i)] = j;
                prefix += cell;
                placed = true;
            } else {
                col_used[static_cast<std::size_t>(j)] = false;
            }
        }
        if (!placed) return std::nullopt; // unreachable when base exists
    }
    return AssignmentResult{fixed, optimum};
}

} // namespace

AssignmentResult hungarian(const CostMatrix& costs) {
    const std::size_t p = costs.size();
    for (const auto& row : costs) {
        if (row.size() != p) throw DomainError("hungarian requires a square matrix");
        for (const Cost& cell : row)
            if (cell.is_infinite()) throw DomainError("hungarian requires finite entries");
    }
    auto r = solve_lex(costs);
    if (!r) throw DomainError("hungarian failed on finite input"); // not reachable
    return *r;
}

std::optional<AssignmentResult> hungarian_allow_forbidden(const CostMatrix& costs) {
    const std::size_t p = costs.size();
    for (const auto& row : costs)
        if (row.size() != p) throw DomainError("hungarian requires a square matrix");
    return solve_lex(costs);
}

} // namespace copic
