#include "copic/bruteforce.hpp"

#include <optional>

#include "copic/errors.hpp"
#include "rational_linsys.hpp"

namespace copic {

namespace {

void require_valid(const Instance& instance) {
    auto violations = validate_instance(instance);
    if (!violations.empty()) throw DomainError("invalid instance: " + violations.front());
}

/// Column sums of q over the rows in s1, plus d.
CostVector induced_weights(const Instance& instance, const IndexSet& s1) {
    CostVector h = instance.d;
    for (int i : s1)
        for (int j = 0; j < instance.n; ++j)
            h[static_cast<std::size_t>(j)] += instance.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return h;
}

} // namespace

Solution solve_bruteforce(const Instance& instance, std::size_t pair_cap) {
    require_valid(instance);
    const std::size_t count1 = count_members(instance.family1, pair_cap);
    const std::size_t count2 = count_members(instance.family2, pair_cap);
    if (count1 == 0 || count2 == 0) throw NoSolutionError("a family is empty");
    if (count1 > pair_cap || count2 > pair_cap || count1 > pair_cap / count2)
        throw EnumerationCapError("pair enumeration exceeds cap", pair_cap);

    const auto members2 = enumerate_family(instance.family2, pair_cap);
    std::optional<Solution> best;
    for_each_member(
        instance.family1,
        [&](const IndexSet& s1) {
            const CostVector h = induced_weights(instance, s1);
            const Cost c_part = sum_over(instance.c, s1);
            for (const IndexSet& s2 : members2) {
                Cost objective = c_part + sum_over(h, s2);
                if (!best || objective < best->objective) best = Solution{s1, s2, objective};
            }
        },
        pair_cap);
    return *best;
}

Solution solve_by_side_enumeration(const Instance& instance, int side, std::size_t cap) {
    if (side != 1 && side != 2) throw DomainError("side must be 1 or 2");
    if (side == 2) {
        Solution t = solve_by_side_enumeration(transpose_instance(instance), 1, cap);
        return Solution{t.s2, t.s1, t.objective};
    }
    require_valid(instance);

    std::optional<Solution> best;
    for_each_member(
        instance.family1,
        [&](const IndexSet& s1) {
            CostVector h = induced_weights(instance, s1);
            std::vector<bool> allowed(static_cast<std::size_t>(instance.n), true);
            for (int j = 0; j < instance.n; ++j)
                if (h[static_cast<std::size_t>(j)].is_infinite()) allowed[static_cast<std::size_t>(j)] = false;
            auto completion = lcop_solve_restricted(instance.family2, h, allowed);
            if (!completion) return; // no feasible S2 avoids the forbidden elements
            Cost objective = sum_over(instance.c, s1) + completion->value;
            if (!best || objective < best->objective)
                best = Solution{s1, completion->solution, objective};
        },
        cap);
    if (!best) throw NoSolutionError("no candidate admits a feasible completion");
    return *best;
}

LinearizabilityCertificate linearizable_bruteforce(const Instance& instance, std::size_t cap) {
    require_valid(instance);
    const auto members1 = enumerate_family(instance.family1, cap);
    const auto members2 = enumerate_family(instance.family2, cap);

    LinearizabilityCertificate cert;
    if (members1.empty() || members2.empty()) {
        cert.linearizable = true;
        cert.a.assign(static_cast<std::size_t>(instance.m), Cost(0));
        cert.b.assign(static_cast<std::size_t>(instance.n), Cost(0));
        return cert;
    }

    // Interaction sums via per-candidate column sums.
    std::vector<CostVector> rowsum(members1.size());
    for (std::size_t k = 0; k < members1.size(); ++k) {
        rowsum[k].assign(static_cast<std::size_t>(instance.n), Cost(0));
        for (int i : members1[k])
            for (int j = 0; j < instance.n; ++j)
                rowsum[k][static_cast<std::size_t>(j)] +=
                    instance.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    auto interaction = [&](std::size_t k1, const IndexSet& s2) { return sum_over(rowsum[k1], s2); };

    // A pair with infinite interaction sum rules out any finite linearization.
    for (std::size_t k1 = 0; k1 < members1.size(); ++k1)
        for (const IndexSet& s2 : members2) {
            Cost g = interaction(k1, s2);
            if (g.is_infinite()) {
                cert.linearizable = false;
                cert.witness.push_back({members1[k1], s2, Cost(1)});
                cert.residual = g;
                return cert;
            }
        }

    // Exchange identity against the anchor pair: g(S1, S2) must equal
    // g(S1, S2*) + g(S1*, S2) - g(S1*, S2*). Violations are two-pair
    // witnesses; when all hold, the interaction splits into u(S1) + v(S2).
    const Cost theta = interaction(0, members2[0]);
    for (std::size_t k1 = 0; k1 < members1.size(); ++k1) {
        const Cost u_k = interaction(k1, members2[0]);
        for (const IndexSet& s2 : members2) {
            Cost lhs = interaction(k1, s2);
            Cost rhs = u_k + interaction(0, s2) - theta;
            if (lhs != rhs) {
                cert.linearizable = false;
                cert.witness.push_back({members1[k1], s2, Cost(1)});
                cert.witness.push_back({members1[k1], members2[0], Cost(-1)});
                cert.witness.push_back({members1[0], s2, Cost(-1)});
                cert.witness.push_back({members1[0], members2[0], Cost(1)});
                cert.residual = lhs - rhs;
                return cert;
            }
        }
    }

    // Joint modularity system: sum_{i in S1} a_i - tau = u(S1) and
    // sum_{j in S2} b_j + tau = v(S2), unknowns (a, b, tau).
    const std::size_t cols = static_cast<std::size_t>(instance.m + instance.n) + 1;
    detail::LinearSystem system(cols);
    const int rows1 = static_cast<int>(members1.size());
    auto witness_of = [&](const std::map<int, Cost>& combination) {
        std::vector<LinearizationWitnessTerm> terms;
        for (const auto& [row, coeff] : combination) {
            if (row < rows1)
                terms.push_back({members1[static_cast<std::size_t>(row)], members2[0], coeff});
            else
                terms.push_back({members1[0], members2[static_cast<std::size_t>(row - rows1)], coeff});
        }
        return terms;
    };

    for (std::size_t k1 = 0; k1 < members1.size(); ++k1) {
        CostVector coeffs(cols, Cost(0));
        for (int i : members1[k1]) coeffs[static_cast<std::size_t>(i)] = Cost(1);
        coeffs[cols - 1] = Cost(-1);
        if (auto conflict = system.add(std::move(coeffs), interaction(k1, members2[0]))) {
            cert.linearizable = false;
            cert.witness = witness_of(conflict->combination);
            cert.residual = conflict->residual;
            return cert;
        }
    }
    for (std::size_t k2 = 0; k2 < members2.size(); ++k2) {
        CostVector coeffs(cols, Cost(0));
        for (int j : members2[k2]) coeffs[static_cast<std::size_t>(instance.m + j)] = Cost(1);
        coeffs[cols - 1] = Cost(1);
        if (auto conflict = system.add(std::move(coeffs), interaction(0, members2[k2]) - theta)) {
            cert.linearizable = false;
            cert.witness = witness_of(conflict->combination);
            cert.residual = conflict->residual;
            return cert;
        }
    }

    CostVector z = system.solve();
    cert.linearizable = true;
    cert.a.assign(z.begin(), z.begin() + instance.m);
    cert.b.assign(z.begin() + instance.m, z.begin() + instance.m + instance.n);
    return cert;
}

} // namespace copic
