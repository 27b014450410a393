#include "copic/reductions.hpp"

#include <optional>

#include "copic/errors.hpp"

namespace copic {

KCardCutResult solve_kcard_cut_via_copic(const KCardCutInstance& inst, const CopicSolver& solver) {
    if (inst.m <= 0 || inst.n <= 0) throw DomainError("empty digraph side");
    if (static_cast<int>(inst.q.size()) != inst.m) throw DomainError("q row count mismatch");
    for (const auto& row : inst.q)
        if (static_cast<int>(row.size()) != inst.n) throw DomainError("q column count mismatch");
    if (inst.k < 1 || inst.k > static_cast<long>(inst.m) * inst.n)
        throw DomainError("k out of range");

    std::optional<KCardCutResult> best;
    for (int k1 = 1; k1 <= inst.m; ++k1) {
        if (inst.k % k1 != 0) continue;
        long k2 = inst.k / k1;
        if (k2 > inst.n) continue;

        Instance copic;
        copic.m = inst.m;
        copic.n = inst.n;
        copic.q = inst.q;
        copic.c.assign(static_cast<std::size_t>(inst.m), Cost(0));
        copic.d.assign(static_cast<std::size_t>(inst.n), Cost(0));
        copic.family1 = FamilySpec::uniform(inst.m, k1);
        copic.family2 = FamilySpec::uniform(inst.n, static_cast<int>(k2));
        Solution sol = solver(copic);

        if (!best || sol.objective < best->cost) {
            IndexSet right;
            for (int j = 0; j < inst.n; ++j)
                if (!set_contains(sol.s2, j)) right.push_back(j);
            best = KCardCutResult{sol.s1, right, sol.objective, k1, static_cast<int>(k2)};
        }
    }
    if (!best) throw NoSolutionError("no divisor pair k1 * k2 = k fits the digraph");
    return *best;
}

} // namespace copic
