#include "copic/instance.hpp"

#include "copic/errors.hpp"

namespace copic {

Cost evaluate_objective(const Instance& instance, const IndexSet& s1, const IndexSet& s2) {
    for (int i : s1)
        if (i < 0 || i >= instance.m) throw DomainError("s1 index out of range");
    for (int j : s2)
        if (j < 0 || j >= instance.n) throw DomainError("s2 index out of range");

    Cost total;
    for (int i : s1) {
        for (int j : s2) total += instance.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        total += instance.c[static_cast<std::size_t>(i)];
    }
    for (int j : s2) total += instance.d[static_cast<std::size_t>(j)];
    return total;
}

std::vector<std::string> validate_instance(const Instance& instance) {
    std::vector<std::string> violations;
    if (instance.m < 0 || instance.n < 0) violations.push_back("negative dimension");
    if (static_cast<int>(instance.q.size()) != instance.m) violations.push_back("q row count mismatch");
    for (const auto& row : instance.q)
        if (static_cast<int>(row.size()) != instance.n) {
            violations.push_back("q column count mismatch");
            break;
        }
    if (static_cast<int>(instance.c.size()) != instance.m) violations.push_back("c length mismatch");
    if (static_cast<int>(instance.d.size()) != instance.n) violations.push_back("d length mismatch");
    if (instance.family1.ground_size() != instance.m) violations.push_back("family1 ground size mismatch");
    if (instance.family2.ground_size() != instance.n) violations.push_back("family2 ground size mismatch");
    for (const Cost& v : instance.c)
        if (v.is_infinite()) {
            violations.push_back("inf outside Q");
            break;
        }
    for (const Cost& v : instance.d)
        if (v.is_infinite()) {
            violations.push_back("inf outside Q");
            break;
        }
    return violations;
}

CostMatrix expand_diagonal(const DiagonalCosts& diag) {
    const std::size_t n = diag.a.size();
    CostMatrix q(n, CostVector(n));
    for (std::size_t i = 0; i < n; ++i) q[i][i] = diag.a[i];
    return q;
}

bool solution_less(const Solution& a, const Solution& b) {
    if (a.objective != b.objective) return a.objective < b.objective;
    if (a.s1 != b.s1) return graded_lex_less(a.s1, b.s1);
    return graded_lex_less(a.s2, b.s2);
}

Instance transpose_instance(const Instance& instance) {
    Instance t;
    t.m = instance.n;
    t.n = instance.m;
    t.q.assign(static_cast<std::size_t>(instance.n), CostVector(static_cast<std::size_t>(instance.m)));
    for (int i = 0; i < instance.m; ++i)
        for (int j = 0; j < instance.n; ++j)
            t.q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                instance.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    t.c = instance.d;
    t.d = instance.c;
    t.family1 = instance.family2;
    t.family2 = instance.family1;
    return t;
}

} // namespace copic
