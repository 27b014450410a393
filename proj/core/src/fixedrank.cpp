#include "copic/fixedrank.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "copic/errors.hpp"

namespace copic {

namespace {

void require_finite(const CostMatrix& q) {
    for (const auto& row : q)
        for (const Cost& v : row)
            if (v.is_infinite()) throw DomainError("fixed-rank solvers require finite Q");
}

std::size_t binomial_capped(int n, int k, std::size_t limit) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::size_t result = 1;
    for (int i = 1; i <= k; ++i) {
        if (result > limit / static_cast<std::size_t>(n - k + i)) return limit + 1;
        result = result * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    }
    return result;
}

/// Solves A x = rhs for a square exact system; nullopt when singular.
std::optional<CostVector> solve_square(std::vector<CostVector> a, CostVector rhs) {
    const std::size_t r = a.size();
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t pivot = col;
        while (pivot < r && a[pivot][col].is_zero()) ++pivot;
        if (pivot == r) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < r; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Cost factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < r; ++k) a[row][k] -= factor * a[col][k];
            rhs[row] -= factor * rhs[col];
        }
    }
    CostVector x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = rhs[i] / a[i][i];
    return x;
}

class CandidateCollector {
public:
    explicit CandidateCollector(int m, std::size_t cap) : m_(m), cap_(cap) {}

    void add(const std::vector<char>& x) {
        if (seen_.insert(std::string(x.begin(), x.end())).second) {
            if (++count_ > cap_)
                throw ResourceError("candidate set exceeds cap of " + std::to_string(cap_));
            IndexSet s;
            for (int i = 0; i < m_; ++i)
                if (x[static_cast<std::size_t>(i)]) s.push_back(i);
            out_.push_back(std::move(s));
        }
    }

    CandidateSet take() { return CandidateSet{std::move(out_)}; }

private:
    int m_;
    std::size_t cap_;
    std::size_t count_ = 0;
    std::set<std::string> seen_;
    std::vector<IndexSet> out_;
};

Solution best_over_candidates(const Instance& instance, const RankFactorization& fact,
                              const CandidateSet& candidates,
                              const std::function<LcopResult(const CostVector&)>& complete) {
    std::optional<Solution> best;
    for (const IndexSet& s1 : candidates.candidates) {
        CostVector w = instance.d;
        for (int p = 0; p < fact.r; ++p) {
            Cost coeff = sum_over(fact.a_vectors[static_cast<std::size_t>(p)], s1);
            if (coeff.is_zero()) continue;
            for (int j = 0; j < instance.n; ++j)
                w[static_cast<std::size_t>(j)] +=
                    coeff * fact.b_vectors[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
        }
        LcopResult completion = complete(w);
        Cost objective = evaluate_objective(instance, s1, completion.solution);
        Solution candidate{s1, completion.solution, objective};
        if (!best || solution_less(candidate, *best)) best = std::move(candidate);
    }
    if (!best) throw NoSolutionError("empty candidate set");
    return *best;
}

void require_rank_inputs(const Instance& instance, const RankFactorization& fact) {
    auto violations = validate_instance(instance);
    if (!violations.empty()) throw DomainError("invalid instance: " + violations.front());
    require_finite(instance.q);
    if (instance.family1.kind() != FamilySpec::Kind::Unconstrained)
        throw PreconditionError("rank solvers require family1 unconstrained");
    if (!reconstructs(fact, instance.q))
        throw DomainError("factorization does not reproduce Q");
}

} // namespace

RankFactorization factorize(const CostMatrix& q) {
    require_finite(q);
    const int m = static_cast<int>(q.size());
    const int n = m == 0 ? 0 : static_cast<int>(q.front().size());
    for (const auto& row : q)
        if (static_cast<int>(row.size()) != n) throw DomainError("ragged matrix");

    CostMatrix residual = q;
    RankFactorization fact;
    for (;;) {
        int pi = -1, pj = -1;
        Cost best(0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                Cost magnitude = abs(residual[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                if (magnitude > best) {
                    best = magnitude;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == -1) break;
        const Cost pivot = residual[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)];
        CostVector a(static_cast<std::size_t>(m)), b(static_cast<std::size_t>(n));
        for (int i = 0; i < m; ++i)
            a[static_cast<std::size_t>(i)] = residual[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)] / pivot;
        for (int j = 0; j < n; ++j)
            b[static_cast<std::size_t>(j)] = residual[static_cast<std::size_t>(pi)][static_cast<std::size_t>(j)];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                residual[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        fact.a_vectors.push_back(std::move(a));
        fact.b_vectors.push_back(std::move(b));
        ++fact.r;
    }
    return fact;
}

bool reconstructs(const RankFactorization& fact, const CostMatrix& q) {
    const int m = static_cast<int>(q.size());
    const int n = m == 0 ? 0 : static_cast<int>(q.front().size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            Cost total(0);
            for (int p = 0; p < fact.r; ++p)
                total += fact.a_vectors[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] *
                         fact.b_vectors[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
            if (total != q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) return false;
        }
    return true;
}

CandidateSet rank1_candidates(const CostVector& c, const RankFactorization& fact, std::size_t cap) {
    if (fact.r != 1) throw PreconditionError("rank1 sweep requires r = 1");
    const int m = static_cast<int>(c.size());
    const CostVector& a = fact.a_vectors.front();
    CandidateCollector collector(m, cap);

    std::vector<Cost> breakpoints;
    for (int i = 0; i < m; ++i)
        if (!a[static_cast<std::size_t>(i)].is_zero())
            breakpoints.push_back(-c[static_cast<std::size_t>(i)] / a[static_cast<std::size_t>(i)]);
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

    auto x_at = [&](const Cost& mu) {
        std::vector<char> x(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i)
            if ((c[static_cast<std::size_t>(i)] + mu * a[static_cast<std::size_t>(i)]).is_negative())
                x[static_cast<std::size_t>(i)] = 1;
        return x;
    };

    std::vector<Cost> samples;
    if (breakpoints.empty()) {
        samples.push_back(Cost(0));
    } else {
        samples.push_back(breakpoints.front() - Cost(1));
        for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k)
            samples.push_back((breakpoints[k] + breakpoints[k + 1]) / Cost(2));
        samples.push_back(breakpoints.back() + Cost(1));
    }
    for (const Cost& mu : samples) collector.add(x_at(mu));

    for (const Cost& mu : breakpoints) {
        std::vector<char> base = x_at(mu);
        std::vector<int> tied;
        for (int i = 0; i < m; ++i)
            if ((c[static_cast<std::size_t>(i)] + mu * a[static_cast<std::size_t>(i)]).is_zero())
                tied.push_back(i);
        if (tied.size() > 20) throw ResourceError("too many tied elements at a breakpoint");
        for (std::size_t mask = 0; mask < (std::size_t{1} << tied.size()); ++mask) {
            std::vector<char> x = base;
            for (std::size_t t = 0; t < tied.size(); ++t)
                x[static_cast<std::size_t>(tied[t])] = (mask >> t) & 1 ? 1 : 0;
            collector.add(x);
        }
    }
    return collector.take();
}

CandidateSet rankr_candidates(const CostVector& c, const RankFactorization& fact, int m,
                              std::size_t cap) {
    const int r = fact.r;
    if (static_cast<int>(c.size()) != m) throw DomainError("cost length mismatch");
    if (binomial_capped(m, r, cap) > cap >> std::min(r, 20))
        throw ResourceError("basis enumeration exceeds candidate cap");
    CandidateCollector collector(m, cap);

    IndexSet basis(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) basis[static_cast<std::size_t>(i)] = i;
    auto column = [&](int j) {
        CostVector col(static_cast<std::size_t>(r));
        for (int p = 0; p < r; ++p)
            col[static_cast<std::size_t>(p)] = fact.a_vectors[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
        return col;
    };

    bool more = r <= m;
    if (r == 0) {
        // Single empty basis; fall through once with no basic variables.
        more = true;
    }
    while (more) {
        // y solves A_B^T y = c_B; skip singular bases.
        std::vector<CostVector> at(static_cast<std::size_t>(r), CostVector(static_cast<std::size_t>(r)));
        CostVector cb(static_cast<std::size_t>(r));
        for (int q = 0; q < r; ++q) {
            CostVector col = column(basis[static_cast<std::size_t>(q)]);
            for (int p = 0; p < r; ++p) at[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] = col[static_cast<std::size_t>(p)];
            cb[static_cast<std::size_t>(q)] = c[static_cast<std::size_t>(basis[static_cast<std::size_t>(q)])];
        }
        auto y = solve_square(at, cb);
        if (y) {
            std::vector<char> assignment(static_cast<std::size_t>(m), 0); // 1 = at upper bound
            std::vector<int> zeros;
            for (int j = 0; j < m; ++j) {
                if (set_contains(basis, j)) continue;
                Cost reduced = c[static_cast<std::size_t>(j)];
                CostVector col = column(j);
                for (int p = 0; p < r; ++p)
                    reduced -= (*y)[static_cast<std::size_t>(p)] * col[static_cast<std::size_t>(p)];
                if (reduced.is_zero())
                    zeros.push_back(j);
                else if (reduced.is_negative())
                    assignment[static_cast<std::size_t>(j)] = 1;
            }
            if (zeros.size() > 20) throw ResourceError("too many degenerate reduced costs");
            for (std::size_t zmask = 0; zmask < (std::size_t{1} << zeros.size()); ++zmask) {
                std::vector<char> x = assignment;
                for (std::size_t t = 0; t < zeros.size(); ++t)
                    x[static_cast<std::size_t>(zeros[t])] = (zmask >> t) & 1 ? 1 : 0;
                for (std::size_t bmask = 0; bmask < (std::size_t{1} << r); ++bmask) {
                    for (int p = 0; p < r; ++p)
                        x[static_cast<std::size_t>(basis[static_cast<std::size_t>(p)])] =
                            (bmask >> p) & 1 ? 1 : 0;
                    collector.add(x);
                }
            }
        }
        // Next r-subset in lexicographic order.
        if (r == 0) break;
        int i = r - 1;
        while (i >= 0 && basis[static_cast<std::size_t>(i)] == m - r + i) --i;
        if (i < 0) break;
        ++basis[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < r; ++k)
            basis[static_cast<std::size_t>(k)] = basis[static_cast<std::size_t>(k - 1)] + 1;
    }
    return collector.take();
}

Solution solve_rank1_unconstrained_side(const Instance& instance, const RankFactorization& fact,
                                        std::size_t cap) {
    require_rank_inputs(instance, fact);
    CandidateSet candidates = rank1_candidates(instance.c, fact, cap);
    return best_over_candidates(instance, fact, candidates,
                                [&](const CostVector& w) { return lcop_solve(instance.family2, w); });
}

Solution solve_rankr_unconstrained_side(const Instance& instance, const RankFactorization& fact,
                                        std::size_t cap) {
    require_rank_inputs(instance, fact);
    CandidateSet candidates = rankr_candidates(instance.c, fact, instance.m, cap);
    return best_over_candidates(instance, fact, candidates,
                                [&](const CostVector& w) { return lcop_solve(instance.family2, w); });
}

Solution solve_rankr_with_approximate_oracle(const Instance& instance, const RankFactorization& fact,
                                             const ApproximateLcopOracle& oracle, std::size_t cap) {
    require_rank_inputs(instance, fact);
    CandidateSet candidates = rankr_candidates(instance.c, fact, instance.m, cap);
    return best_over_candidates(instance, fact, candidates, [&](const CostVector& w) {
        for (const Cost& v : w)
            if (v.is_negative())
                throw ContractViolationError("induced weight is negative; the oracle contract "
                                             "covers nonnegative weights only");
        return oracle.solve(instance.family2, w);
    });
}

} // namespace copic
