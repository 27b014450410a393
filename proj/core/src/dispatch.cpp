#include "copic/dispatch.hpp"

#include "copic/bruteforce.hpp"
#include "copic/errors.hpp"
#include "copic/fixedrank.hpp"

namespace copic {

namespace {

Solution swap_sides(Solution s) {
    std::swap(s.s1, s.s2);
    return s;
}

/// Flipped diagonal instance: roles of the two sides exchanged.
DiagonalInstance flip(const DiagonalInstance& d) {
    return DiagonalInstance{d.n, d.a, d.d, d.c, d.family2, d.family1};
}

Solution solve_rank(const Instance& instance, bool rank_one, std::size_t cap) {
    const Instance* oriented = &instance;
    Instance transposed;
    bool swapped = false;
    if (instance.family1.kind() != FamilySpec::Kind::Unconstrained) {
        if (instance.family2.kind() != FamilySpec::Kind::Unconstrained)
            throw PreconditionError("rank solvers require an unconstrained side");
        transposed = transpose_instance(instance);
        oriented = &transposed;
        swapped = true;
    }
    for (const auto& row : oriented->q)
        for (const Cost& v : row)
            if (v.is_infinite()) throw PreconditionError("rank solvers require finite Q");
    RankFactorization fact = factorize(oriented->q);
    Solution s;
    if (rank_one) {
        if (fact.r != 1) throw PreconditionError("rank1 requires rank(Q) = 1");
        s = solve_rank1_unconstrained_side(*oriented, fact, cap);
    } else {
        s = solve_rankr_unconstrained_side(*oriented, fact, cap);
    }
    return swapped ? swap_sides(std::move(s)) : s;
}

Solution solve_side_enum(const Instance& instance, std::size_t cap) {
    std::size_t count1 = count_members(instance.family1, cap);
    std::size_t count2 = count_members(instance.family2, cap);
    if (count1 > cap && count2 > cap)
        throw PreconditionError("side-enum: neither family fits the enumeration cap");
    int side = count1 <= count2 ? 1 : 2;
    return solve_by_side_enumeration(instance, side, cap);
}

DiagonalInstance require_diag_view(const Instance& instance, const std::string& name) {
    auto view = try_diagonal_view(instance);
    if (!view) throw PreconditionError(name + " requires a diagonal instance (m = n, zero off-diagonal)");
    return *view;
}

/// Orientation with family1 = uniform, family2 = stpath, or the flip when
/// that is the given shape. Throws when neither orientation fits.
std::pair<DiagonalInstance, bool> orient_uniform_path(const DiagonalInstance& diag) {
    const bool direct = diag.family1.kind() == FamilySpec::Kind::Uniform &&
                        diag.family2.kind() == FamilySpec::Kind::StPath;
    const bool reversed = diag.family1.kind() == FamilySpec::Kind::StPath &&
                          diag.family2.kind() == FamilySpec::Kind::Uniform;
    if (!direct && !reversed)
        throw PreconditionError("diag-uniform-path requires a uniform x stpath family pair");
    return {reversed ? flip(diag) : diag, reversed};
}

} // namespace

std::optional<DiagonalInstance> try_diagonal_view(const Instance& instance) {
    if (instance.m != instance.n) return std::nullopt;
    DiagonalCosts diag;
    diag.a.resize(static_cast<std::size_t>(instance.n));
    for (int i = 0; i < instance.m; ++i)
        for (int j = 0; j < instance.n; ++j) {
            const Cost& v = instance.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (i == j)
                diag.a[static_cast<std::size_t>(i)] = v;
            else if (!v.is_zero())
                return std::nullopt;
        }
    return DiagonalInstance{instance.n, std::move(diag), instance.c, instance.d, instance.family1,
                            instance.family2};
}

const std::vector<std::string>& solver_names() {
    static const std::vector<std::string> names = {
        "diag-unconstrained", "diag-one-side", "diag-uniform", "diag-uniform-path",
        "diag-common-paths",  "diag-matroid",  "rank1",        "rankr",
        "side-enum",          "bruteforce"};
    return names;
}

Solution solve_named(const Instance& instance, const std::string& name, std::size_t cap) {
    if (name == "bruteforce") return solve_bruteforce(instance);
    if (name == "side-enum") return solve_side_enum(instance, cap);
    if (name == "rank1") return solve_rank(instance, true, cap);
    if (name == "rankr") return solve_rank(instance, false, cap);
    if (name == "diag-unconstrained") return solve_diag_unconstrained_pair(require_diag_view(instance, name));
    if (name == "diag-one-side") return solve_diag_one_side_unconstrained(require_diag_view(instance, name));
    if (name == "diag-uniform") return solve_diag_uniform_pair(require_diag_view(instance, name));
    if (name == "diag-uniform-path") {
        auto [oriented, swapped] = orient_uniform_path(require_diag_view(instance, name));
        Solution s = solve_diag_uniform_path(oriented);
        return swapped ? swap_sides(std::move(s)) : s;
    }
    if (name == "diag-common-paths") return solve_diag_common_paths(require_diag_view(instance, name));
    if (name == "diag-matroid") return solve_diag_matroid_pair(require_diag_view(instance, name));
    throw DomainError("unknown solver '" + name + "'");
}

DispatchResult solve_auto(const Instance& instance, std::size_t cap) {
    DispatchResult result;
    for (const std::string& name : solver_names()) {
        try {
            result.solution = solve_named(instance, name, cap);
            result.solver = name;
            return result;
        } catch (const PreconditionError& e) {
            result.rejections.push_back(name + ": " + e.what());
        } catch (const UnsupportedError& e) {
            result.rejections.push_back(name + ": " + e.what());
        } catch (const EnumerationCapError& e) {
            result.rejections.push_back(name + ": " + e.what());
        } catch (const ResourceError& e) {
            result.rejections.push_back(name + ": " + e.what());
        }
    }
    throw ResourceError("no solver applicable within the configured caps");
}

} // namespace copic
