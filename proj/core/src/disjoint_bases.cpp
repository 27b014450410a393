#include "copic/disjoint_bases.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "copic/errors.hpp"

namespace copic {

namespace {

/// Tries to extend the partition (x[0], x[1]) by element e, keeping x[i]
/// independent in its matroid. Breadth-first search over the exchange
/// digraph; shortest augmenting paths keep the exchange valid.
bool try_augment(const MatroidOracle& m1, const MatroidOracle& m2, IndexSet x[2], int e) {
    const MatroidOracle* oracle[2] = {&m1, &m2};

    auto side_of = [&](int elem) {
        if (set_contains(x[0], elem)) return 0;
        if (set_contains(x[1], elem)) return 1;
        return -1;
    };
    auto can_enter = [&](int side, int elem) {
        return oracle[side]->is_independent(set_insert(x[side], elem));
    };

    // parent[v] = (previous element, side v would leave... ) encoded below.
    // For each visited element we remember the arc that discovered it.
    struct Visit {
        int parent_elem;
        int entered_side; // side the parent enters, displacing this element
    };
    std::vector<int> visited(static_cast<std::size_t>(m1.ground_size()), 0);
    std::vector<Visit> via(static_cast<std::size_t>(m1.ground_size()));

    std::deque<int> queue;
    queue.push_back(e);
    visited[static_cast<std::size_t>(e)] = 1;

    int terminal = -1;
    int terminal_side = -1;
    while (!queue.empty() && terminal == -1) {
        int y = queue.front();
        queue.pop_front();
        for (int side = 0; side < 2 && terminal == -1; ++side) {
            if (side_of(y) == side) continue;
            if (can_enter(side, y)) {
                terminal = y;
                terminal_side = side;
                break;
            }
            // Circuit of y against x[side]: the z whose removal readmits y.
            IndexSet with_y = set_insert(x[side], y);
            for (int z : x[side]) {
                if (visited[static_cast<std::size_t>(z)]) continue;
                if (oracle[side]->is_independent(set_erase(with_y, z))) {
                    visited[static_cast<std::size_t>(z)] = 1;
                    via[static_cast<std::size_t>(z)] = {y, side};
                    queue.push_back(z);
                }
            }
        }
    }
    if (terminal == -1) return false;

    // Apply the exchanges along the path back to e: the terminal enters
    // terminal_side outright; each displaced element is replaced by its
    // predecessor in the side it left.
    x[terminal_side] = set_insert(x[terminal_side], terminal);
    int current = terminal;
    while (current != e) {
        const Visit& step = via[static_cast<std::size_t>(current)];
        int side = step.entered_side;
        x[side] = set_erase(x[side], current);
        x[side] = set_insert(x[side], step.parent_elem);
        current = step.parent_elem;
    }
    return true;
}

} // namespace

namespace detail {

std::optional<DisjointBasePair> min_weight_disjoint_bases_ordered(const MatroidOracle& m1,
                                                                  const MatroidOracle& m2,
                                                                  const CostVector& w,
                                                                  const std::vector<int>& order) {
    if (m1.ground_size() != m2.ground_size()) throw DomainError("matroid ground sets differ");
    const int n = m1.ground_size();
    if (static_cast<int>(w.size()) != n) throw DomainError("weight length mismatch");

    std::vector<int> sorted = order;
    std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) {
        return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)];
    });

    IndexSet x[2];
    int taken = 0;
    const int target = m1.rank() + m2.rank();
    for (int e : sorted) {
        if (taken == target) break;
        if (try_augment(m1, m2, x, e)) ++taken;
    }
    if (taken != target) return std::nullopt;

    DisjointBasePair pair;
    pair.b1 = x[0];
    pair.b2 = x[1];
    pair.total_weight = sum_over(w, x[0]) + sum_over(w, x[1]);
    return pair;
}

} // namespace detail

std::optional<DisjointBasePair> min_weight_disjoint_bases(const MatroidOracle& m1,
                                                          const MatroidOracle& m2,
                                                          const CostVector& w) {
    std::vector<int> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    return detail::min_weight_disjoint_bases_ordered(m1, m2, w, order);
}

} // namespace copic
