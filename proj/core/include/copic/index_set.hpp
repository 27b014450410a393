#ifndef COPIC_INDEX_SET_HPP
#define COPIC_INDEX_SET_HPP

#include <algorithm>
#include <vector>

namespace copic {

/// A subset of a ground set [n], stored as strictly increasing indices.
using IndexSet = std::vector<int>;

inline bool is_canonical_set(const IndexSet& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

inline IndexSet canonical_set(IndexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool set_contains(const IndexSet& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexSet set_insert(IndexSet s, int x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it == s.end() || *it != x) s.insert(it, x);
    return s;
}

inline IndexSet set_erase(IndexSet s, int x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it != s.end() && *it == x) s.erase(it);
    return s;
}

/// Graded lexicographic order: smaller sets first, lexicographic within a
/// cardinality. This is the canonical enumeration and tie-breaking order.
inline bool graded_lex_less(const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace copic

#endif // COPIC_INDEX_SET_HPP
