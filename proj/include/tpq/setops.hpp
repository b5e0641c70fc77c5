#pragma once

#include <algorithm>
#include <vector>

namespace tpq {

// Sets throughout the library are sorted duplicate-free vectors; keeping one
// canonical representation makes every operation deterministic.
template <typename T>
std::vector<T> canonical_set(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

template <typename T>
bool set_contains(const std::vector<T>& s, const T& x) {
    return std::binary_search(s.begin(), s.end(), x);
}

template <typename T>
bool is_subset(const std::vector<T>& a, const std::vector<T>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <typename T>
std::vector<T> set_union(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <typename T>
std::vector<T> set_intersect(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <typename T>
std::vector<T> set_diff(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <typename T>
bool sets_intersect(const std::vector<T>& a, const std::vector<T>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return true;
    }
    return false;
}

}  // namespace tpq
