#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sgm {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline std::vector<std::size_t> mask_to_indices(Mask m) {
    std::vector<std::size_t> out;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

inline Mask indices_to_mask(const std::vector<std::size_t>& idx) {
    Mask m = 0;
    for (auto i : idx) m |= Mask{1} << i;
    return m;
}

// Calls fn(mask) for every k-subset of {0..n-1} in increasing numeric order.
template <class Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(Mask{0});
        return;
    }
    Mask m = (Mask{1} << k) - 1;
    const Mask limit = Mask{1} << n;
    while (m < limit) {
        fn(m);
        Mask c = m & (~m + 1);
        Mask r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

// Same, but stops as soon as fn returns false; returns false if stopped.
template <class Fn>
bool all_k_subsets(int n, int k, Fn&& fn) {
    bool ok = true;
    if (k < 0 || k > n) return true;
    if (k == 0) return fn(Mask{0});
    Mask m = (Mask{1} << k) - 1;
    const Mask limit = Mask{1} << n;
    while (m < limit) {
        if (!fn(m)) return false;
        Mask c = m & (~m + 1);
        Mask r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return ok;
}

}  // namespace sgm
