// Minimal-length representatives of (S_{k_1} x ... x S_{k_n})-double
// cosets in S_m, m = k_1 + ... + k_n. An element x is minimal iff its
// left and right descent sets avoid the parabolic generators, i.e.
// x(j) < x(j+1) and x^-1(j) < x^-1(j+1) whenever j, j+1 lie in one block.

#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "partitions.hpp"
#include "perm.hpp"

namespace qhecke {

// generator indices j such that s_j lies in the parabolic subgroup of k
inline std::vector<int> parabolic_generators(const Composition& k) {
    std::vector<int> J;
    int pos = 0;
    for (int a = 1; a <= k.length(); ++a) {
        for (int j = 1; j < k.part(a); ++j) J.push_back(pos + j);
        pos += k.part(a);
    }
    return J;
}

inline bool is_min_coset_rep(const Perm& x, const std::vector<int>& J) {
    Perm xi = x.inverse();
    for (int j : J) {
        if (x(j) > x(j + 1)) return false;
        if (xi(j) > xi(j + 1)) return false;
    }
    return true;
}

inline std::vector<Perm> min_double_coset_reps(const Composition& k) {
    static std::map<std::vector<int>, std::vector<Perm>> cache;
    static std::mutex mtx;
    std::vector<int> key(k.parts.begin(), k.parts.begin() + k.length());
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    int m = k.total();
    auto J = parabolic_generators(k);
    std::vector<Perm> reps;
    for_each_perm(m, [&](const Perm& x) {
        if (is_min_coset_rep(x, J)) reps.push_back(x);
    });
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::move(key), reps);
    return reps;
}

}  // namespace qhecke
