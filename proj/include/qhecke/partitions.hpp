// Partitions and compositions: dominance order, enumeration, conjugates.
// Compositions may carry zero parts; the length ignores trailing zeros.

#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhecke {

struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit Composition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    void validate() const {
        for (int p : parts)
            if (p < 0) throw std::invalid_argument("negative part in composition");
    }
    int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const {
        int l = static_cast<int>(parts.size());
        while (l > 0 && parts[l - 1] == 0) --l;
        return l;
    }
    int part(int i) const {  // 1-based, 0 beyond stored parts
        return (i >= 1 && i <= static_cast<int>(parts.size())) ? parts[i - 1] : 0;
    }
    bool operator==(const Composition& o) const {
        int l = std::max(length(), o.length());
        for (int i = 1; i <= l; ++i)
            if (part(i) != o.part(i)) return false;
        return true;
    }
    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    void validate() const {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i && parts[i] > parts[i - 1])
                throw std::invalid_argument("partition parts must decrease");
        }
    }
    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const {  // 1-based row length, 0 beyond
        return (i >= 1 && i <= length()) ? parts[i - 1] : 0;
    }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; j <= part(1); ++j) {
            int cnt = 0;
            for (int p : parts)
                if (p >= j) ++cnt;
            c.push_back(cnt);
        }
        return Partition(c);
    }

    bool contains(const Partition& mu) const {
        for (int i = 1; i <= mu.length(); ++i)
            if (part(i) < mu.part(i)) return false;
        return true;
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    // serialized as [6,4,1]
    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + "]";
    }
};

inline Partition sorted_partition(const Composition& k) {
    std::vector<int> p;
    for (int x : k.parts)
        if (x > 0) p.push_back(x);
    std::sort(p.rbegin(), p.rend());
    return Partition(p);
}

// dominance: all partial sums of lambda >= those of mu; sizes must agree
inline bool dominance_geq(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw std::invalid_argument("dominance: size mismatch");
    long a = 0, b = 0;
    int l = std::max(lam.length(), mu.length());
    for (int i = 1; i <= l; ++i) {
        a += lam.part(i);
        b += mu.part(i);
        if (a < b) return false;
    }
    return true;
}

inline std::vector<Partition> partitions_of(int n, int max_len = -1) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace qhecke
