// Permutations of {1..n} with inline storage, Coxeter length, sign,
// reduced words, and enumeration. n stays small (factorial-size bases).

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhecke {

class Perm {
  public:
    static constexpr int kMax = 12;

    Perm() : n_(0) {}
    explicit Perm(int n) : n_(n) {
        check_size(n);
        for (int i = 0; i < n; ++i) img_[i] = static_cast<uint8_t>(i + 1);
    }
    explicit Perm(const std::vector<int>& images) : n_(static_cast<int>(images.size())) {
        check_size(n_);
        std::array<bool, kMax + 1> seen{};
        for (int i = 0; i < n_; ++i) {
            int v = images[i];
            if (v < 1 || v > n_ || seen[v]) throw std::invalid_argument("not a permutation");
            seen[v] = true;
            img_[i] = static_cast<uint8_t>(v);
        }
    }

    int size() const { return n_; }
    int operator()(int i) const { return img_[i - 1]; }  // 1-based
    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            if (img_[i] != i + 1) return false;
        return true;
    }

    // (a*b)(i) = a(b(i))
    friend Perm compose(const Perm& a, const Perm& b) {
        Perm r(a.n_);
        for (int i = 1; i <= a.n_; ++i) r.img_[i - 1] = static_cast<uint8_t>(a(b(i)));
        return r;
    }

    Perm inverse() const {
        Perm r(n_);
        for (int i = 1; i <= n_; ++i) r.img_[img_[i - 1] - 1] = static_cast<uint8_t>(i);
        return r;
    }

    // w * s_i : swap the images at positions i, i+1 (1-based i < n)
    Perm right_mul_s(int i) const {
        Perm r = *this;
        std::swap(r.img_[i - 1], r.img_[i]);
        return r;
    }
    // s_i * w : swap the values i, i+1 in the image array
    Perm left_mul_s(int i) const {
        Perm r = *this;
        for (int j = 0; j < n_; ++j) {
            if (r.img_[j] == i)
                r.img_[j] = static_cast<uint8_t>(i + 1);
            else if (r.img_[j] == i + 1)
                r.img_[j] = static_cast<uint8_t>(i);
        }
        return r;
    }

    bool right_descent(int i) const { return img_[i - 1] > img_[i]; }  // l(w s_i) < l(w)
    bool left_descent(int i) const {
        // l(s_i w) < l(w)  <=>  i appears after i+1 in one-line form
        return inverse().right_descent(i);
    }

    int length() const {
        int inv = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (img_[i] > img_[j]) ++inv;
        return inv;
    }
    int sign() const { return length() % 2 == 0 ? 1 : -1; }

    // deterministic reduced word (smallest descent first when unwinding)
    std::vector<int> reduced_word() const {
        std::vector<int> rev;
        Perm w = *this;
        while (!w.is_identity()) {
            int i = 1;
            while (!w.right_descent(i)) ++i;
            w = w.right_mul_s(i);
            rev.push_back(i);
        }
        return std::vector<int>(rev.rbegin(), rev.rend());
    }

    // embed into S_m, fixing the added points
    Perm extended(int m) const {
        Perm r(m);
        for (int i = 0; i < n_; ++i) r.img_[i] = img_[i];
        return r;
    }

    bool operator==(const Perm& o) const {
        if (n_ != o.n_) return false;
        for (int i = 0; i < n_; ++i)
            if (img_[i] != o.img_[i]) return false;
        return true;
    }
    bool operator!=(const Perm& o) const { return !(*this == o); }
    bool operator<(const Perm& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (int i = 0; i < n_; ++i)
            if (img_[i] != o.img_[i]) return img_[i] < o.img_[i];
        return false;
    }

    std::string one_line() const {
        std::string s = "[";
        for (int i = 0; i < n_; ++i) {
            if (i) s += ",";
            s += std::to_string(img_[i]);
        }
        return s + "]";
    }

    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> cyc;
        std::array<bool, kMax + 1> done{};
        for (int i = 1; i <= n_; ++i) {
            if (done[i]) continue;
            std::vector<int> c;
            int j = i;
            while (!done[j]) {
                done[j] = true;
                c.push_back(j);
                j = img_[j - 1];
            }
            cyc.push_back(std::move(c));
        }
        return cyc;
    }

  private:
    static void check_size(int n) {
        if (n < 0 || n > kMax) throw std::invalid_argument("permutation size out of range");
    }
    int n_;
    std::array<uint8_t, kMax> img_{};
};

inline void for_each_perm(int n, const std::function<void(const Perm&)>& f) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    do {
        f(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
}

inline std::vector<Perm> all_perms(int n) {
    std::vector<Perm> v;
    for_each_perm(n, [&](const Perm& w) { v.push_back(w); });
    return v;
}

}  // namespace qhecke
