// Young tableaux: standard and semistandard fillings, Kostka numbers,
// q-contents, the column-strict restriction sets of the fused branching
// rule, and Bratteli diagrams for chains of composition prefixes.

#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "partitions.hpp"
#include "perm.hpp"

namespace qhecke {

struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;  // row-major filling

    int entry(int r, int c) const { return rows[r - 1][c - 1]; }  // 1-based

    bool is_standard() const {
        int n = shape.size();
        std::vector<bool> seen(n + 1, false);
        for (int r = 1; r <= shape.length(); ++r)
            for (int c = 1; c <= shape.part(r); ++c) {
                int v = entry(r, c);
                if (v < 1 || v > n || seen[v]) return false;
                seen[v] = true;
                if (c > 1 && entry(r, c - 1) >= v) return false;
                if (r > 1 && entry(r - 1, c) >= v) return false;
            }
        return true;
    }

    bool is_semistandard() const {
        for (int r = 1; r <= shape.length(); ++r)
            for (int c = 1; c <= shape.part(r); ++c) {
                int v = entry(r, c);
                if (v < 1) return false;
                if (c > 1 && entry(r, c - 1) > v) return false;
                if (r > 1 && entry(r - 1, c) >= v) return false;
            }
        return true;
    }

    Composition weight() const {
        int maxv = 0;
        for (const auto& row : rows)
            for (int v : row) maxv = std::max(maxv, v);
        std::vector<int> w(maxv, 0);
        for (const auto& row : rows)
            for (int v : row) ++w[v - 1];
        return Composition(w);
    }

    // row-reading word, used as the canonical ordering key
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
        return w;
    }

    // position (row, col) of value v in a standard tableau
    std::pair<int, int> find(int v) const {
        for (int r = 1; r <= shape.length(); ++r)
            for (int c = 1; c <= shape.part(r); ++c)
                if (entry(r, c) == v) return {r, c};
        throw std::invalid_argument("value not in tableau");
    }

    // swap values i and i+1; result may fail to be standard
    Tableau swapped(int i) const {
        Tableau t = *this;
        for (auto& row : t.rows)
            for (int& v : row) {
                if (v == i)
                    v = i + 1;
                else if (v == i + 1)
                    v = i;
            }
        return t;
    }

    bool operator==(const Tableau& o) const { return rows == o.rows; }
    bool operator<(const Tableau& o) const { return reading_word() < o.reading_word(); }

    // serialized as row lists [[1,2,4],[3]]
    std::string str() const {
        std::string s = "[";
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r) s += ",";
            s += "[";
            for (size_t c = 0; c < rows[r].size(); ++c) {
                if (c) s += ",";
                s += std::to_string(rows[r][c]);
            }
            s += "]";
        }
        return s + "]";
    }
};

// all standard tableaux of shape lambda, lexicographic by reading word
std::vector<Tableau> list_stab(const Partition& lambda);

// all semistandard tableaux of shape lambda and weight nu
std::vector<Tableau> list_sstab(const Partition& lambda, const Composition& nu);

long kostka(const Partition& lambda, const Composition& nu);

// classical contents cc_i = col - row of the node holding i
std::vector<int> contents(const Tableau& t);

// q-contents c_i = q^{2 cc_i}
std::vector<LaurentQ> qcontents(const Tableau& t);

// project entries of a standard tableau through the block map of k
// (1..k_1 -> 1, next k_2 -> 2, ...); result may fail to be semistandard
Tableau block_collapse(const Tableau& t, const Composition& k);

// The set Res_k(lambda): mu in S_{k,n-1} with mu inside lambda and
// lambda/mu having at most one box per column.
std::vector<Partition> restriction_set(const Partition& lambda, const Composition& k, int n);

// lambda ranges over S_{k,n} = {lambda |- k_1+...+k_n, lambda >= k_ord}
std::vector<Partition> admissible_shapes(const Composition& k, int n);

struct BratteliLevel {
    std::vector<Partition> vertices;
    // edges[i] lists indices into the previous level's vertices
    std::vector<std::vector<int>> edges;
    std::vector<long> path_counts;  // paths from the root
};

struct Bratteli {
    Composition k;
    std::vector<BratteliLevel> levels;  // level m = S_{k,m}, level 0 = {empty}
    std::string dot() const;
};

Bratteli bratteli(const Composition& k, int depth);

}  // namespace qhecke
