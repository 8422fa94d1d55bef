#include "qhecke/tableaux.hpp"

#include <algorithm>
#include <functional>

namespace qhecke {

std::vector<Tableau> list_stab(const Partition& lambda) {
    int n = lambda.size();
    std::vector<Tableau> out;
    Tableau t;
    t.shape = lambda;
    t.rows.resize(lambda.length());
    for (int r = 0; r < lambda.length(); ++r) t.rows[r].assign(lambda.parts[r], 0);
    std::vector<int> fill(lambda.length(), 0);  // boxes filled per row

    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            out.push_back(t);
            return;
        }
        for (int r = 0; r < lambda.length(); ++r) {
            int c = fill[r];
            if (c >= lambda.parts[r]) continue;
            if (r > 0 && fill[r - 1] <= c) continue;  // column constraint
            t.rows[r][c] = v;
            ++fill[r];
            rec(v + 1);
            --fill[r];
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tableau> list_sstab(const Partition& lambda, const Composition& nu) {
    if (lambda.size() != nu.total())
        throw std::invalid_argument("list_sstab: |lambda| != |nu|");
    std::vector<Tableau> out;
    Tableau t;
    t.shape = lambda;
    t.rows.resize(lambda.length());
    for (int r = 0; r < lambda.length(); ++r) t.rows[r].assign(lambda.parts[r], 0);
    std::vector<int> fill(lambda.length(), 0);
    int maxv = static_cast<int>(nu.parts.size());

    // place the copies of value v into distinct columns, left to right,
    // one per row at most... semistandard: equal values weakly right,
    // so value v occupies a horizontal strip
    std::function<void(int, int, int)> place = [&](int v, int remaining, int minrow) {
        if (remaining == 0) {
            if (v == maxv) {
                bool full = true;
                for (int r = 0; r < lambda.length(); ++r)
                    if (fill[r] != lambda.parts[r]) full = false;
                if (full) out.push_back(t);
            } else {
                place(v + 1, nu.part(v + 2 - 1), 0);
            }
            return;
        }
        // try to put one copy of v in each row >= minrow (ascending keeps
        // the horizontal-strip shape: later copies to strictly lower rows
        // would violate column strictness)
        for (int r = minrow; r < lambda.length(); ++r) {
            int c = fill[r];
            if (c >= lambda.parts[r]) continue;
            if (r > 0 && fill[r - 1] <= c) continue;          // column would not increase
            if (r > 0 && t.rows[r - 1][c] >= v) continue;     // strictly increasing down
            if (c > 0 && t.rows[r][c - 1] > v) continue;      // weakly increasing right
            t.rows[r][c] = v;
            ++fill[r];
            place(v, remaining - 1, r);
            --fill[r];
        }
    };
    if (maxv == 0) {
        if (lambda.size() == 0) out.push_back(t);
    } else {
        place(1, nu.part(1), 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long kostka(const Partition& lambda, const Composition& nu) {
    return static_cast<long>(list_sstab(lambda, nu).size());
}

std::vector<int> contents(const Tableau& t) {
    int n = t.shape.size();
    std::vector<int> cc(n);
    for (int v = 1; v <= n; ++v) {
        auto [r, c] = t.find(v);
        cc[v - 1] = c - r;
    }
    return cc;
}

std::vector<LaurentQ> qcontents(const Tableau& t) {
    std::vector<LaurentQ> out;
    for (int cc : contents(t)) out.push_back(LaurentQ::gen(2 * cc));
    return out;
}

Tableau block_collapse(const Tableau& t, const Composition& k) {
    std::vector<int> block(t.shape.size() + 1, 0);
    int v = 1;
    for (int a = 1; a <= k.length(); ++a)
        for (int j = 0; j < k.part(a); ++j) block[v++] = a;
    Tableau r = t;
    for (auto& row : r.rows)
        for (int& x : row) x = block[x];
    return r;
}

std::vector<Partition> admissible_shapes(const Composition& k, int n) {
    std::vector<int> pref(k.parts.begin(),
                          k.parts.begin() + std::min<size_t>(n, k.parts.size()));
    while (static_cast<int>(pref.size()) < n) pref.push_back(0);
    Composition kn{pref};
    int m = kn.total();
    Partition kord = sorted_partition(kn);
    std::vector<Partition> out;
    for (const auto& lam : partitions_of(m))
        if (dominance_geq(lam, kord)) out.push_back(lam);
    return out;
}

std::vector<Partition> restriction_set(const Partition& lambda, const Composition& k, int n) {
    // admissibility of lambda itself
    {
        auto shapes = admissible_shapes(k, n);
        if (std::find(shapes.begin(), shapes.end(), lambda) == shapes.end())
            throw std::invalid_argument("restriction_set: lambda not in S_{k,n}");
    }
    std::vector<Partition> out;
    for (const auto& mu : admissible_shapes(k, n - 1)) {
        if (!lambda.contains(mu)) continue;
        bool ok = true;  // at most one box of lambda/mu per column
        for (int col = 1; col <= lambda.part(1) && ok; ++col) {
            int cnt = 0;
            for (int r = 1; r <= lambda.length(); ++r)
                if (lambda.part(r) >= col && mu.part(r) < col) ++cnt;
            if (cnt > 1) ok = false;
        }
        if (ok) out.push_back(mu);
    }
    return out;
}

Bratteli bratteli(const Composition& k, int depth) {
    Bratteli b;
    b.k = k;
    BratteliLevel root;
    root.vertices.push_back(Partition{});
    root.edges.push_back({});
    root.path_counts.push_back(1);
    b.levels.push_back(root);
    for (int m = 1; m <= depth; ++m) {
        BratteliLevel lev;
        lev.vertices = admissible_shapes(k, m);
        const auto& prev = b.levels.back();
        for (const auto& lam : lev.vertices) {
            std::vector<int> es;
            long paths = 0;
            auto res = restriction_set(lam, k, m);
            for (const auto& mu : res) {
                auto it = std::find(prev.vertices.begin(), prev.vertices.end(), mu);
                if (it != prev.vertices.end()) {
                    int idx = static_cast<int>(it - prev.vertices.begin());
                    es.push_back(idx);
                    paths += prev.path_counts[idx];
                }
            }
            lev.edges.push_back(es);
            lev.path_counts.push_back(paths);
        }
        b.levels.push_back(lev);
    }
    return b;
}

std::string Bratteli::dot() const {
    std::ostringstream os;
    os << "digraph bratteli {\n  rankdir=TB;\n  node [shape=box];\n";
    for (size_t m = 0; m < levels.size(); ++m) {
        for (size_t i = 0; i < levels[m].vertices.size(); ++i) {
            std::string name = "v" + std::to_string(m) + "_" + std::to_string(i);
            std::string label =
                levels[m].vertices[i].parts.empty() ? "{}" : levels[m].vertices[i].str();
            os << "  " << name << " [label=\"" << label << " : "
               << levels[m].path_counts[i] << "\"];\n";
        }
    }
    for (size_t m = 1; m < levels.size(); ++m)
        for (size_t i = 0; i < levels[m].vertices.size(); ++i)
            for (int j : levels[m].edges[i])
                os << "  v" << m - 1 << "_" << j << " -> v" << m << "_" << i << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace qhecke
