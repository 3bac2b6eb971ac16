#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "enumap/errors.hpp"
#include "enumap/partitions.hpp"

namespace enumap {

// Permutation of [0..n-1] as its image vector.
using Perm = std::vector<int>;

inline Perm perm_id(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// (f*g)(x) = f(g(x))
inline Perm perm_compose(const Perm& f, const Perm& g) {
    Perm r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
    return r;
}

inline Perm perm_inverse(const Perm& f) {
    Perm r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<int>(i);
    return r;
}

inline int perm_num_cycles(const Perm& f) {
    int n = static_cast<int>(f.size()), count = 0;
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++count;
        for (int j = i; !seen[j]; j = f[j]) seen[j] = true;
    }
    return count;
}

inline Partition perm_cycle_type(const Perm& f) {
    int n = static_cast<int>(f.size());
    std::vector<bool> seen(n, false);
    Partition type;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = f[j]) {
            seen[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

// Disjoint-set union over points acted on by a family of permutations.
struct DSU {
    explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int components() {
        int c = 0;
        for (size_t i = 0; i < parent.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
        return c;
    }
    std::vector<int> parent;
};

// Do the given permutations generate a transitive action on [0..n-1]?
inline bool perms_transitive(const std::vector<Perm>& ps, int n) {
    if (n <= 1) return true;
    DSU dsu(n);
    for (const auto& p : ps)
        for (int i = 0; i < n; ++i) dsu.unite(i, p[i]);
    return dsu.components() == 1;
}

// All permutations of S_n in lexicographic order (cached per n).
inline const std::vector<Perm>& all_perms(int n) {
    static std::map<int, std::vector<Perm>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Perm> out;
    Perm p = perm_id(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return cache.emplace(n, std::move(out)).first->second;
}

// Enumerate fixed-point-free involutions (perfect matchings) of [0..n-1].
inline void for_each_matching(int n, const std::function<void(const Perm&)>& fn) {
    if (n % 2) throw usage_error("for_each_matching: odd ground set");
    Perm m(n, -1);
    auto rec = [&](auto&& self) -> void {
        int a = -1;
        for (int i = 0; i < n; ++i)
            if (m[i] < 0) {
                a = i;
                break;
            }
        if (a < 0) {
            fn(m);
            return;
        }
        for (int b = a + 1; b < n; ++b) {
            if (m[b] >= 0) continue;
            m[a] = b;
            m[b] = a;
            self(self);
            m[a] = m[b] = -1;
        }
    };
    rec(rec);
}

// Enumerate permutations of [0..n-1] whose cycles all have length 3.
inline void for_each_all_three_cycles(int n, const std::function<void(const Perm&)>& fn) {
    if (n % 3) throw usage_error("for_each_all_three_cycles: n not divisible by 3");
    Perm p(n, -1);
    auto rec = [&](auto&& self) -> void {
        int a = -1;
        for (int i = 0; i < n; ++i)
            if (p[i] < 0) {
                a = i;
                break;
            }
        if (a < 0) {
            fn(p);
            return;
        }
        for (int b = 0; b < n; ++b) {
            if (p[b] >= 0 || b == a) continue;
            for (int c = 0; c < n; ++c) {
                if (p[c] >= 0 || c == a || c == b) continue;
                p[a] = b;
                p[b] = c;
                p[c] = a;
                self(self);
                p[a] = p[b] = p[c] = -1;
            }
        }
    };
    rec(rec);
}

// Permutations of a prescribed cycle type (filtered from S_n; n stays small).
inline std::vector<Perm> perms_of_type(const Partition& type) {
    int n = part_size(type);
    std::vector<Perm> out;
    for (const auto& p : all_perms(n))
        if (perm_cycle_type(p) == type) out.push_back(p);
    return out;
}

}  // namespace enumap
