#pragma once

#include <map>
#include <string>
#include <utility>

#include "enumap/mpoly.hpp"

namespace enumap {

// Exact table (n, 2g) -> polynomial in the family's markers. Genus is stored
// doubled so non-oriented half-integer genera stay integral; absent entries
// mean zero. Orientable families only populate even 2g.
struct GenusTable {
    std::string family;
    VarSet vars;
    std::map<std::pair<int, int>, MPoly> entries;

    GenusTable() = default;
    GenusTable(std::string fam, VarSet v) : family(std::move(fam)), vars(std::move(v)) {}

    void add(int n, int two_g, const MPoly& value) {
        if (value.is_zero()) return;
        auto key = std::make_pair(n, two_g);
        auto it = entries.find(key);
        if (it == entries.end()) {
            entries.emplace(key, value);
        } else {
            it->second += value;
            if (it->second.is_zero()) entries.erase(it);
        }
    }

    MPoly value(int n, int two_g) const {
        auto it = entries.find({n, two_g});
        return it == entries.end() ? MPoly(vars) : it->second;
    }

    // Sum over all genera at fixed n.
    MPoly genus_sum(int n) const {
        MPoly s(vars);
        for (const auto& [key, v] : entries)
            if (key.first == n) s += v;
        return s;
    }

    int max_two_g(int n) const {
        int m = -1;
        for (const auto& [key, v] : entries)
            if (key.first == n) m = std::max(m, key.second);
        return m;
    }
};

}  // namespace enumap
