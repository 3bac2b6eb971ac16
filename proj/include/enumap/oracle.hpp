#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "enumap/genus_table.hpp"
#include "enumap/perm.hpp"
#include "enumap/rat.hpp"

namespace enumap::oracle {

// ---------------------------------------------------------------------------
// Permutation factorizations (ground truth for weighted Hurwitz numbers).
// ---------------------------------------------------------------------------

// Number of tuples (sigma_0, ..., sigma_m) with product identity and
// sigma_i in the conjugacy class of classes[i]; optionally transitive.
inline Int count_factorizations(const std::vector<Partition>& classes, bool transitive) {
    if (classes.empty()) throw usage_error("count_factorizations: no classes");
    int n = part_size(classes[0]);
    for (const auto& c : classes)
        if (part_size(c) != n) throw usage_error("count_factorizations: class sizes differ");
    if (n > 8) throw resource_error("count_factorizations: n > 8");
    if (n == 0) return 1;

    size_t m1 = classes.size();
    Int total = 0;
    std::vector<Perm> chosen;
    auto rec = [&](auto&& self, size_t i, const Perm& prod) -> void {
        if (i + 1 == m1) {
            // Last factor forced: prod * sigma_last = id.
            Perm last = perm_inverse(prod);
            if (perm_cycle_type(last) != classes[i]) return;
            if (transitive) {
                chosen.push_back(last);
                bool ok = perms_transitive(chosen, n);
                chosen.pop_back();
                if (!ok) return;
            }
            total += 1;
            return;
        }
        for (const auto& s : perms_of_type(classes[i])) {
            chosen.push_back(s);
            self(self, i + 1, perm_compose(prod, s));
            chosen.pop_back();
        }
    };
    rec(rec, 0, perm_id(n));
    return total;
}

// Monotone runs: ((a_1,b_1),...,(a_k,b_k)) with a_i < b_i and b_1 <= ... <= b_k.
// Enumerates the product permutations of all monotone runs of length k.
inline void for_each_monotone_run_product(int n, int k,
                                          const std::function<void(const Perm&)>& fn) {
    Perm acc = perm_id(n);
    auto rec = [&](auto&& self, int step, int min_b) -> void {
        if (step == k) {
            fn(acc);
            return;
        }
        for (int b = min_b; b < n; ++b)
            for (int a = 0; a < b; ++a) {
                std::swap(acc[a], acc[b]);  // right-multiply by (a b): acc * (a b)
                self(self, step + 1, b);
                std::swap(acc[a], acc[b]);
            }
    };
    rec(rec, 0, 1);
}

// Count tuples (sigma_{-2} of type lambda, sigma_{-1} of type mu,
// rho_0, ..., rho_{s-1} monotone runs of the given lengths) with
// sigma_{-2} sigma_{-1} rho_0 ... rho_{s-1} = id. Unsigned count; the sign
// (-1)^{sum k_r} of the weighted Hurwitz convention is applied by callers.
inline Int count_monotone(const Partition& lambda, const Partition& mu,
                          const std::vector<int>& run_lengths, bool transitive) {
    int n = part_size(lambda);
    if (part_size(mu) != n) throw usage_error("count_monotone: |lambda| != |mu|");
    if (n > 7) throw resource_error("count_monotone: n > 7");
    if (n == 0) return 1;

    // Pre-expand products of all runs, innermost first. For multiple runs,
    // recursion over run products keeps the transposition factors available
    // for the transitivity check.
    Int total = 0;
    std::vector<Perm> s2list = perms_of_type(lambda);

    std::function<void(size_t, const Perm&, std::vector<Perm>&)> over_runs =
        [&](size_t r, const Perm& suffix, std::vector<Perm>& parts) {
            if (r == run_lengths.size()) {
                // Need sigma_{-2} sigma_{-1} suffix = id with the class constraints:
                // sigma_{-1} = sigma_{-2}^{-1} suffix^{-1}.
                Perm suff_inv = perm_inverse(suffix);
                for (const auto& s2 : s2list) {
                    Perm s1 = perm_compose(perm_inverse(s2), suff_inv);
                    if (perm_cycle_type(s1) != mu) continue;
                    if (transitive) {
                        parts.push_back(s2);
                        parts.push_back(s1);
                        bool ok = perms_transitive(parts, n);
                        parts.pop_back();
                        parts.pop_back();
                        if (!ok) continue;
                    }
                    total += 1;
                }
                return;
            }
            for_each_monotone_run_product(n, run_lengths[r], [&](const Perm& rp) {
                parts.push_back(rp);
                over_runs(r + 1, perm_compose(suffix, rp), parts);
                parts.pop_back();
            });
        };
    std::vector<Perm> parts;
    over_runs(0, perm_id(n), parts);
    return total;
}

// ---------------------------------------------------------------------------
// Rooted orientable maps: dart pairs (sigma, alpha).
// Darts 0..2n-1; alpha_0 = (0 1)(2 3)...; faces are cycles of sigma*alpha.
// Rooted counts = (2n-1)!! * #{valid sigma} / (2n-1)!, a normalization
// validated against two known values before the suite relies on it.
// ---------------------------------------------------------------------------

enum class MapConstraint { none, all_faces_deg_3, bipartite, one_face };

inline Perm canonical_involution(int points) {
    Perm a(points);
    for (int i = 0; i < points; i += 2) {
        a[i] = i + 1;
        a[i + 1] = i;
    }
    return a;
}

// Marks: u on vertices, z on faces. Table keyed by (n_edges, 2g).
inline GenusTable count_rooted_maps(int n, MapConstraint constraint) {
    VarSet vars({"u", "z"});
    GenusTable table("oracle-maps", vars);
    if (constraint == MapConstraint::one_face) {
        if (n > 7) throw resource_error("count_rooted_maps: one_face needs n <= 7");
    } else if (constraint == MapConstraint::all_faces_deg_3) {
        if (n > 6) throw resource_error("count_rooted_maps: triangulations need n <= 6");
    } else if (n > 5) {
        throw resource_error("count_rooted_maps: n <= 5");
    }
    if (n == 0) {
        // The vertex map: one vertex, one face, no edges.
        table.add(0, 0, MPoly::variable(vars, "u") * MPoly::variable(vars, "z"));
        return table;
    }
    int darts = 2 * n;

    if (constraint == MapConstraint::bipartite)
        throw usage_error("count_rooted_maps: use count_rooted_bipartite_maps");

    // counts[(V,F)] with connectivity enforced.
    std::map<std::pair<int, int>, Int> counts;
    Perm alpha = canonical_involution(darts);

    auto record = [&](const Perm& sigma) {
        Perm phi = perm_compose(sigma, alpha);
        if (!perms_transitive({sigma, alpha}, darts)) return;
        counts[{perm_num_cycles(sigma), perm_num_cycles(phi)}] += 1;
    };

    if (constraint == MapConstraint::none) {
        for (const auto& sigma : all_perms(darts)) record(sigma);
    } else if (constraint == MapConstraint::all_faces_deg_3) {
        // Enumerate the face permutation phi with all cycles of length 3;
        // sigma = phi * alpha (alpha is an involution).
        for_each_all_three_cycles(darts, [&](const Perm& phi) {
            record(perm_compose(phi, alpha));
        });
    } else {  // one_face: phi_0 = (0 1 ... 2n-1) fixed, alpha free: sigma = phi_0*a.
        Perm phi0(darts);
        for (int i = 0; i < darts; ++i) phi0[i] = (i + 1) % darts;
        // Each alpha yields exactly one rooted 1-face map (the face cycle is
        // transitive, so the configuration is always connected).
        for_each_matching(darts, [&](const Perm& a) {
            Perm sigma = perm_compose(phi0, a);
            counts[{perm_num_cycles(sigma), 1}] += 1;
        });
        for (const auto& [vf, c] : counts) {
            auto [V, F] = vf;
            int two_g = 2 - V + n - F;
            Exp e(vars.arity(), 0);
            e[0] = V;
            e[1] = F;
            table.add(n, two_g, MPoly::monomial(vars, e, Rat(c)));
        }
        return table;
    }

    // Normalization: rooted = (2n-1)!! * count / (2n-1)!.
    Rat norm = Rat(double_factorial(2 * n - 1)) / Rat(factorial(2 * n - 1));
    for (const auto& [vf, c] : counts) {
        auto [V, F] = vf;
        int two_g = 2 - V + n - F;
        Rat val = Rat(c) * norm;
        if (denominator(val) != 1)
            throw domain_error("count_rooted_maps: normalization produced a non-integer");
        Exp e(vars.arity(), 0);
        e[0] = V;
        e[1] = F;
        table.add(n, two_g, MPoly::monomial(vars, e, val));
    }
    return table;
}

// Rooted bipartite maps from edge-labeled pairs (sigma_white, sigma_black);
// faces are cycles of sigma_white * sigma_black; rooted = count / (n-1)!.
// Marks: u white vertices, v black vertices, z faces.
inline GenusTable count_rooted_bipartite_maps(int n) {
    if (n > 6) throw resource_error("count_rooted_bipartite_maps: n <= 6");
    VarSet vars({"u", "v", "z"});
    GenusTable table("oracle-bipartite", vars);
    if (n == 0) return table;
    std::map<std::tuple<int, int, int>, Int> counts;
    for (const auto& sw : all_perms(n))
        for (const auto& sb : all_perms(n)) {
            if (!perms_transitive({sw, sb}, n)) continue;
            Perm phi = perm_compose(sw, sb);
            counts[{perm_num_cycles(sw), perm_num_cycles(sb), perm_num_cycles(phi)}] += 1;
        }
    Rat norm = Rat(1) / Rat(factorial(n - 1));
    for (const auto& [key, c] : counts) {
        auto [W, B, F] = key;
        int two_g = 2 - (W + B) + n - F;
        Rat val = Rat(c) * norm;
        if (denominator(val) != 1)
            throw domain_error("count_rooted_bipartite_maps: non-integer rooted count");
        Exp e(vars.arity(), 0);
        e[0] = W;
        e[1] = B;
        e[2] = F;
        table.add(n, two_g, MPoly::monomial(vars, e, val));
    }
    return table;
}

// Rooted one-face bipartite maps by (i white, j black) vertices: phi_0 fixed
// single cycle, sigma_black = sigma_white^{-1} phi_0; count each sigma_white once.
// Returns map (i, j, 2g) -> count.
inline std::map<std::tuple<int, int, int>, Int> count_one_face_bipartite(int n) {
    if (n > 7) throw resource_error("count_one_face_bipartite: n <= 7");
    std::map<std::tuple<int, int, int>, Int> counts;
    Perm phi0(n);
    for (int i = 0; i < n; ++i) phi0[i] = (i + 1) % n;
    for (const auto& sw : all_perms(n)) {
        Perm sb = perm_compose(perm_inverse(sw), phi0);
        int W = perm_num_cycles(sw), B = perm_num_cycles(sb);
        int two_g = 2 - (W + B) + n - 1;
        counts[{W, B, two_g}] += 1;
    }
    return counts;
}

// ---------------------------------------------------------------------------
// Rooted non-oriented maps: the three-matchings (flag) model.
// 4n half-sides; M_edge = (0 1)(2 3)... pairs the two half-sides of each
// half-edge; M_side is frozen to the canonical untwisted pairing joining
// half-edges 2j, 2j+1 into edge j; M_corner ranges over all perfect
// matchings. Vertices = orbits of M_edge u M_corner, faces = orbits of
// M_side u M_corner, edges = n; 2-2g = V - E + F. The rooted normalization
// divides by 4^n n! / (4n), pinned by h_1^0 = 2 and h_1^{1/2} = 1 and
// re-validated at n = 2 against the printed initial values.
// ---------------------------------------------------------------------------

struct NonOrientedConfig {
    int V, F, two_g;
    bool orientable;
    bool bipartite_graph;
    int white, black;  // vertex 2-coloring sizes when bipartite (white >= the
                       // class containing flag 0's vertex); -1 otherwise
};

inline int orbits_of_two_matchings(const Perm& a, const Perm& b, std::vector<int>* comp = nullptr) {
    int n = static_cast<int>(a.size());
    DSU dsu(n);
    for (int i = 0; i < n; ++i) {
        dsu.unite(i, a[i]);
        dsu.unite(i, b[i]);
    }
    if (comp) {
        comp->assign(n, -1);
        int next = 0;
        for (int i = 0; i < n; ++i) {
            int root = dsu.find(i);
            if ((*comp)[root] < 0) (*comp)[root] = next++;
            (*comp)[i] = (*comp)[dsu.find(i)];
        }
        return next;
    }
    return dsu.components();
}

inline void for_each_nonoriented_config(int n, const std::function<void(const Perm& corner)>& fn) {
    if (n > 4) throw resource_error("non-oriented matchings oracle: n <= 4");
    for_each_matching(4 * n, fn);
}

inline NonOrientedConfig analyze_nonoriented(int n, const Perm& medge, const Perm& mside,
                                             const Perm& mcorner) {
    int flags = 4 * n;
    NonOrientedConfig cfg{};
    std::vector<int> vcomp;
    cfg.V = orbits_of_two_matchings(medge, mcorner, &vcomp);
    cfg.F = orbits_of_two_matchings(mside, mcorner);
    cfg.two_g = 2 - (cfg.V - n + cfg.F);

    // Orientability: the union multigraph of the three matchings is bipartite.
    std::vector<int> color(flags, -1);
    cfg.orientable = true;
    for (int start = 0; start < flags && cfg.orientable; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty() && cfg.orientable) {
            int x = stack.back();
            stack.pop_back();
            for (int y : {medge[x], mside[x], mcorner[x]}) {
                if (color[y] < 0) {
                    color[y] = 1 - color[x];
                    stack.push_back(y);
                } else if (color[y] == color[x]) {
                    cfg.orientable = false;
                }
            }
        }
    }

    // Underlying-graph bipartiteness: 2-color the vertices along edges.
    // Edge j joins the vertices of its two half-edges (flags 4j and 4j+2).
    std::vector<int> vcolor(cfg.V, -1);
    cfg.bipartite_graph = true;
    std::vector<std::vector<int>> adj(cfg.V);
    for (int j = 0; j < n; ++j) {
        adj[vcomp[4 * j]].push_back(vcomp[4 * j + 2]);
        adj[vcomp[4 * j + 2]].push_back(vcomp[4 * j]);
    }
    for (int start = 0; start < cfg.V && cfg.bipartite_graph; ++start) {
        if (vcolor[start] >= 0) continue;
        vcolor[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty() && cfg.bipartite_graph) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x]) {
                if (vcolor[y] < 0) {
                    vcolor[y] = 1 - vcolor[x];
                    stack.push_back(y);
                } else if (vcolor[y] == vcolor[x]) {
                    cfg.bipartite_graph = false;
                }
            }
        }
    }
    if (cfg.bipartite_graph) {
        int c0 = 0;
        for (int v = 0; v < cfg.V; ++v)
            if (vcolor[v] == vcolor[vcomp[0]]) ++c0;
        cfg.white = c0;
        cfg.black = cfg.V - c0;
    } else {
        cfg.white = cfg.black = -1;
    }
    return cfg;
}

// Rooted non-oriented map counts with u on vertices, z on faces.
inline GenusTable count_rooted_nonoriented_maps(int n) {
    VarSet vars({"u", "z"});
    GenusTable table("oracle-nonoriented", vars);
    if (n == 0) {
        table.add(0, 0, MPoly::variable(vars, "u") * MPoly::variable(vars, "z"));
        return table;
    }
    int flags = 4 * n;
    Perm medge = canonical_involution(flags);
    Perm mside(flags);
    for (int j = 0; j < n; ++j) {
        mside[4 * j] = 4 * j + 2;
        mside[4 * j + 2] = 4 * j;
        mside[4 * j + 1] = 4 * j + 3;
        mside[4 * j + 3] = 4 * j + 1;
    }
    std::map<std::pair<int, int>, Int> counts;
    for_each_nonoriented_config(n, [&](const Perm& mc) {
        // Connectivity across all three matchings.
        DSU dsu(flags);
        for (int i = 0; i < flags; ++i) {
            dsu.unite(i, medge[i]);
            dsu.unite(i, mside[i]);
            dsu.unite(i, mc[i]);
        }
        if (dsu.components() != 1) return;
        auto cfg = analyze_nonoriented(n, medge, mside, mc);
        counts[{cfg.V, cfg.F}] += 1;
    });
    Rat norm = Rat(4 * n) / (rat_pow(Rat(4), n) * Rat(factorial(n)));
    for (const auto& [vf, c] : counts) {
        auto [V, F] = vf;
        int two_g = 2 - (V - n + F);
        Rat val = Rat(c) * norm;
        if (denominator(val) != 1)
            throw domain_error("count_rooted_nonoriented_maps: non-integer rooted count");
        Exp e(vars.arity(), 0);
        e[0] = V;
        e[1] = F;
        table.add(n, two_g, MPoly::monomial(vars, e, val));
    }
    return table;
}

// Orientable sector of the matchings model (for the cross-model invariant).
inline GenusTable count_rooted_nonoriented_maps_orientable_sector(int n) {
    VarSet vars({"u", "z"});
    GenusTable table("oracle-nonoriented-orientable", vars);
    int flags = 4 * n;
    Perm medge = canonical_involution(flags);
    Perm mside(flags);
    for (int j = 0; j < n; ++j) {
        mside[4 * j] = 4 * j + 2;
        mside[4 * j + 2] = 4 * j;
        mside[4 * j + 1] = 4 * j + 3;
        mside[4 * j + 3] = 4 * j + 1;
    }
    std::map<std::pair<int, int>, Int> counts;
    for_each_nonoriented_config(n, [&](const Perm& mc) {
        DSU dsu(flags);
        for (int i = 0; i < flags; ++i) {
            dsu.unite(i, medge[i]);
            dsu.unite(i, mside[i]);
            dsu.unite(i, mc[i]);
        }
        if (dsu.components() != 1) return;
        auto cfg = analyze_nonoriented(n, medge, mside, mc);
        if (!cfg.orientable) return;
        counts[{cfg.V, cfg.F}] += 1;
    });
    Rat norm = Rat(4 * n) / (rat_pow(Rat(4), n) * Rat(factorial(n)));
    for (const auto& [vf, c] : counts) {
        auto [V, F] = vf;
        int two_g = 2 - (V - n + F);
        Rat val = Rat(c) * norm;
        if (denominator(val) != 1)
            throw domain_error("orientable sector: non-integer rooted count");
        Exp e(vars.arity(), 0);
        e[0] = V;
        e[1] = F;
        table.add(n, two_g, MPoly::monomial(vars, e, val));
    }
    return table;
}

// One-face slices of the non-oriented model: map (i, j, 2g) -> rooted count
// of one-face bipartite maps with i white and j black vertices (the
// b-table), and the plain one-face counts u_n^g as (n+1-2g... encoded by V).
inline std::map<std::tuple<int, int, int>, Int> count_nonoriented_one_face_bipartite(int n) {
    int flags = 4 * n;
    Perm medge = canonical_involution(flags);
    Perm mside(flags);
    for (int j = 0; j < n; ++j) {
        mside[4 * j] = 4 * j + 2;
        mside[4 * j + 2] = 4 * j;
        mside[4 * j + 1] = 4 * j + 3;
        mside[4 * j + 3] = 4 * j + 1;
    }
    std::map<std::tuple<int, int, int>, Rat> acc;
    Rat norm = Rat(4 * n) / (rat_pow(Rat(4), n) * Rat(factorial(n)));
    for_each_nonoriented_config(n, [&](const Perm& mc) {
        DSU dsu(flags);
        for (int i = 0; i < flags; ++i) {
            dsu.unite(i, medge[i]);
            dsu.unite(i, mside[i]);
            dsu.unite(i, mc[i]);
        }
        if (dsu.components() != 1) return;
        auto cfg = analyze_nonoriented(n, medge, mside, mc);
        if (cfg.F != 1 || !cfg.bipartite_graph) return;
        // Both proper 2-colorings contribute, matching the symmetric table.
        acc[{cfg.white, cfg.black, cfg.two_g}] += norm / 2;
        acc[{cfg.black, cfg.white, cfg.two_g}] += norm / 2;
    });
    std::map<std::tuple<int, int, int>, Int> out;
    for (const auto& [k, v] : acc) {
        if (denominator(v) != 1)
            throw domain_error("count_nonoriented_one_face_bipartite: non-integer count");
        if (numerator(v) != 0) out[k] = numerator(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Constellations as transitive factorization tuples.
// ---------------------------------------------------------------------------

struct ConstellationKey {
    int two_g;
    Partition white_faces;           // cycle type of (sigma_1 ... sigma_m)^{-1}
    std::vector<int> vertex_counts;  // cycles of sigma_c for c = 1..m
    bool operator<(const ConstellationKey& o) const {
        return std::tie(two_g, white_faces, vertex_counts) <
               std::tie(o.two_g, o.white_faces, o.vertex_counts);
    }
};

// Labeled counts are factorization counts; rooted = labeled / (n-1)!.
inline std::map<ConstellationKey, Int> count_constellations(int m, int n, bool connected = true) {
    if (n > 6) throw resource_error("count_constellations: n <= 6");
    if (m >= 3 && n > 4) throw resource_error("count_constellations: n <= 4 when m >= 3");
    std::map<ConstellationKey, Int> out;
    if (n == 0) return out;
    std::vector<Perm> chosen;
    auto rec = [&](auto&& self, int c, const Perm& prod) -> void {
        if (c == m) {
            if (connected && !perms_transitive(chosen, n)) return;
            Perm phi = perm_inverse(prod);
            ConstellationKey key;
            key.white_faces = perm_cycle_type(phi);
            int total_cycles = part_len(key.white_faces);
            for (const auto& s : chosen) {
                key.vertex_counts.push_back(perm_num_cycles(s));
                total_cycles += key.vertex_counts.back();
            }
            key.two_g = 2 - (total_cycles - (m - 1) * n);
            out[key] += 1;
            return;
        }
        for (const auto& s : all_perms(n)) {
            chosen.push_back(s);
            self(self, c + 1, perm_compose(prod, s));
            chosen.pop_back();
        }
    };
    rec(rec, 0, perm_id(n));
    return out;
}

}  // namespace enumap::oracle
