#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enumap/partitions.hpp"
#include "enumap/tseries.hpp"

namespace enumap::tau {

// ---------------------------------------------------------------------------
// Weight function G(z) = e^{z/w} * prod_i (u_i + z) / prod_r (v_r + z).
// Parameters are symbols (kept formal) or exact rationals. w is either
// infinity (exponential factor dropped) or a formal symbol; a rational w
// would make e^{c/w} transcendental and is rejected to keep every
// coefficient an exact rational.
// ---------------------------------------------------------------------------
struct WeightG {
    int m = 0, s = 0;
    std::vector<std::optional<Rat>> u;  // size m; nullopt = symbolic "u<i>"
    std::vector<std::optional<Rat>> v;  // size s; nullopt = symbolic "v<r>"
    bool w_infinite = true;             // false = symbolic "w"

    static WeightG symbolic(int m, int s, bool w_infinite = true) {
        WeightG g;
        g.m = m;
        g.s = s;
        g.u.assign(m, std::nullopt);
        g.v.assign(s, std::nullopt);
        g.w_infinite = w_infinite;
        return g;
    }
};

struct TauOptions {
    int D1 = -1;       // max retained p part (default: T)
    int D2 = -1;       // max retained q part
    int v_order = -1;  // expansion depth in each 1/v beyond the mandatory one per box
    int w_order = -1;  // expansion depth in 1/w
    bool with_q = true;
};

inline VarSet tau_vars(const WeightG& G, int D1, int D2, bool with_q = true) {
    std::vector<std::string> names;
    for (int k = 1; k <= D1; ++k) names.push_back("p" + std::to_string(k));
    if (with_q)
        for (int k = 1; k <= D2; ++k) names.push_back("q" + std::to_string(k));
    for (int i = 0; i < G.m; ++i)
        if (!G.u[i]) names.push_back("u" + std::to_string(i));
    for (int r = 0; r < G.s; ++r)
        if (!G.v[r]) names.push_back("v" + std::to_string(r));
    if (!G.w_infinite) names.push_back("w");
    names.push_back("N");  // genus-grading marker, unused unless requested
    return VarSet(names);
}

// Power-sum expansion to a polynomial in p<k> (or q<k>) variables, dropping
// monomials containing parts above maxpart.
inline MPoly pexp_to_mpoly(const PExpansion& e, const VarSet& vars, const std::string& prefix,
                           int maxpart) {
    MPoly out(vars);
    for (const auto& [mu, c] : e) {
        if (!mu.empty() && mu[0] > maxpart) continue;
        Exp expo(vars.arity(), 0);
        for (int part : mu) expo[vars.index(prefix + std::to_string(part))]++;
        out.add_term(expo, c);
    }
    return out;
}

namespace detail {

// prod over boxes of G(content), exact. Rational v poles are reported with
// the offending content. Expansions: 1/(v + c) = v^{-1} sum_j (-c)^j v^{-j}
// truncated at v_order terms; e^{C/w} truncated at w_order in 1/w.
inline MPoly content_product(const WeightG& G, const VarSet& vars, const std::vector<Rat>& cs,
                             int v_order, int w_order, bool n_graded = false) {
    MPoly prod(vars, 1);
    size_t nvar = vars.index("N");
    auto content_poly = [&](const Rat& c) {
        // c or c/N depending on the grading mode
        if (!n_graded) return MPoly(vars, c);
        Exp e(vars.arity(), 0);
        e[nvar] = -1;
        return MPoly::monomial(vars, e, c);
    };
    for (int i = 0; i < G.m; ++i) {
        MPoly base = G.u[i] ? MPoly(vars, *G.u[i]) : MPoly::variable(vars, "u" + std::to_string(i));
        for (const Rat& c : cs) prod *= base + content_poly(c);
    }
    for (int r = 0; r < G.s; ++r) {
        if (G.v[r]) {
            Rat vr = *G.v[r];
            if (n_graded) throw usage_error("content_product: N-graded rational v unsupported");
            for (const Rat& c : cs) {
                if (vr + c == 0)
                    throw domain_error("weight function pole at content " + rat_to_string(c));
                prod *= MPoly(vars, Rat(1) / (vr + c));
            }
        } else {
            size_t vi = vars.index("v" + std::to_string(r));
            for (const Rat& c : cs) {
                // v^{-1} * sum_{j<v_order} (-c)^j v^{-j}; truncation window is
                // the caller's declared expansion order.
                MPoly factor(vars);
                Rat pw = 1;
                for (int j = 0; j < v_order; ++j) {
                    Exp e(vars.arity(), 0);
                    e[vi] = -1 - j;
                    if (n_graded) e[nvar] = -j;
                    factor.add_term(e, pw);
                    pw *= -c;
                }
                prod *= factor;
            }
        }
    }
    if (!G.w_infinite) {
        Rat total = 0;
        for (const Rat& c : cs) total += c;
        size_t wi = vars.index("w");
        MPoly expo(vars);
        Rat fact = 1;
        for (int j = 0; j <= w_order; ++j) {
            Exp e(vars.arity(), 0);
            e[wi] = -j;
            if (n_graded) e[nvar] = -j;
            if (j > 0) fact /= j;
            expo.add_term(e, rat_pow(total, j) * fact);
        }
        prod *= expo;
    }
    return prod;
}

}  // namespace detail

// Hypergeometric series: [t^n] = sum_{lambda |- n} s_lambda(p) s_lambda(q)
// prod_box G(c(box)), with p parts > D1 and q parts > D2 dropped.
// with_q = false specializes q := (1, 0, 0, ...), i.e. a factor 1/hook(l)
// (the constellation form of the series).
inline TSeries build_tau_G(const WeightG& G, int T, TauOptions opt = {}) {
    int D1 = opt.D1 < 0 ? T : opt.D1;
    int D2 = opt.D2 < 0 ? T : opt.D2;
    int vord = opt.v_order < 0 ? T + 1 : opt.v_order;
    int word = opt.w_order < 0 ? T + 1 : opt.w_order;
    VarSet vars = tau_vars(G, D1, D2, opt.with_q);
    TSeries out = TSeries::constant(vars, T, 1);
    for (int n = 1; n <= T; ++n) {
        MPoly acc(vars);
        for (const auto& l : partitions_of(n)) {
            PExpansion se = schur_in_p(l);
            MPoly sp = pexp_to_mpoly(se, vars, "p", D1);
            if (sp.is_zero()) continue;
            MPoly term = sp;
            if (opt.with_q) {
                MPoly sq = pexp_to_mpoly(se, vars, "q", D2);
                if (sq.is_zero()) continue;
                term *= sq;
            } else {
                term *= Rat(1) / Rat(hook_product(l));
            }
            std::vector<Rat> cs;
            for (int c : contents(l)) cs.emplace_back(c);
            term *= detail::content_product(G, vars, cs, vord, word);
            acc += term;
        }
        out.at(n) = std::move(acc);
    }
    return out;
}

// Coefficient extraction of Thm SchurExpansionWeightedHurwitz: the weighted
// Hurwitz number for profiles (lambda, mu), genus-defect vectors l, k, and
// j free transpositions. Requires the corresponding G parameters symbolic.
inline Rat weighted_hurwitz(const WeightG& G, const Partition& lambda, const Partition& mu,
                            const std::vector<int>& lvec, const std::vector<int>& kvec, int j) {
    int n = part_size(lambda);
    if (part_size(mu) != n) throw usage_error("weighted_hurwitz: |lambda| != |mu|");
    if (static_cast<int>(lvec.size()) != G.m || static_cast<int>(kvec.size()) != G.s)
        throw usage_error("weighted_hurwitz: l/k dimensions do not match G");
    if (j > 0 && G.w_infinite) throw usage_error("weighted_hurwitz: j > 0 needs finite w symbol");
    int kmax = 0;
    for (int k : kvec) kmax = std::max(kmax, k);
    TauOptions opt;
    opt.D1 = opt.D2 = std::max(1, n);
    opt.v_order = kmax + 1;
    opt.w_order = j;
    TSeries tau = build_tau_G(G, n, opt);
    const VarSet& vars = tau.vars();

    Exp mono(vars.arity(), 0);
    for (int part : lambda) mono[vars.index("p" + std::to_string(part))]++;
    for (int part : mu) mono[vars.index("q" + std::to_string(part))]++;
    for (int i = 0; i < G.m; ++i) {
        if (!G.u[i])
            mono[vars.index("u" + std::to_string(i))] = n - lvec[i];
        else if (lvec[i] != 0)
            throw usage_error("weighted_hurwitz: rational u cannot be graded by l");
    }
    for (int r = 0; r < G.s; ++r) {
        if (!G.v[r])
            mono[vars.index("v" + std::to_string(r))] = -n - kvec[r];
        else if (kvec[r] != 0)
            throw usage_error("weighted_hurwitz: rational v cannot be graded by k");
    }
    if (!G.w_infinite) mono[vars.index("w")] = -j;
    Rat c = tau.extract(n, mono);
    return c * Rat(factorial(n)) * Rat(factorial(j));
}

// ---------------------------------------------------------------------------
// Named tau families (Chapter 3/4 objects). Conventions frozen here:
//  - maps:  sum_l t^{|l|} s_l(p) theta_l prod (u + c(box));          vars u, p*
//  - bip:   sum_l t^{|l|} s_l(p)/hook(l) prod (u + c)(v + c);        vars u, v, p*
//  - zonal_maps: sum_l t^{|l|} Z_l(p)/hook(2l) theta1_l prod (u + c_1);
//  - zonal_bip:  sum_l t^{|l|} Z_l(p)/hook(2l) prod (u + c_1)(v + c_1);
//  - zonal_monotone: sum_l t^{|l|} Z_l(p)/hook(2l) prod u/(1 + u c_1),
//    materialized in Q[p][[u, t]] with u-window u_order.
// The content sign is pinned by the Virasoro constraints and by the oracle
// (rooted counts come out non-negative); the zonal normalizations carry the
// 1/hook(2l) of the three-matchings expansion.
// ---------------------------------------------------------------------------
enum class Family { maps, bip, zonal_maps, zonal_bip, zonal_monotone };

inline VarSet family_vars(Family f, int T) {
    std::vector<std::string> names{"u"};
    if (f == Family::bip || f == Family::zonal_bip) names.push_back("v");
    for (int k = 1; k <= T; ++k) names.push_back("p" + std::to_string(k));
    return VarSet(names);
}

inline TSeries build_tau_family(Family f, int T, int u_order = -1) {
    VarSet vars = family_vars(f, T);
    TSeries out = TSeries::constant(vars, T, 1);
    MPoly u = MPoly::variable(vars, "u");
    int uord = u_order < 0 ? T : u_order;

    for (int n = 1; n <= T; ++n) {
        MPoly acc(vars);
        bool zonal = (f != Family::maps && f != Family::bip);
        std::map<Partition, PExpansion> ztab;
        if (zonal) ztab = zonal_table(n);
        for (const auto& l : partitions_of(n)) {
            MPoly term(vars);
            switch (f) {
                case Family::maps: {
                    Rat th = theta(l);
                    if (th == 0) continue;
                    term = pexp_to_mpoly(schur_in_p(l), vars, "p", T) * th;
                    for (int c : contents(l)) term *= u + MPoly(vars, Rat(c));
                    break;
                }
                case Family::bip: {
                    term = pexp_to_mpoly(schur_in_p(l), vars, "p", T) *
                           (Rat(1) / Rat(hook_product(l)));
                    MPoly v = MPoly::variable(vars, "v");
                    for (int c : contents(l)) {
                        term *= u + MPoly(vars, Rat(c));
                        term *= v + MPoly(vars, Rat(c));
                    }
                    break;
                }
                case Family::zonal_maps: {
                    Rat th1 = theta_spec(ztab.at(l), n);
                    if (th1 == 0) continue;
                    term = pexp_to_mpoly(ztab.at(l), vars, "p", T) *
                           (th1 / Rat(hook_product(doubled(l))));
                    for (const Rat& c : contents_b(l, 1)) term *= u + MPoly(vars, c);
                    break;
                }
                case Family::zonal_bip: {
                    term = pexp_to_mpoly(ztab.at(l), vars, "p", T) *
                           (Rat(1) / Rat(hook_product(doubled(l))));
                    MPoly v = MPoly::variable(vars, "v");
                    for (const Rat& c : contents_b(l, 1)) {
                        term *= u + MPoly(vars, c);
                        term *= v + MPoly(vars, c);
                    }
                    break;
                }
                case Family::zonal_monotone: {
                    term = pexp_to_mpoly(ztab.at(l), vars, "p", T) *
                           (Rat(1) / Rat(hook_product(doubled(l))));
                    size_t ui = vars.index("u");
                    for (const Rat& c : contents_b(l, 1)) {
                        // 1/(u^{-1} + c) = u * sum_j (-c u)^j, windowed at uord.
                        MPoly factor(vars);
                        Rat pw = 1;
                        for (int jj = 0; 1 + jj <= uord; ++jj) {
                            Exp e(vars.arity(), 0);
                            e[ui] = 1 + jj;
                            factor.add_term(e, pw);
                            pw *= -c;
                        }
                        term = (term * factor).truncate_var(ui, uord);
                    }
                    break;
                }
            }
            acc += term;
        }
        out.at(n) = std::move(acc);
    }
    return out;
}

// Monotone series at deformation b: sum_l t^{|l|} J_l(p)/<J_l,J_l>_alpha
// prod_box 1/(u^{-1} + c_b(box)), materialized in Q[p][[u, t]] with the
// stated u-window (1/(u^{-1}+c) = u sum_j (-cu)^j). b = 1 reproduces the
// zonal_monotone family.
inline TSeries build_tau_monotone_b(const Rat& b, int T, int u_order) {
    Rat alpha = Rat(1) + b;
    VarSet vars = family_vars(Family::zonal_monotone, T);
    size_t ui = vars.index("u");
    TSeries out = TSeries::constant(vars, T, 1);
    for (int n = 1; n <= T; ++n) {
        auto jt = jack_table(n, alpha);
        MPoly acc(vars);
        for (const auto& [l, je] : jt) {
            Rat norm2 = inner_alpha(je, je, alpha);
            MPoly term = pexp_to_mpoly(je, vars, "p", T) * (Rat(1) / norm2);
            for (const Rat& c : contents_b(l, b)) {
                MPoly factor(vars);
                Rat pw = 1;
                for (int jj = 0; 1 + jj <= u_order; ++jj) {
                    Exp e(vars.arity(), 0);
                    e[ui] = 1 + jj;
                    factor.add_term(e, pw);
                    pw *= -c;
                }
                term = (term * factor).truncate_var(ui, u_order);
            }
            acc += term;
        }
        out.at(n) = std::move(acc);
    }
    return out;
}

// b-deformed hypergeometric series: sum_l t^{|l|} J_l(p) J_l(q) / <J_l,J_l>
// prod_box G(c_b(box)) at alpha = 1 + b. The inner-product normalization
// reproduces hook(l)^2 at b = 0 and hook(2l) at b = 1 (tested), which are
// the two printed specializations.
inline TSeries build_tau_b_deformed(const WeightG& G, const Rat& b, int T, TauOptions opt = {}) {
    int D1 = opt.D1 < 0 ? T : opt.D1;
    int D2 = opt.D2 < 0 ? T : opt.D2;
    int vord = opt.v_order < 0 ? T + 1 : opt.v_order;
    int word = opt.w_order < 0 ? T + 1 : opt.w_order;
    Rat alpha = Rat(1) + b;
    VarSet vars = tau_vars(G, D1, D2, opt.with_q);
    TSeries out = TSeries::constant(vars, T, 1);
    for (int n = 1; n <= T; ++n) {
        auto jt = jack_table(n, alpha);
        MPoly acc(vars);
        for (const auto& [l, je] : jt) {
            Rat norm2 = inner_alpha(je, je, alpha);
            MPoly jp = pexp_to_mpoly(je, vars, "p", D1);
            if (jp.is_zero()) continue;
            MPoly term = jp;
            if (opt.with_q) {
                MPoly jq = pexp_to_mpoly(je, vars, "q", D2);
                if (jq.is_zero()) continue;
                term *= jq;
            } else {
                auto it = je.find(Partition(n, 1));  // J_l(q = (1,0,...))
                if (it == je.end()) continue;
                term *= it->second;
            }
            term *= detail::content_product(G, vars, contents_b(l, b), vord, word);
            acc += term * (Rat(1) / norm2);
        }
        out.at(n) = std::move(acc);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Genus grading: F_g = [N^{2-2g}] of the N-graded log tau with G_N(z) = G(z/N).
// The grading realizes the Riemann-Hurwitz count 2-2g = l(lambda) + l(mu)
// - sum l_i - sum k_r - j for the two-alphabet series (p -> Np, q -> Nq),
// and 2-2g = l(lambda) + n - sum l_i - ... for the single-alphabet
// constellation form (p -> Np, t -> Nt); both are pinned against the oracle.
// ---------------------------------------------------------------------------
inline TSeries log_tau_graded(const WeightG& G, int T, TauOptions opt = {}) {
    int D1 = opt.D1 < 0 ? T : opt.D1;
    int D2 = opt.D2 < 0 ? T : opt.D2;
    int vord = opt.v_order < 0 ? T + 1 : opt.v_order;
    int word = opt.w_order < 0 ? T + 1 : opt.w_order;
    VarSet vars = tau_vars(G, D1, D2, opt.with_q);
    size_t nvar = vars.index("N");
    TSeries out = TSeries::constant(vars, T, 1);
    for (int n = 1; n <= T; ++n) {
        MPoly acc(vars);
        for (const auto& l : partitions_of(n)) {
            PExpansion se = schur_in_p(l);
            // s_l(Np): each p_mu picks N^{len(mu)}.
            MPoly sp(vars);
            for (const auto& [mu, c] : se) {
                if (!mu.empty() && mu[0] > D1) continue;
                Exp expo(vars.arity(), 0);
                for (int part : mu) expo[vars.index("p" + std::to_string(part))]++;
                expo[nvar] += part_len(mu);
                sp.add_term(expo, c);
            }
            if (sp.is_zero()) continue;
            MPoly term = sp;
            if (opt.with_q) {
                MPoly sq(vars);
                for (const auto& [mu, c] : se) {
                    if (!mu.empty() && mu[0] > D2) continue;
                    Exp expo(vars.arity(), 0);
                    for (int part : mu) expo[vars.index("q" + std::to_string(part))]++;
                    expo[nvar] += part_len(mu);
                    sq.add_term(expo, c);
                }
                if (sq.is_zero()) continue;
                term *= sq;
            } else {
                // q := (N, 0, ...): s_l picks N^n / hook(l).
                Exp nsh(vars.arity(), 0);
                nsh[nvar] = n;
                term *= MPoly::monomial(vars, nsh, Rat(1) / Rat(hook_product(l)));
            }
            std::vector<Rat> cs;
            for (int c : contents(l)) cs.emplace_back(c);
            term *= detail::content_product(G, vars, cs, vord, word, /*n_graded=*/true);
            acc += term;
        }
        out.at(n) = std::move(acc);
    }
    return out.log();
}

// F_g as a series in t (two_g = 2g, so half-integer genera stay integral
// elsewhere; the orientable G-form only has even values).
inline TSeries genus_free_energy(const WeightG& G, int two_g, int T, TauOptions opt = {}) {
    TSeries whole = log_tau_graded(G, T, opt);
    size_t nvar = whole.vars().index("N");
    return whole.map_coeffs([&](const MPoly& c) { return c.coeff_of(nvar, 2 - two_g); });
}

// Rooting operator: nabla_x = sum_i i x^{-i-1} d/dp_i, x-powers Laurent.
inline TSeries nabla(const TSeries& F, const std::string& x) {
    const VarSet& vars = F.vars();
    size_t xi = vars.index(x);
    TSeries out(vars, F.order());
    for (int i = 1;; ++i) {
        std::string pname = "p" + std::to_string(i);
        if (!vars.has(pname)) break;
        TSeries d = F.pderiv(pname);
        out += d.map_coeffs(
            [&](const MPoly& c) { return c.mul_var_pow(xi, -i - 1) * Rat(i); });
    }
    return out;
}

// Specialization operators theta_M: p_i -> z, theta_T: p_i -> z delta_{i,3}.
inline TSeries theta_M(const TSeries& F, const MPoly& z_value) {
    TSeries out = F;
    for (int i = 1;; ++i) {
        std::string pname = "p" + std::to_string(i);
        if (!F.vars().has(pname)) break;
        out = out.subst(pname, z_value);
    }
    return out;
}
inline TSeries theta_T(const TSeries& F, const MPoly& z_value) {
    TSeries out = F;
    for (int i = 1;; ++i) {
        std::string pname = "p" + std::to_string(i);
        if (!F.vars().has(pname)) break;
        out = out.subst(pname, i == 3 ? z_value : MPoly(F.vars()));
    }
    return out;
}

}  // namespace enumap::tau
