#include <catch2/catch_amalgamated.hpp>

#include "enumap/oracle.hpp"
#include "enumap/tau.hpp"

using namespace enumap;
using namespace enumap::tau;

namespace {

// Extend a series with an extra marker variable "z" and theta_M it.
TSeries specialize_all_p_to_z(const TSeries& logtau, VarSet* ext_out) {
    VarSet vars = logtau.vars();
    std::vector<std::string> big = vars.names();
    big.push_back("z");
    VarSet ext(big);
    TSeries lt(ext, logtau.order());
    for (int k = 0; k <= logtau.order(); ++k)
        for (const auto& [e, c] : logtau.at(k).terms()) {
            Exp e2 = e;
            e2.push_back(0);
            lt.at(k).add_term(e2, c);
        }
    if (ext_out) *ext_out = ext;
    return theta_M(lt, MPoly::variable(ext, "z"));
}

}  // namespace

TEST_CASE("build_tau_G basics") {
    SECTION("[t^0] = 1 for every builder") {
        WeightG g0;  // G == 1
        REQUIRE(build_tau_G(g0, 3).at(0) == MPoly(tau_vars(g0, 3, 3), 1));
        WeightG g1 = WeightG::symbolic(2, 1);
        REQUIRE(build_tau_G(g1, 2).at(0).constant_term() == Rat(1));
        for (auto f : {Family::maps, Family::bip, Family::zonal_maps, Family::zonal_bip,
                       Family::zonal_monotone})
            REQUIRE(build_tau_family(f, 2).at(0).constant_term() == Rat(1));
    }

    SECTION("G == 1: log tau = sum p_k q_k t^k / k (Cauchy identity)") {
        WeightG g;  // m = s = 0, w infinite
        int T = 6;
        TSeries tau = build_tau_G(g, T);
        TSeries logtau = tau.log();
        const VarSet& vars = tau.vars();
        for (int k = 1; k <= T; ++k) {
            MPoly expect =
                Rat(1, k) * (MPoly::variable(vars, "p" + std::to_string(k)) *
                             MPoly::variable(vars, "q" + std::to_string(k)));
            REQUIRE(logtau.at(k) == expect);
        }
    }

    SECTION("1-constellations: tau = exp(u sum p_i t^i / i)") {
        WeightG g = WeightG::symbolic(1, 0);
        TauOptions opt;
        opt.with_q = false;
        int T = 6;
        TSeries tau = build_tau_G(g, T, opt);
        const VarSet& vars = tau.vars();
        TSeries expo(vars, T);
        for (int i = 1; i <= T; ++i)
            expo.at(i) = Rat(1, i) * (MPoly::variable(vars, "u0") *
                                      MPoly::variable(vars, "p" + std::to_string(i)));
        REQUIRE(tau == expo.exp());
    }

    SECTION("t^3 coefficients match exhaustive S_3 factorization counts") {
        WeightG g = WeightG::symbolic(1, 0);
        int n = 3;
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                for (int l0 = 0; l0 <= n - 1; ++l0) {
                    Int expect = 0;
                    for (const auto& nu : partitions_of(n))
                        if (part_len(nu) == n - l0)
                            expect += oracle::count_factorizations({lambda, mu, nu}, false);
                    REQUIRE(weighted_hurwitz(g, lambda, mu, {l0}, {}, 0) == Rat(expect));
                }
    }
}

TEST_CASE("weighted_hurwitz") {
    SECTION("n = 1 trivial factorization") {
        WeightG g = WeightG::symbolic(2, 0);
        REQUIRE(weighted_hurwitz(g, {1}, {1}, {0, 0}, {}, 0) == Rat(1));
    }
    SECTION("m = 2, s = 0, n = 2: all (lambda, mu, l) against the oracle") {
        WeightG g = WeightG::symbolic(2, 0);
        int n = 2;
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                for (int l0 = 0; l0 <= 1; ++l0)
                    for (int l1 = 0; l1 <= 1; ++l1) {
                        Int expect = 0;
                        for (const auto& nu0 : partitions_of(n)) {
                            if (part_len(nu0) != n - l0) continue;
                            for (const auto& nu1 : partitions_of(n)) {
                                if (part_len(nu1) != n - l1) continue;
                                expect += oracle::count_factorizations({lambda, mu, nu0, nu1},
                                                                       false);
                            }
                        }
                        REQUIRE(weighted_hurwitz(g, lambda, mu, {l0, l1}, {}, 0) == Rat(expect));
                    }
    }
    SECTION("monotone sector n = 3 against the monotone oracle") {
        WeightG g = WeightG::symbolic(0, 1);
        int n = 3;
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                for (int k = 0; k <= 3; ++k) {
                    Rat expect = Rat(oracle::count_monotone(lambda, mu, {k}, false));
                    if (k % 2) expect = -expect;  // (-1)^{sum k_r}
                    REQUIRE(weighted_hurwitz(g, lambda, mu, {}, {k}, 0) == expect);
                }
    }
    SECTION("simple sector: j free transpositions against the oracle") {
        WeightG g = WeightG::symbolic(0, 0, /*w_infinite=*/false);
        int n = 2;
        for (int j = 0; j <= 3; ++j) {
            std::vector<Partition> classes{{2}, {2}};
            for (int i = 0; i < j; ++i) classes.push_back({2});
            Int expect = oracle::count_factorizations(classes, false);
            REQUIRE(weighted_hurwitz(g, {2}, {2}, {}, {}, j) == Rat(expect));
        }
    }
}

TEST_CASE("maps family: rooted-count normalization pin, E <= 3") {
    // Pin (validated before anything else relies on the family): rooted maps
    // on E edges are n * [t^n] theta_M log tau at n = 2E (t counts darts),
    // u on vertices, z on faces.
    int T = 6;
    TSeries tau = build_tau_family(Family::maps, T);
    VarSet ext;
    TSeries phi = specialize_all_p_to_z(tau.log(), &ext);
    for (int E = 1; E <= 3; ++E) {
        GenusTable o = oracle::count_rooted_maps(E, oracle::MapConstraint::none);
        MPoly total(o.vars);
        for (const auto& [k, v] : o.entries) total += v;
        MPoly got(o.vars);
        for (const auto& [e, c] : phi.at(2 * E).terms()) {
            Exp e2(2, 0);
            e2[0] = e[ext.index("u")];
            e2[1] = e[ext.index("z")];
            got.add_term(e2, c * (2 * E));
        }
        INFO("E=" << E);
        REQUIRE(got == total);
    }
}

TEST_CASE("zonal maps family against the non-oriented oracle") {
    int T = 4;
    TSeries tau = build_tau_family(Family::zonal_maps, T);
    VarSet ext;
    TSeries phi = specialize_all_p_to_z(tau.log(), &ext);
    for (int E = 1; E <= 2; ++E) {
        GenusTable o = oracle::count_rooted_nonoriented_maps(E);
        MPoly total(o.vars);
        for (const auto& [k, v] : o.entries) total += v;
        MPoly got(o.vars);
        for (const auto& [e, c] : phi.at(2 * E).terms()) {
            Exp e2(2, 0);
            e2[0] = e[ext.index("u")];
            e2[1] = e[ext.index("z")];
            got.add_term(e2, c * Rat(4 * E));
        }
        INFO("E=" << E << " got=" << got.str() << " want=" << total.str());
        REQUIRE(got == total);
    }
}

TEST_CASE("zonal monotone Schur expansion (two routes agree)") {
    // sum_l t^{|l|} s_l(p/2) / (hook(l)^2 o_l(1^{1/u})) equals the zonal form
    // coefficientwise for n <= 6, within the shared u-window.
    int T = 6, U = 8;
    TSeries zon = build_tau_family(Family::zonal_monotone, T, U);
    const VarSet& vars = zon.vars();
    size_t ui = vars.index("u");

    TSeries schur_form = TSeries::constant(vars, T, 1);
    for (int n = 1; n <= T; ++n) {
        MPoly acc(vars);
        for (const auto& l : partitions_of(n)) {
            MPoly sp(vars);
            for (const auto& [mu, c] : schur_in_p(l)) {
                Exp expo(vars.arity(), 0);
                for (int part : mu) expo[vars.index("p" + std::to_string(part))]++;
                sp.add_term(expo, c / rat_pow(Rat(2), part_len(mu)));
            }
            UPoly o = orthogonal_dim_poly(l);
            REQUIRE(up_deg(o) == n);
            std::vector<Rat> rev(o.rbegin(), o.rend());
            std::vector<Rat> inv(U + 1, Rat(0));
            inv[0] = Rat(1) / rev[0];
            for (int k = 1; k <= U; ++k) {
                Rat s = 0;
                for (int i = 1; i <= k && i < static_cast<int>(rev.size()); ++i)
                    s += rev[i] * inv[k - i];
                inv[k] = -s / rev[0];
            }
            MPoly oinv(vars);
            for (int k = 0; k + n <= U; ++k) {
                Exp e(vars.arity(), 0);
                e[ui] = n + k;
                oinv.add_term(e, inv[k]);
            }
            acc += sp * oinv * (Rat(1) / Rat(hook_product(l)) / Rat(hook_product(l)));
        }
        schur_form.at(n) = acc;
    }

    for (int n = 0; n <= T; ++n) {
        MPoly diff = zon.at(n) - schur_form.at(n);
        INFO("n=" << n);
        REQUIRE(diff.truncate_var(ui, U - n).is_zero());
    }
}

TEST_CASE("b-deformed series interpolates Schur and zonal") {
    WeightG g = WeightG::symbolic(1, 0);
    int T = 5;
    SECTION("b = 0 equals the orientable hypergeometric series") {
        TSeries bd = build_tau_b_deformed(g, 0, T);
        TSeries plain = build_tau_G(g, T);
        REQUIRE(bd == plain);
    }
    SECTION("b = 1 equals the zonal series with the same G") {
        TSeries bd = build_tau_b_deformed(g, 1, T);
        const VarSet& vars = bd.vars();
        TSeries zon = TSeries::constant(vars, T, 1);
        for (int n = 1; n <= T; ++n) {
            MPoly acc(vars);
            for (const auto& [l, ze] : zonal_table(n)) {
                MPoly term = pexp_to_mpoly(ze, vars, "p", T) * pexp_to_mpoly(ze, vars, "q", T);
                term *= Rat(1) / Rat(hook_product(doubled(l)));
                for (const Rat& c : contents_b(l, 1))
                    term *= MPoly::variable(vars, "u0") + MPoly(vars, c);
                acc += term;
            }
            zon.at(n) = acc;
        }
        REQUIRE(bd == zon);
    }
}

TEST_CASE("genus free energy") {
    SECTION("reconstruction identity at T = 4") {
        WeightG g = WeightG::symbolic(2, 0);
        TauOptions opt;
        opt.with_q = false;
        int T = 4;
        TSeries whole = log_tau_graded(g, T, opt);
        size_t nvar = whole.vars().index("N");
        TSeries rebuilt(whole.vars(), T);
        for (int two_g = -2 * T; two_g <= 2 + 2 * T; ++two_g) {
            TSeries fg =
                whole.map_coeffs([&](const MPoly& c) { return c.coeff_of(nvar, 2 - two_g); });
            rebuilt +=
                fg.map_coeffs([&](const MPoly& c) { return c.mul_var_pow(nvar, 2 - two_g); });
        }
        REQUIRE(rebuilt == whole);
    }

    SECTION("F_0 matches oracle genus-0 bipartite counts, n <= 4") {
        WeightG g = WeightG::symbolic(2, 0);
        TauOptions opt;
        opt.with_q = false;
        int T = 4;
        TSeries f0 = genus_free_energy(g, 0, T, opt);
        const VarSet& vars = f0.vars();
        for (int n = 1; n <= T; ++n) {
            GenusTable o = oracle::count_rooted_bipartite_maps(n);
            MPoly expect = o.value(n, 0);
            MPoly got(o.vars);
            for (const auto& [e, c] : f0.at(n).terms()) {
                int zpow = 0;
                for (int k = 1; k <= T; ++k) zpow += e[vars.index("p" + std::to_string(k))];
                Exp e2(3, 0);
                e2[0] = e[vars.index("u0")];
                e2[1] = e[vars.index("u1")];
                e2[2] = zpow;
                got.add_term(e2, c * n);
            }
            INFO("n=" << n);
            REQUIRE(got == expect);
        }
    }

    SECTION("F_g vanishes above the genus bound at small n") {
        WeightG g = WeightG::symbolic(1, 0);
        TauOptions opt;
        opt.with_q = false;
        for (int two_g = 6; two_g <= 10; two_g += 2)
            REQUIRE(genus_free_energy(g, two_g, 3, opt).is_zero());
    }
}

TEST_CASE("nabla rooting operator") {
    std::vector<std::string> names{"x", "p1", "p2"};
    VarSet vars(names);
    TSeries F(vars, 2);
    F.at(0) = MPoly::variable(vars, "p1");

    SECTION("nabla_x p_1 = x^{-2}") {
        TSeries w = nabla(F, "x");
        REQUIRE(w.at(0) == MPoly::variable(vars, "x", -2));
    }
    SECTION("nabla_{x1} nabla_{x2} symmetric") {
        std::vector<std::string> n2{"x1", "x2", "p1", "p2", "p3"};
        VarSet v2(n2);
        TSeries G(v2, 2);
        G.at(1) = MPoly::variable(v2, "p1") * MPoly::variable(v2, "p2") +
                  MPoly::variable(v2, "p3") * MPoly::variable(v2, "p1");
        REQUIRE(nabla(nabla(G, "x1"), "x2") == nabla(nabla(G, "x2"), "x1"));
    }
}
