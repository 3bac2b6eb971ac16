#pragma once

#include <array>
#include <vector>

#include "enumap/partitions.hpp"
#include "enumap/tau.hpp"
#include "enumap/tseries.hpp"

namespace enumap::hierarchy {

// ---------------------------------------------------------------------------
// Pfaffians of skew-symmetric matrices over an exact ring (Rat or MPoly).
// ---------------------------------------------------------------------------
template <typename R>
struct SkewMatrix {
    int dim = 0;
    std::vector<std::vector<R>> a;

    explicit SkewMatrix(int k, R zero = R()) : dim(k), a(k, std::vector<R>(k, zero)) {}

    void set(int i, int j, const R& v) {
        a[i][j] = v;
        a[j][i] = -v;
    }
    void validate() const {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j <= i; ++j)
                if (!(a[i][j] == -a[j][i]))
                    throw usage_error("SkewMatrix: input is not skew-symmetric");
    }
};

// Exact Pfaffian by recursive expansion along the first remaining row;
// Pf(A)^2 = det(A). Odd dimension is a usage error (callers pad per the
// theorems they implement).
template <typename R>
R pfaffian(const SkewMatrix<R>& m) {
    m.validate();
    if (m.dim % 2) throw usage_error("pfaffian: odd dimension");
    std::vector<int> rows(m.dim);
    for (int i = 0; i < m.dim; ++i) rows[i] = i;
    auto rec = [&](auto&& self, std::vector<int>& idx) -> R {
        if (idx.empty()) {
            if constexpr (std::is_same_v<R, Rat>) return Rat(1);
            else return R();  // handled below; never reached for MPoly directly
        }
        if (idx.size() == 2) return m.a[idx[0]][idx[1]];
        R total = m.a[idx[0]][idx[1]] - m.a[idx[0]][idx[1]];  // zero of the ring
        int i0 = idx[0];
        for (size_t j = 1; j < idx.size(); ++j) {
            std::vector<int> rest;
            rest.reserve(idx.size() - 2);
            for (size_t k = 1; k < idx.size(); ++k)
                if (k != j) rest.push_back(idx[k]);
            R sub = self(self, rest);
            R term = m.a[i0][idx[j]] * sub;
            if (j % 2 == 0) total -= term;
            else total += term;
        }
        return total;
    };
    if (m.dim == 0) {
        if constexpr (std::is_same_v<R, Rat>) return Rat(1);
        else throw usage_error("pfaffian: empty polynomial matrix needs a ring unit");
    }
    return rec(rec, rows);
}

template <typename R>
R determinant(SkewMatrix<R> m) {
    // Fraction-free is unnecessary at these sizes; Leibniz over the rows.
    std::vector<int> perm(m.dim);
    for (int i = 0; i < m.dim; ++i) perm[i] = i;
    R det = m.a[0][0] - m.a[0][0];
    do {
        int sign = 1;
        for (int i = 0; i < m.dim; ++i)
            for (int j = i + 1; j < m.dim; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        R term = m.a[0][perm[0]];
        for (int i = 1; i < m.dim; ++i) term = term * m.a[i][perm[i]];
        if (sign > 0) det += term;
        else det -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// ---------------------------------------------------------------------------
// KP residual: -F_{3,1} + F_{2,2} + 1/2 F_{1,1}^2 + 1/12 F_{1,1,1,1}.
// ---------------------------------------------------------------------------
inline TSeries kp_residual(const TSeries& F) {
    for (int k : {1, 2, 3, 4})
        if (!F.vars().has("p" + std::to_string(k)))
            throw usage_error("kp_residual: needs p1..p4");
    TSeries f1 = F.pderiv("p1");
    TSeries f11 = f1.pderiv("p1");
    return -F.pderiv("p3").pderiv("p1") + F.pderiv("p2").pderiv("p2") +
           Rat(1, 2) * (f11 * f11) + Rat(1, 12) * f11.pderiv("p1").pderiv("p1");
}

// ---------------------------------------------------------------------------
// Formal-N BKP residuals. The charged series is tau(N + delta) for
// delta in {-2..2}, all sharing one variable set and truncation order;
// shifts are polynomial substitutions N -> N + delta performed by the caller
// (make_charged below does it for polynomial-in-charge families).
// ---------------------------------------------------------------------------
struct ChargedSeries {
    std::string charge;                  // name of the charge variable
    std::array<TSeries, 5> shifts;       // index delta + 2

    const TSeries& at_shift(int delta) const {
        if (delta < -2 || delta > 2) throw usage_error("ChargedSeries: shift out of range");
        return shifts[static_cast<size_t>(delta + 2)];
    }
};

inline ChargedSeries make_charged(const TSeries& tau, const std::string& charge) {
    ChargedSeries cs;
    cs.charge = charge;
    const VarSet& vars = tau.vars();
    MPoly nv = MPoly::variable(vars, charge);
    for (int d = -2; d <= 2; ++d)
        cs.shifts[static_cast<size_t>(d + 2)] = tau.subst(charge, nv + MPoly(vars, Rat(d)));
    return cs;
}

// LHS - RHS of one of the first three BKP equations in logarithmic form,
// multiplied through by tau(N)^2 to stay polynomial. Zero certifies the
// identity at this truncation. S2 is a series because the model-dependent
// normalization carries a power of t (t^4 u(u-1) for zonal maps).
inline TSeries bkp_residual(const ChargedSeries& cs, const TSeries& S2, int order) {
    const TSeries& tau0 = cs.at_shift(0);
    const TSeries& taup = cs.at_shift(+2);
    const TSeries& taum = cs.at_shift(-2);
    TSeries F = tau0.log();
    TSeries Fp = taup.log();
    TSeries Fm = taum.log();
    TSeries tau_sq = tau0 * tau0;
    TSeries cross = taum * taup;

    auto D = [&](const TSeries& s, std::initializer_list<int> idx) {
        TSeries r = s;
        for (int i : idx) r = r.pderiv("p" + std::to_string(i));
        return r;
    };

    TSeries f11 = D(F, {1, 1});
    if (order == 1) {
        TSeries lhs = D(F, {2, 2}) - D(F, {3, 1}) + Rat(1, 2) * (f11 * f11) +
                      Rat(1, 12) * D(F, {1, 1, 1, 1});
        return lhs * tau_sq - cross * S2;
    }
    if (order == 2) {
        TSeries lhs = Rat(-2) * D(F, {4, 1}) + Rat(2) * D(F, {3, 2}) +
                      Rat(2) * (D(F, {2, 1}) * f11) + Rat(1, 3) * D(F, {2, 1, 1, 1});
        TSeries rhs_factor = D(Fp, {1}) - D(Fm, {1});
        return lhs * tau_sq - cross * rhs_factor * S2;
    }
    if (order == 3) {
        TSeries f21 = D(F, {2, 1});
        TSeries f22 = D(F, {2, 2});
        TSeries lhs = Rat(-6) * D(F, {5, 1}) + Rat(4) * D(F, {4, 2}) + Rat(2) * D(F, {3, 3}) +
                      Rat(4) * (D(F, {3, 1}) * f11) + Rat(2, 3) * D(F, {3, 1, 1, 1}) +
                      Rat(4) * (f21 * f21) + Rat(2) * (f22 * f11) + D(F, {2, 2, 1, 1}) +
                      Rat(1, 3) * (f11 * f11 * f11) +
                      Rat(1, 6) * (D(F, {1, 1, 1, 1}) * f11) +
                      Rat(1, 180) * D(F, {1, 1, 1, 1, 1, 1});
        TSeries d1 = D(Fp, {1}) - D(Fm, {1});
        TSeries rhs_factor = D(Fp, {1, 1}) + D(Fm, {1, 1}) +
                             Rat(2) * D(Fp, {2}) - Rat(2) * D(Fm, {2}) + d1 * d1;
        return lhs * tau_sq - cross * rhs_factor * S2;
    }
    throw usage_error("bkp_residual: order must be 1, 2, or 3");
}

// Fixed-charge combination: eliminates the shifts from the first three BKP
// equations; vanishes for any formal-N BKP tau function.
//   2 F_{1^3} KP1^3 = (KP3_1 - 2 KP2_2) KP1^2
//                     - (KP3 - 3 KP1_{1^2}) KP1 KP1_1
//                     + 2 (KP1_2 - KP2_1) KP1 KP2 + 2 KP2^2 KP1_1
//                     - 2 KP1_1^3 - KP1^2 KP1_{1^3}.
inline TSeries fixed_charge_residual(const TSeries& F) {
    for (int k : {1, 2, 3, 4, 5})
        if (!F.vars().has("p" + std::to_string(k)))
            throw usage_error("fixed_charge_residual: needs p1..p5");
    auto D = [&](const TSeries& s, std::initializer_list<int> idx) {
        TSeries r = s;
        for (int i : idx) r = r.pderiv("p" + std::to_string(i));
        return r;
    };
    TSeries f11 = D(F, {1, 1});
    TSeries f21 = D(F, {2, 1});
    TSeries f22 = D(F, {2, 2});
    TSeries kp1 = -D(F, {3, 1}) + f22 + Rat(1, 2) * (f11 * f11) + Rat(1, 12) * D(F, {1, 1, 1, 1});
    TSeries kp2 = Rat(-2) * D(F, {4, 1}) + Rat(2) * D(F, {3, 2}) + Rat(2) * (f21 * f11) +
                  Rat(1, 3) * D(F, {2, 1, 1, 1});
    TSeries kp3 = Rat(-6) * D(F, {5, 1}) + Rat(4) * D(F, {4, 2}) + Rat(2) * D(F, {3, 3}) +
                  Rat(4) * (D(F, {3, 1}) * f11) + Rat(2, 3) * D(F, {3, 1, 1, 1}) +
                  Rat(4) * (f21 * f21) + Rat(2) * (f22 * f11) + D(F, {2, 2, 1, 1}) +
                  Rat(1, 3) * (f11 * f11 * f11) + Rat(1, 6) * (D(F, {1, 1, 1, 1}) * f11) +
                  Rat(1, 180) * D(F, {1, 1, 1, 1, 1, 1});

    TSeries kp1_1 = kp1.pderiv("p1");
    TSeries lhs = Rat(2) * (D(F, {1, 1, 1}) * (kp1 * kp1 * kp1));
    TSeries rhs = (kp3.pderiv("p1") - Rat(2) * kp2.pderiv("p2")) * (kp1 * kp1) -
                  (kp3 - Rat(3) * kp1.pderiv("p1").pderiv("p1")) * (kp1 * kp1_1) +
                  Rat(2) * ((kp1.pderiv("p2") - kp2.pderiv("p1")) * (kp1 * kp2)) +
                  Rat(2) * ((kp2 * kp2) * kp1_1) - Rat(2) * (kp1_1 * kp1_1 * kp1_1) -
                  (kp1 * kp1) * kp1.pderiv("p1").pderiv("p1").pderiv("p1");
    return lhs - rhs;
}

// ---------------------------------------------------------------------------
// Virasoro constraints. p*_k = k d/dp_k (p*_k = 0 for k <= 0). The maps/bip
// operators annihilate the orientable families; the tilde versions the zonal
// ones. Charge/vertex markers are the symbols "u" (and "v" for bipartite).
// ---------------------------------------------------------------------------
enum class VirasoroFamily { maps, bip, zonal_maps, zonal_bip };

namespace detail {

inline TSeries pstar(const TSeries& s, int k) {
    if (k <= 0) return TSeries(s.vars(), s.order());  // zero
    std::string name = "p" + std::to_string(k);
    if (!s.vars().has(name)) return TSeries(s.vars(), s.order());
    return Rat(k) * s.pderiv(name);
}

inline TSeries mul_p(const TSeries& s, int k) {
    return s * MPoly::variable(s.vars(), "p" + std::to_string(k));
}

}  // namespace detail

// L_i tau (or tilde L_i tau), multiplied through by the positive power of t
// appearing in the leading term (t^2 for maps-type, t for bip-type) so the
// result stays a power series; zero certifies the constraint.
inline TSeries virasoro_residual(VirasoroFamily fam, int i, const TSeries& tau) {
    const VarSet& vars = tau.vars();
    bool bip = (fam == VirasoroFamily::bip || fam == VirasoroFamily::zonal_bip);
    bool tilde = (fam == VirasoroFamily::zonal_maps || fam == VirasoroFamily::zonal_bip);
    if (bip) {
        if (i < 0) throw usage_error("virasoro_residual: bip needs i >= 0");
    } else if (i < -1) {
        throw usage_error("virasoro_residual: maps needs i >= -1");
    }
    MPoly u = MPoly::variable(vars, "u");
    int tpow = bip ? 1 : 2;
    int pmax = 0;
    while (vars.has("p" + std::to_string(pmax + 1))) ++pmax;

    // leading term p*_{i+tpow} / t^{tpow}
    TSeries lead = detail::pstar(tau, i + tpow);

    TSeries rest(vars, tau.order());
    Rat quad = tilde ? Rat(2) : Rat(1);
    for (int a = 1; a < i; ++a) {
        int b = i - a;
        if (b < 1) continue;
        rest += quad * detail::pstar(detail::pstar(tau, b), a);
    }
    for (int a = 1; a <= pmax; ++a)
        rest += detail::mul_p(detail::pstar(tau, a + i), a);
    if (i >= 1) {
        // The tilde operators are implemented as printed; the orientable
        // ones carry the coefficient matching the (u + c) content convention
        // pinned by the oracle (the bare integer belongs to the transposed
        // convention), validated symbolically to deep order in the tests.
        MPoly coeff;
        if (bip) {
            coeff = u + MPoly::variable(vars, "v");
            if (tilde) coeff += MPoly(vars, Rat(i));
        } else {
            coeff = Rat(2) * u;
            if (tilde) coeff += MPoly(vars, Rat(i + 1));
        }
        rest += detail::pstar(tau, i) * coeff;
    }
    if (!bip && i == -1) {
        MPoly c = u;
        if (tilde) c *= Rat(1, 2);
        rest += detail::mul_p(tau, 1) * c;
    }
    if (i == 0) {
        MPoly c;
        if (bip) {
            c = u * MPoly::variable(vars, "v");
            if (tilde) c *= Rat(1, 2);
        } else {
            c = tilde ? (u * (u + MPoly(vars, Rat(1)))) * Rat(1, 2) : u * u;
        }
        rest += tau * c;
    }
    // L_i tau = lead / t^{tpow} - rest; multiplied through by t^{tpow}:
    return lead - rest.mul_t(tpow);
}

// ---------------------------------------------------------------------------
// Monotone evolution equation residual (times t): t dtau/dt - t H_b tau with
//   H_b = u p_1/(1+b)
//       - (u/t) [ (1+b) sum p_{m+n} p*_m p*_n + sum p_n p_m p*_{n+m}
//                 + b sum (n-1) p_n p*_n ].
// ---------------------------------------------------------------------------
inline TSeries monotone_evolution_residual(const TSeries& tauser, const Rat& b) {
    const VarSet& vars = tauser.vars();
    int T = tauser.order();
    MPoly u = MPoly::variable(vars, "u");
    int pmax = 0;
    while (vars.has("p" + std::to_string(pmax + 1))) ++pmax;

    // A tau with A the bracketed operator (no t-dependence).
    TSeries op(vars, T);
    for (int mm = 1; mm <= pmax; ++mm)
        for (int nn = 1; mm + nn <= pmax; ++nn)
            op += (Rat(1) + b) *
                  detail::mul_p(detail::pstar(detail::pstar(tauser, nn), mm), mm + nn);
    for (int nn = 1; nn <= pmax; ++nn)
        for (int mm = 1; nn + mm <= pmax; ++mm)
            op += detail::mul_p(detail::mul_p(detail::pstar(tauser, nn + mm), mm), nn);
    for (int nn = 2; nn <= pmax; ++nn)
        op += b * Rat(nn - 1) * detail::mul_p(detail::pstar(tauser, nn), nn);

    // t * (dtau/dt - H_b tau) = t dtau/dt - (u/(1+b)) t p_1 tau + u A tau.
    TSeries tddt(vars, T);
    for (int k = 1; k <= T; ++k) tddt.at(k) = tauser.at(k) * Rat(k);
    TSeries p1tau = detail::mul_p(tauser, 1).mul_t(1) * (Rat(1) / (Rat(1) + b));
    return tddt - p1tau * u + op * u;
}

// ---------------------------------------------------------------------------
// Monotone Pfaffian coefficients (entries of the printed a-matrix).
// ---------------------------------------------------------------------------
inline Rat monotone_a_entry(long i, long j) {
    if (i >= 1 && j >= 1)
        return Rat(i - j) / (Rat(4) * Rat(i + j) * Rat(factorial(i) * factorial(i)) *
                             Rat(factorial(j) * factorial(j)));
    if (i > 0 && (j == 0 || j == -1)) return Rat(1) / (Rat(2) * Rat(factorial(i) * factorial(i)));
    if (i == 0 && j == -1) return Rat(1);
    if (j > 0 && (i == 0 || i == -1)) return Rat(-1) / (Rat(2) * Rat(factorial(j) * factorial(j)));
    if (i == -1 && j == 0) return Rat(-1);
    return Rat(0);  // i, j in {-1, 0} with i = j (and the remaining diagonal)
}

// Check 1/(hook^2 o_lambda(1^{2n})) = prod_{k<n} (2k)! * Pf(a_{l_i+n-i, l_j+n-j})
// with matrix size n (n even) or n+1 (n odd, padding l_{n+1} = 0).
inline bool verify_monotone_pfaffian(const Partition& lambda, int n) {
    if (part_len(lambda) > n) throw usage_error("verify_monotone_pfaffian: len(lambda) > n");
    int size = (n % 2 == 0) ? n : n + 1;
    SkewMatrix<Rat> A(size);
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j)
            A.a[i - 1][j - 1] = monotone_a_entry(part_at(lambda, i) + n - i,
                                                 part_at(lambda, j) + n - j);
    Rat lhs = Rat(1) / (Rat(hook_product(lambda)) * Rat(hook_product(lambda)) *
                        orthogonal_dim_weyl(lambda, n));
    Rat fac = 1;
    for (int k = 1; k < n; ++k) fac *= Rat(factorial(2 * k));
    return lhs == fac * pfaffian(A);
}

}  // namespace enumap::hierarchy
