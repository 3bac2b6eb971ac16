#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "enumap/errors.hpp"
#include "enumap/rat.hpp"
#include "enumap/upoly.hpp"

namespace enumap {

// Weakly decreasing list of positive integers.
using Partition = std::vector<int>;

inline int part_size(const Partition& l) { return std::accumulate(l.begin(), l.end(), 0); }
inline int part_len(const Partition& l) { return static_cast<int>(l.size()); }
inline int part_at(const Partition& l, int i) {  // 1-based, 0 beyond the length
    return (i >= 1 && i <= part_len(l)) ? l[i - 1] : 0;
}

inline bool is_partition(const Partition& l) {
    for (size_t i = 0; i < l.size(); ++i) {
        if (l[i] <= 0) return false;
        if (i && l[i] > l[i - 1]) return false;
    }
    return true;
}

// All partitions of n, each exactly once, in reverse lexicographic order:
// (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw usage_error("partitions_of: negative n");
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline Partition conjugate(const Partition& l) {
    Partition c;
    if (l.empty()) return c;
    c.resize(l[0], 0);
    for (int part : l)
        for (int j = 0; j < part; ++j) c[j]++;
    return c;
}

inline Partition doubled(const Partition& l) {  // 2*lambda = (2 l_1, 2 l_2, ...)
    Partition d = l;
    for (int& x : d) x *= 2;
    return d;
}

// Product of hook lengths over all boxes; 1 for the empty partition.
inline Int hook_product(const Partition& l) {
    Partition c = conjugate(l);
    Int h = 1;
    for (int i = 1; i <= part_len(l); ++i)
        for (int j = 1; j <= l[i - 1]; ++j)
            h *= (l[i - 1] - j) + (c[j - 1] - i) + 1;
    return h;
}

// z_lambda = prod lambda_i * prod_r m_r(lambda)!
inline Int z_lambda(const Partition& l) {
    Int z = 1;
    std::map<int, int> mult;
    for (int part : l) {
        z *= part;
        mult[part]++;
    }
    for (auto& [r, m] : mult) z *= factorial(m);
    return z;
}

// b-deformed contents c_b = (x - y) + b(x - 1) for every cell, with the frozen
// convention x = column index, y = row index, both starting at 1 (so the
// corner cell has content 0). At b = 1 this is 2x - y - 1.
inline std::vector<Rat> contents_b(const Partition& l, const Rat& b) {
    std::vector<Rat> cs;
    for (int y = 1; y <= part_len(l); ++y)
        for (int x = 1; x <= l[y - 1]; ++x) cs.push_back(Rat(x - y) + b * Rat(x - 1));
    return cs;
}
inline std::vector<int> contents(const Partition& l) {
    std::vector<int> cs;
    for (int y = 1; y <= part_len(l); ++y)
        for (int x = 1; x <= l[y - 1]; ++x) cs.push_back(x - y);
    return cs;
}

namespace detail {

// Beta-set of lambda padded to `rows` entries: {lambda_i + rows - i}.
inline std::vector<int> beta_set(const Partition& l, int rows) {
    std::vector<int> b(rows);
    for (int i = 1; i <= rows; ++i) b[i - 1] = part_at(l, i) + rows - i;
    return b;
}

inline Partition from_beta(std::vector<int> b) {
    std::sort(b.begin(), b.end(), std::greater<int>());
    Partition l;
    int rows = static_cast<int>(b.size());
    for (int i = 1; i <= rows; ++i) {
        int part = b[i - 1] - (rows - i);
        if (part > 0) l.push_back(part);
    }
    return l;
}

}  // namespace detail

// Irreducible character chi_lambda(mu) by the Murnaghan-Nakayama border-strip
// recursion on beta-sets: removing an r-strip replaces some beta number b by
// b - r (not already present), with sign (-1)^{#beta numbers in (b-r, b)}.
inline Int character(const Partition& lambda, const Partition& mu) {
    if (part_size(lambda) != part_size(mu))
        throw usage_error("character: |lambda| != |mu|");
    std::map<std::pair<Partition, Partition>, Int> memo;
    auto rec = [&](auto&& self, const Partition& l, const Partition& m, size_t mi) -> Int {
        if (mi == m.size()) return 1;  // both empty by size bookkeeping
        auto key = std::make_pair(l, Partition(m.begin() + mi, m.end()));
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int r = m[mi];
        int rows = part_len(l);
        auto beta = detail::beta_set(l, rows);
        Int total = 0;
        for (int bi = 0; bi < rows; ++bi) {
            int b = beta[bi];
            if (b < r) continue;
            int target = b - r;
            bool present = false;
            int between = 0;
            for (int bj = 0; bj < rows; ++bj) {
                if (bj == bi) continue;
                if (beta[bj] == target) present = true;
                if (beta[bj] > target && beta[bj] < b) ++between;
            }
            if (present) continue;
            auto nb = beta;
            nb[bi] = target;
            Int sub = self(self, detail::from_beta(std::move(nb)), m, mi + 1);
            total += (between % 2 ? -sub : sub);
        }
        memo[key] = total;
        return total;
    };
    return rec(rec, lambda, mu, 0);
}

// An element of the power-sum span at fixed degree: map mu -> coefficient.
using PExpansion = std::map<Partition, Rat>;

// s_lambda = sum_mu chi_lambda(mu)/z_mu * p_mu.
inline PExpansion schur_in_p(const Partition& lambda) {
    PExpansion e;
    for (const auto& mu : partitions_of(part_size(lambda))) {
        Int chi = character(lambda, mu);
        if (chi != 0) e[mu] = Rat(chi) / Rat(z_lambda(mu));
    }
    return e;
}

// Complete homogeneous h_k = s_(k) = sum_{mu |- k} p_mu / z_mu.
inline PExpansion homogeneous_in_p(int k) {
    PExpansion e;
    for (const auto& mu : partitions_of(k)) e[mu] = Rat(1) / Rat(z_lambda(mu));
    return e;
}

inline PExpansion pexp_add(const PExpansion& a, const PExpansion& b) {
    PExpansion r = a;
    for (const auto& [mu, c] : b) {
        r[mu] += c;
        if (r[mu] == 0) r.erase(mu);
    }
    return r;
}
inline PExpansion pexp_scale(PExpansion a, const Rat& c) {
    if (c == 0) return {};
    for (auto& [mu, v] : a) v *= c;
    return a;
}

// p_mu * p_nu = p_{mu union nu} termwise.
inline PExpansion pexp_mul(const PExpansion& a, const PExpansion& b) {
    PExpansion r;
    for (const auto& [mu, ca] : a)
        for (const auto& [nu, cb] : b) {
            Partition m = mu;
            m.insert(m.end(), nu.begin(), nu.end());
            std::sort(m.begin(), m.end(), std::greater<int>());
            r[m] += ca * cb;
            if (r[m] == 0) r.erase(m);
        }
    return r;
}

// Evaluate at p_k := X for all k (principal specialization variable),
// giving a polynomial in X: p_mu -> X^{len(mu)}.
inline UPoly principal_spec_poly(const PExpansion& e) {
    UPoly out;
    for (const auto& [mu, c] : e) {
        size_t d = mu.size();
        if (out.size() <= d) out.resize(d + 1, Rat(0));
        out[d] += c;
    }
    return up_trim(std::move(out));
}

// Evaluate at p_2 := 1 and p_k := 0 otherwise; zero when |lambda| is odd.
inline Rat theta_spec(const PExpansion& e, int degree) {
    if (degree % 2) return 0;
    Partition all_twos(degree / 2, 2);
    auto it = e.find(all_twos);
    return it == e.end() ? Rat(0) : it->second;
}
inline Rat theta(const Partition& lambda) {
    int n = part_size(lambda);
    if (n % 2) return 0;
    return theta_spec(schur_in_p(lambda), n);
}

// ---------------------------------------------------------------------------
// Jack polynomials (J-normalization) by Gram-Schmidt in dominance order.
// ---------------------------------------------------------------------------

// <p_lambda, p_mu>_alpha = delta * z_lambda * alpha^{len(lambda)}.
inline Rat inner_alpha(const PExpansion& a, const PExpansion& b, const Rat& alpha) {
    Rat s = 0;
    for (const auto& [mu, ca] : a) {
        auto it = b.find(mu);
        if (it == b.end()) continue;
        s += ca * it->second * Rat(z_lambda(mu)) * rat_pow(alpha, part_len(mu));
    }
    return s;
}

namespace detail {

// p_k * m_lambda expansion: bump one part value v (or adjoin v=0) to v+k,
// with multiplicity of the new part value in the result as coefficient.
inline std::map<Partition, Int> pk_times_m(int k, const Partition& l) {
    std::map<Partition, Int> out;
    std::vector<int> values{0};
    for (int part : l)
        if (values.back() != part) values.push_back(part);
    for (int v : values) {
        Partition mu = l;
        if (v == 0) {
            mu.push_back(k);
        } else {
            auto it = std::find(mu.begin(), mu.end(), v);
            *it += k;
        }
        std::sort(mu.begin(), mu.end(), std::greater<int>());
        Int mult = std::count(mu.begin(), mu.end(), v + k);
        out[mu] += mult;
    }
    return out;
}

// Monomial symmetric functions of degree n expanded in the power-sum basis.
inline std::map<Partition, PExpansion> monomials_in_p(int n) {
    auto parts = partitions_of(n);
    size_t N = parts.size();
    std::map<Partition, size_t> idx;
    for (size_t i = 0; i < N; ++i) idx[parts[i]] = i;

    // Row mu of P2M holds p_mu in the m-basis.
    std::vector<std::vector<Rat>> p2m(N, std::vector<Rat>(N, Rat(0)));
    for (size_t i = 0; i < N; ++i) {
        std::map<Partition, Rat> acc{{Partition{}, Rat(1)}};
        for (int k : parts[i]) {
            std::map<Partition, Rat> next;
            for (const auto& [l, c] : acc)
                for (const auto& [mu, mult] : pk_times_m(k, l)) next[mu] += c * Rat(mult);
            acc = std::move(next);
        }
        for (const auto& [mu, c] : acc) p2m[i][idx.at(mu)] = c;
    }

    // Invert by Gaussian elimination to express each m_lambda in p's.
    std::vector<std::vector<Rat>> a = p2m, inv(N, std::vector<Rat>(N, Rat(0)));
    for (size_t i = 0; i < N; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < N; ++col) {
        size_t piv = col;
        while (piv < N && a[piv][col] == 0) ++piv;
        if (piv == N) throw domain_error("monomials_in_p: singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (size_t j = 0; j < N; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < N; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (size_t j = 0; j < N; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    // Column lambda of p2m^{-1} transposed: m_lambda = sum_mu inv^T ... we need
    // m_lambda in p: solve m = P2M^{-1} applied to the p-basis expansion rows.
    // Since p_mu = sum_lambda p2m[mu][lambda] m_lambda, inverting gives
    // m_lambda = sum_mu (p2m^{-1})[lambda][mu] p_mu.
    std::map<Partition, PExpansion> out;
    for (size_t i = 0; i < N; ++i) {
        PExpansion e;
        for (size_t j = 0; j < N; ++j)
            if (inv[i][j] != 0) e[parts[j]] = inv[i][j];
        out[parts[i]] = std::move(e);
    }
    return out;
}

}  // namespace detail

// All J-normalized Jack polynomials of degree n at parameter alpha, computed
// by Gram-Schmidt against <,>_alpha along a linear extension of dominance
// order, normalized so that J_lambda(1^X) = prod_cells (X + c_{alpha-1}(cell)).
// That specialization identity *defines* the normalization used here.
inline std::map<Partition, PExpansion> jack_table(int n, const Rat& alpha) {
    if (alpha <= 0) throw usage_error("jack_table: alpha must be positive");
    auto parts = partitions_of(n);
    // Ascending lexicographic order refines dominance upward from (1^n).
    std::sort(parts.begin(), parts.end());
    auto mono = detail::monomials_in_p(n);

    std::map<Partition, PExpansion> table;
    std::vector<std::pair<PExpansion, Rat>> built;  // (P_mu, <P_mu,P_mu>)
    for (const auto& lambda : parts) {
        PExpansion p = mono.at(lambda);
        for (const auto& [pm, norm2] : built) {
            Rat c = inner_alpha(p, pm, alpha) / norm2;
            if (c != 0) p = pexp_add(p, pexp_scale(pm, -c));
        }
        Rat norm2 = inner_alpha(p, p, alpha);
        built.emplace_back(p, norm2);

        // Pin the J-normalization by the principal specialization.
        UPoly spec = principal_spec_poly(p);
        UPoly target{Rat(1)};
        for (const Rat& c : contents_b(lambda, alpha - 1))
            target = up_mul(target, UPoly{c, Rat(1)});
        UPoly ratio = up_divexact(target, spec);
        if (up_deg(ratio) != 0)
            throw domain_error("jack_table: specialization did not pin a constant");
        table[lambda] = pexp_scale(p, ratio[0]);
    }
    return table;
}

inline PExpansion jack_in_p(const Partition& lambda, const Rat& alpha) {
    return jack_table(part_size(lambda), alpha).at(lambda);
}

// Zonal polynomials are Jack at alpha = 2.
inline PExpansion zonal_in_p(const Partition& lambda) { return jack_in_p(lambda, 2); }
inline std::map<Partition, PExpansion> zonal_table(int n) { return jack_table(n, 2); }

// ---------------------------------------------------------------------------
// Dimensions of irreducible representations of orthogonal groups.
// ---------------------------------------------------------------------------

// o_lambda(1^n) as an exact polynomial in n (El Samra-King product formula):
//   (1/hook) * prod_{cells (x,y), x<=y} (n + l_x + l_y - x - y)
//            * prod_{cells (x,y), x>y}  (n - l'_x - l'_y + x + y - 2)
// where here x is the row and y the column index of the cell.
inline UPoly orthogonal_dim_poly(const Partition& l) {
    Partition lt = conjugate(l);
    UPoly out{Rat(1)};
    for (int x = 1; x <= part_len(l); ++x) {
        for (int y = 1; y <= l[x - 1]; ++y) {
            Rat c0 = (x <= y) ? Rat(part_at(l, x) + part_at(l, y) - x - y)
                              : Rat(-part_at(lt, x) - part_at(lt, y) + x + y - 2);
            out = up_mul(out, UPoly{c0, Rat(1)});
        }
    }
    Rat h = Rat(hook_product(l));
    return up_scale(std::move(out), Rat(1) / h);
}

// Weyl dimension of the SO(2n) irreducible with highest weight lambda,
// for integer n >= len(lambda).
inline Rat so_dim_weyl(const Partition& l, int n) {
    if (part_len(l) > n) throw usage_error("so_dim_weyl: len(lambda) > n");
    Rat d = 1;
    for (int i = 1; i <= n; ++i) {
        long ri = part_at(l, i) - i;
        for (int j = i + 1; j <= n; ++j) {
            long rj = part_at(l, j) - j;
            d *= Rat(ri - rj) * Rat(ri + rj + 2 * n);
            d /= Rat(j - i) * Rat(2 * n - i - j);
        }
    }
    return d;
}

// O(2n) dimension through so_dim_weyl: doubled on the boundary len = n.
inline Rat orthogonal_dim_weyl(const Partition& l, int n) {
    Rat so = so_dim_weyl(l, n);
    return part_len(l) == n ? Rat(2) * so : so;
}

}  // namespace enumap
