#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "enumap/errors.hpp"
#include "enumap/mpoly.hpp"

namespace enumap {

// Power series in t truncated at order T, with exact multivariate Laurent
// polynomial coefficients. Exactly T+1 coefficients are stored; reading past
// T is an error, never a zero.
class TSeries {
  public:
    TSeries() : order_(-1) {}
    TSeries(VarSet vars, int order)
        : order_(order), vars_(std::move(vars)), coeff_(order + 1, MPoly(vars_)) {
        if (order < 0) throw usage_error("TSeries: negative truncation order");
    }
    static TSeries constant(const VarSet& vars, int order, const Rat& c) {
        TSeries s(vars, order);
        s.coeff_[0] = MPoly(vars, c);
        return s;
    }

    int order() const { return order_; }
    const VarSet& vars() const { return vars_; }

    const MPoly& at(int k) const {
        if (k < 0) throw usage_error("TSeries::at: negative index");
        if (k > order_)
            throw truncation_error("TSeries: coefficient of t^" + std::to_string(k) +
                                   " beyond truncation order " + std::to_string(order_));
        return coeff_[k];
    }
    MPoly& at(int k) {
        if (k < 0 || k > order_) throw truncation_error("TSeries::at: index out of window");
        return coeff_[k];
    }

    bool is_zero() const {
        for (const auto& c : coeff_)
            if (!c.is_zero()) return false;
        return true;
    }

    TSeries truncate(int new_order) const {
        if (new_order > order_)
            throw truncation_error("TSeries::truncate: cannot extend truncation order");
        TSeries r(vars_, new_order);
        for (int k = 0; k <= new_order; ++k) r.coeff_[k] = coeff_[k];
        return r;
    }

    TSeries& operator+=(const TSeries& o) {
        check(o);
        for (int k = 0; k <= order_; ++k) coeff_[k] += o.coeff_[k];
        return *this;
    }
    TSeries& operator-=(const TSeries& o) {
        check(o);
        for (int k = 0; k <= order_; ++k) coeff_[k] -= o.coeff_[k];
        return *this;
    }
    friend TSeries operator+(TSeries a, const TSeries& b) { a += b; return a; }
    friend TSeries operator-(TSeries a, const TSeries& b) { a -= b; return a; }
    friend TSeries operator-(const TSeries& a) {
        TSeries r(a.vars_, a.order_);
        for (int k = 0; k <= a.order_; ++k) r.coeff_[k] = -a.coeff_[k];
        return r;
    }
    friend TSeries operator*(TSeries a, const Rat& c) {
        for (auto& p : a.coeff_) p *= c;
        return a;
    }
    friend TSeries operator*(const Rat& c, TSeries a) { return std::move(a) * c; }
    friend TSeries operator*(TSeries a, const MPoly& m) {
        for (auto& p : a.coeff_) p = p * m;
        return a;
    }

    // [t^k] a*b = sum_{i+j=k} a_i b_j, exact within the common window.
    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        a.check(b);
        TSeries r(a.vars_, a.order_);
        for (int i = 0; i <= a.order_; ++i) {
            if (a.coeff_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order_; ++j) {
                if (b.coeff_[j].is_zero()) continue;
                r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
            }
        }
        return r;
    }
    TSeries& operator*=(const TSeries& o) { *this = *this * o; return *this; }

    bool operator==(const TSeries& o) const {
        return order_ == o.order_ && vars_.same_as(o.vars_) && coeff_ == o.coeff_;
    }

    // log with exp(result) = *this up to order T; needs constant term 1.
    // Term recursion: g_n = f_n - (1/n) sum_{k=1}^{n-1} k g_k f_{n-k}.
    TSeries log() const {
        if (!(coeff_[0] == MPoly(vars_, 1)))
            throw domain_error("TSeries::log: constant term is not 1");
        TSeries g(vars_, order_);
        for (int n = 1; n <= order_; ++n) {
            MPoly acc = coeff_[n];
            for (int k = 1; k < n; ++k)
                acc -= (Rat(k) / n) * (g.coeff_[k] * coeff_[n - k]);
            g.coeff_[n] = std::move(acc);
        }
        return g;
    }

    // Inverse of log: e_0 = 1, e_n = (1/n) sum_{k=1}^{n} k g_k e_{n-k}.
    TSeries exp() const {
        if (!coeff_[0].is_zero())
            throw domain_error("TSeries::exp: constant term is not 0");
        TSeries e(vars_, order_);
        e.coeff_[0] = MPoly(vars_, 1);
        for (int n = 1; n <= order_; ++n) {
            MPoly acc(vars_);
            for (int k = 1; k <= n; ++k) {
                if (coeff_[k].is_zero()) continue;
                acc += (Rat(k) / n) * (coeff_[k] * e.coeff_[n - k]);
            }
            e.coeff_[n] = std::move(acc);
        }
        return e;
    }

    // Multiplicative inverse; the constant coefficient must be an invertible
    // monomial (unit constant in the common case).
    TSeries inverse() const {
        MPoly c0inv = MPoly::invert_monomial(coeff_[0]);
        TSeries r(vars_, order_);
        r.coeff_[0] = c0inv;
        for (int n = 1; n <= order_; ++n) {
            MPoly acc(vars_);
            for (int k = 1; k <= n; ++k) acc += coeff_[k] * r.coeff_[n - k];
            r.coeff_[n] = -(c0inv * acc);
        }
        return r;
    }

    TSeries pderiv(const std::string& v) const {
        size_t vi = vars_.index(v);
        TSeries r(vars_, order_);
        for (int k = 0; k <= order_; ++k) r.coeff_[k] = coeff_[k].pderiv(vi);
        return r;
    }

    // d/dt, honest about the shrinking window.
    TSeries tderiv() const {
        if (order_ == 0) throw truncation_error("TSeries::tderiv: empty window");
        TSeries r(vars_, order_ - 1);
        for (int k = 1; k <= order_; ++k) r.coeff_[k - 1] = coeff_[k] * Rat(k);
        return r;
    }

    // Multiply by t^k (k >= 0): top k coefficients fall out of the window.
    TSeries mul_t(int k) const {
        TSeries r(vars_, order_);
        for (int j = k; j <= order_; ++j) r.coeff_[j] = coeff_[j - k];
        return r;
    }
    // Divide by t^k; the bottom k coefficients must vanish.
    TSeries div_t(int k) const {
        for (int j = 0; j < k && j <= order_; ++j)
            if (!coeff_[j].is_zero())
                throw domain_error("TSeries::div_t: series not divisible by t^" + std::to_string(k));
        TSeries r(vars_, order_ - k);
        for (int j = 0; j <= order_ - k; ++j) r.coeff_[j] = coeff_[j + k];
        return r;
    }

    Rat extract(int t_power, const Exp& monomial) const { return at(t_power).coeff(monomial); }

    TSeries map_coeffs(const std::function<MPoly(const MPoly&)>& f) const {
        TSeries r(vars_, order_);
        for (int k = 0; k <= order_; ++k) r.coeff_[k] = f(coeff_[k]);
        return r;
    }
    TSeries subst(const std::string& v, const MPoly& value) const {
        size_t vi = vars_.index(v);
        return map_coeffs([&](const MPoly& p) { return p.subst(vi, value); });
    }
    TSeries subst(const std::string& v, const Rat& value) const {
        return subst(v, MPoly(vars_, value));
    }

    std::string str() const {
        std::string out;
        for (int k = 0; k <= order_; ++k) {
            if (coeff_[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + coeff_[k].str() + ")*t^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

  private:
    void check(const TSeries& o) const {
        if (order_ != o.order_) throw usage_error("TSeries: mismatched truncation orders");
        if (!vars_.same_as(o.vars_)) throw usage_error("TSeries: mismatched variable sets");
    }

    int order_;
    VarSet vars_;
    std::vector<MPoly> coeff_;
};

}  // namespace enumap
