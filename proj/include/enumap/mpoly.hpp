#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "enumap/errors.hpp"
#include "enumap/rat.hpp"

namespace enumap {

// Immutable ordered list of variable names shared by all polynomials of one
// computation context. Two VarSets are compatible iff their name lists agree.
class VarSet {
  public:
    VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}
    explicit VarSet(std::vector<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

    size_t arity() const { return names_->size(); }
    const std::string& name(size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }

    bool has(const std::string& v) const {
        return std::find(names_->begin(), names_->end(), v) != names_->end();
    }
    size_t index(const std::string& v) const {
        auto it = std::find(names_->begin(), names_->end(), v);
        if (it == names_->end()) throw usage_error("VarSet: unknown symbol '" + v + "'");
        return static_cast<size_t>(it - names_->begin());
    }
    bool same_as(const VarSet& o) const {
        return names_ == o.names_ || *names_ == *o.names_;
    }

  private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

using Exp = std::vector<int32_t>;  // one entry per variable; negative = Laurent

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Terms are kept in lexicographic exponent order (the frozen canonical
// monomial order used for all serialization); zero coefficients never stored.
class MPoly {
  public:
    MPoly() = default;
    explicit MPoly(VarSet vars) : vars_(std::move(vars)) {}
    MPoly(VarSet vars, const Rat& c) : vars_(std::move(vars)) {
        if (c != 0) terms_[Exp(vars_.arity(), 0)] = c;
    }

    static MPoly variable(const VarSet& vars, const std::string& v, int32_t power = 1) {
        MPoly p(vars);
        Exp e(vars.arity(), 0);
        e[vars.index(v)] = power;
        p.terms_[e] = 1;
        return p;
    }
    static MPoly monomial(const VarSet& vars, Exp e, const Rat& c) {
        MPoly p(vars);
        if (e.size() != vars.arity()) throw usage_error("MPoly::monomial: exponent arity mismatch");
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    const VarSet& vars() const { return vars_; }
    const std::map<Exp, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const Exp& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
    }
    Rat constant_term() const {
        auto it = terms_.find(Exp(vars_.arity(), 0));
        return it == terms_.end() ? Rat(0) : it->second;
    }
    // Nonzero only when the polynomial is a single term; used by inversion.
    bool is_monomial() const { return terms_.size() == 1; }

    Rat coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Exp& e, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator-(const MPoly& a) {
        MPoly r(a.vars_);
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_vars(b);
        MPoly r(a.vars_);
        Exp e(a.vars_.arity());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    MPoly& operator*=(const Rat& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend MPoly operator*(MPoly a, const Rat& c) { a *= c; return a; }
    friend MPoly operator*(const Rat& c, MPoly a) { a *= c; return a; }

    bool operator==(const MPoly& o) const { return vars_.same_as(o.vars_) && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Exact partial derivative with respect to one variable (Laurent-aware).
    MPoly pderiv(size_t vi) const {
        MPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[vi] == 0) continue;
            Exp e2 = e;
            e2[vi] -= 1;
            r.add_term(e2, c * e[vi]);
        }
        return r;
    }
    MPoly pderiv(const std::string& v) const { return pderiv(vars_.index(v)); }

    MPoly mul_var_pow(size_t vi, int32_t k) const {
        MPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            Exp e2 = e;
            e2[vi] += k;
            r.terms_[std::move(e2)] = c;
        }
        return r;
    }

    // Substitute variable vi := value (a polynomial over the same VarSet).
    // Negative exponents of vi require the value to be an invertible monomial.
    MPoly subst(size_t vi, const MPoly& value) const {
        std::map<int32_t, MPoly> powers;
        MPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            int32_t k = e[vi];
            auto it = powers.find(k);
            if (it == powers.end()) it = powers.emplace(k, poly_pow(value, k)).first;
            Exp e2 = e;
            e2[vi] = 0;
            r += MPoly::monomial(vars_, e2, c) * it->second;
        }
        return r;
    }
    MPoly subst(const std::string& v, const MPoly& value) const { return subst(vars_.index(v), value); }
    MPoly subst(const std::string& v, const Rat& value) const {
        return subst(vars_.index(v), MPoly(vars_, value));
    }

    // value^k, supporting negative k for invertible monomials.
    static MPoly poly_pow(const MPoly& value, int32_t k) {
        if (k == 0) return MPoly(value.vars_, 1);
        if (k < 0) return poly_pow(invert_monomial(value), -k);
        MPoly r(value.vars_, 1), b = value;
        int32_t n = k;
        while (n > 0) {
            if (n & 1) r *= b;
            if (n >>= 1) b *= b;
        }
        return r;
    }

    static MPoly invert_monomial(const MPoly& m) {
        if (!m.is_monomial()) throw domain_error("MPoly: inverse of a non-monomial");
        const auto& [e, c] = *m.terms_.begin();
        Exp e2(e.size());
        for (size_t i = 0; i < e.size(); ++i) e2[i] = -e[i];
        return MPoly::monomial(m.vars_, std::move(e2), Rat(1) / c);
    }

    int32_t degree_in(size_t vi) const {
        int32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[vi]);
        return d;
    }
    int32_t low_degree_in(size_t vi) const {
        int32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::min(d, e[vi]);
        return d;
    }

    // Collect coefficient of vi^k (the result no longer involves vi).
    MPoly coeff_of(size_t vi, int32_t k) const {
        MPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[vi] != k) continue;
            Exp e2 = e;
            e2[vi] = 0;
            r.terms_[std::move(e2)] = c;
        }
        return r;
    }

    // Drop every term whose exponent in vi exceeds cap (series truncation in
    // an auxiliary expansion variable; callers document the window).
    MPoly truncate_var(size_t vi, int32_t cap) const {
        MPoly r(vars_);
        for (const auto& [e, c] : terms_)
            if (e[vi] <= cap) r.terms_[e] = c;
        return r;
    }

    Rat eval_all(const std::vector<Rat>& values) const {
        if (values.size() != vars_.arity()) throw usage_error("MPoly::eval_all: arity mismatch");
        Rat total = 0;
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t *= rat_pow(values[i], e[i]);
            total += t;
        }
        return total;
    }

    // Frozen canonical form: terms in lexicographic exponent order, each as
    // coeff*var^exp joined by " + "; exactly reproducible across runs.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += rat_to_string(c);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                out += "*" + vars_.name(i);
                if (e[i] != 1) out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

  private:
    void check_vars(const MPoly& o) const {
        if (!vars_.same_as(o.vars_)) throw usage_error("MPoly: mismatched variable sets");
    }

    VarSet vars_;
    std::map<Exp, Rat> terms_;
};

}  // namespace enumap
