#pragma once

#include <algorithm>
#include <vector>

#include "enumap/errors.hpp"
#include "enumap/rat.hpp"

namespace enumap {

// Dense univariate polynomial over Q, coefficient of X^i at index i.
// Normalized: no trailing zeros (zero polynomial = empty vector).
using UPoly = std::vector<Rat>;

inline UPoly up_trim(UPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}
inline int up_deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly up_add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return up_trim(std::move(r));
}
inline UPoly up_sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return up_trim(std::move(r));
}
inline UPoly up_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return up_trim(std::move(r));
}
inline UPoly up_scale(UPoly a, const Rat& c) {
    for (auto& x : a) x *= c;
    return up_trim(std::move(a));
}
inline Rat up_eval(const UPoly& p, const Rat& x) {
    Rat r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}
inline UPoly up_deriv(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(static_cast<long>(i));
    return up_trim(std::move(r));
}

// Quotient with remainder; both exact over Q.
inline std::pair<UPoly, UPoly> up_divmod(UPoly a, const UPoly& b) {
    if (b.empty()) throw domain_error("up_divmod: division by zero polynomial");
    UPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a = up_trim(std::move(a));
    }
    return {up_trim(std::move(q)), std::move(a)};
}
inline UPoly up_divexact(const UPoly& a, const UPoly& b) {
    auto [q, r] = up_divmod(a, b);
    if (!r.empty()) throw domain_error("up_divexact: division not exact");
    return q;
}
inline UPoly up_gcd(UPoly a, UPoly b) {
    a = up_trim(std::move(a));
    b = up_trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = up_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) a = up_scale(std::move(a), Rat(1) / a.back());
    return a;
}

}  // namespace enumap
