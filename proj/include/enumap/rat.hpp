#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "enumap/errors.hpp"

namespace enumap {

using Int = boost::multiprecision::cpp_int;
// Always stored reduced with positive denominator (cpp_rational canonical form).
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    Int r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Int double_factorial(long n) {
    Int r = 1;
    for (long k = n; k > 1; k -= 2) r *= k;
    return r;
}

// binomial(n, k) with the convention that out-of-range k gives 0;
// n may be negative only through the Int overload below being avoided.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Int catalan(long n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

inline Int motzkin(long n) {
    // M_n = M_{n-1} + sum_{k=2..n} M_{k-2} M_{n-k}
    std::vector<Int> m(static_cast<size_t>(n) + 1);
    m[0] = 1;
    for (long i = 1; i <= n; ++i) {
        Int s = m[i - 1];
        for (long k = 2; k <= i; ++k) s += m[k - 2] * m[i - k];
        m[i] = s;
    }
    return m[n];
}

inline Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (x == 0) throw domain_error("rat_pow: 0 to a negative power");
        return Rat(1) / rat_pow(x, -e);
    }
    Rat r = 1, b = x;
    long n = e;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

// Decimal string "num/den" ("num" when den = 1); reused by the CLI output.
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den <= 0) throw usage_error("rat_from_string: nonpositive denominator in '" + s + "'");
    return Rat(num, den);
}

}  // namespace enumap
