#pragma once

// Exact integer / rational arithmetic. Everything downstream is exact: there
// is no floating point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gelmod {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (Int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // exact: r is always a binomial coefficient here
    }
    return r;
}

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int int_pow(Int base, int exp) {
    Int r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rational& v) {
    if (boost::multiprecision::denominator(v) == 1)
        return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

inline bool is_integer(const Rational& v) {
    return boost::multiprecision::denominator(v) == 1;
}

} // namespace gelmod
