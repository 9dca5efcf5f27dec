#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace polyrep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_text(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    BigInt b = 1;
    for (long long i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

// Exact integer square root if r is a perfect square of a rational; returns false otherwise.
bool rational_sqrt(const Rational& r, Rational& out);

inline bool rational_sqrt(const Rational& r, Rational& out) {
    if (r < 0) return false;
    BigInt n = numerator(r), d = denominator(r);
    BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    out = Rational(sn, sd);
    return true;
}

} // namespace polyrep
