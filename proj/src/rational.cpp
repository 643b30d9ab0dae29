#include "eisenworks/rational.hpp"

#include <stdexcept>
#include <vector>

namespace eisenworks {

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (long i = 0; i < k; ++i) {
        acc *= n - i;
        acc /= i + 1; // exact: product of j consecutive integers is divisible by j!
    }
    return acc;
}

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    BigInt acc = 1;
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

const Rational& bernoulli(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli index must be >= 0");
    static std::vector<Rational> cache{Rational(1)};
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        // sum_{j=0}^{m} C(m+1,j) B_j = 0 for m >= 1
        Rational acc = 0;
        for (long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache[n];
}

BigInt divisor_sigma(long k, long long n) {
    if (n < 1) throw std::invalid_argument("divisor_sigma needs n >= 1");
    if (k < 0) throw std::invalid_argument("divisor_sigma needs k >= 0");
    BigInt acc = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        acc += boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(k));
        long long e = n / d;
        if (e != d) acc += boost::multiprecision::pow(BigInt(e), static_cast<unsigned>(k));
    }
    return acc;
}

std::string to_fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace eisenworks
