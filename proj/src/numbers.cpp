#include "mapforge/numbers.hpp"
#include "mapforge/errors.hpp"

namespace mapforge {

BigInt factorial(long long n) {
    if (n < 0) throw input_error("factorial of negative argument");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

long long euler_phi(long long k) {
    if (k < 1) throw input_error("euler_phi needs k >= 1");
    long long result = k;
    long long n = k;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

BigInt pow_big(const BigInt& base, long long exp) {
    if (exp < 0) throw input_error("pow_big needs a non-negative exponent");
    BigInt r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

bool is_integer(const BigRat& q) {
    return boost::multiprecision::denominator(q) == 1;
}

BigInt to_integer(const BigRat& q) {
    if (!is_integer(q))
        throw input_error("expected an integer, got " + to_string(q));
    return boost::multiprecision::numerator(q);
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0 || a % b != 0)
        throw input_error("exact division failed: " + to_string(a) + " / " + to_string(b));
    return a / b;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRat& q) {
    if (is_integer(q)) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

} // namespace mapforge
