#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mapforge {

// Exact arithmetic everywhere; no floating point in any counting path.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(long long n);

// Euler totient of k >= 1.
long long euler_phi(long long k);

BigInt pow_big(const BigInt& base, long long exp);

bool is_integer(const BigRat& q);

// Numerator of an integral rational; throws input_error otherwise.
BigInt to_integer(const BigRat& q);

// Exact integer division; throws input_error if b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& q);

} // namespace mapforge
