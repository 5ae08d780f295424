#pragma once

// Exact scalar types shared by every module.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zdg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

BigInt ipow(const BigInt& base, std::uint64_t exponent);
Rational ipow(const Rational& base, std::uint64_t exponent);

/// Row `n` of Pascal's triangle, C(n,0) .. C(n,n), by additive recurrence.
std::vector<BigInt> pascal_row(std::uint64_t n);

/// C(n,k), zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

inline bool is_zero(const BigInt& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }

bool is_integer(const Rational& x);

/// Integer square root when `x` is a perfect square, -1 otherwise.
BigInt exact_sqrt_or_negative(const BigInt& x);

double to_double(const BigInt& x);
double to_double(const Rational& x);

/// Narrowing with range check; throws zdg::Error when the value does not fit.
std::int64_t to_int64(const BigInt& x);

}  // namespace zdg
