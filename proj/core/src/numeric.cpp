#include "zdg/numeric.hpp"

#include <limits>

#include "zdg/error.hpp"

namespace zdg {

namespace mp = boost::multiprecision;

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigInt num = mp::numerator(value);
  const BigInt den = mp::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

Rational ipow(const Rational& base, std::uint64_t exponent) {
  return Rational(ipow(BigInt(mp::numerator(base)), exponent),
                  ipow(BigInt(mp::denominator(base)), exponent));
}

std::vector<BigInt> pascal_row(std::uint64_t n) {
  std::vector<BigInt> row{1};
  row.reserve(n + 1);
  for (std::uint64_t r = 1; r <= n; ++r) {
    row.push_back(1);
    for (std::uint64_t k = r - 1; k >= 1; --k) row[k] += row[k - 1];
  }
  return row;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  return pascal_row(n)[k];
}

bool is_integer(const Rational& x) { return mp::denominator(x) == 1; }

BigInt exact_sqrt_or_negative(const BigInt& x) {
  if (x < 0) return -1;
  BigInt s = mp::sqrt(x);
  return s * s == x ? s : BigInt(-1);
}

double to_double(const BigInt& x) { return x.convert_to<double>(); }

double to_double(const Rational& x) {
  const BigInt num = mp::numerator(x);
  const BigInt den = mp::denominator(x);
  // Scale both parts into double range before dividing.
  const auto num_bits = num.is_zero() ? 0U : mp::msb(mp::abs(num));
  const auto den_bits = mp::msb(den);
  const unsigned shift_n = num_bits > 900 ? num_bits - 900 : 0;
  const unsigned shift_d = den_bits > 900 ? den_bits - 900 : 0;
  const unsigned common = std::min(shift_n, shift_d);
  return BigInt(num >> common).convert_to<double>() / BigInt(den >> common).convert_to<double>();
}

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw Error("integer " + x.str() + " does not fit in 64 bits");
  return x.convert_to<std::int64_t>();
}

}  // namespace zdg
