#pragma once

// Generalized Fibonacci numbers F_{m,k} with F_{m,0} = F_{m,1} = 1 and
// F_{m,k} = F_{m,k-1} + (m-1) F_{m,k-2}, their consecutive ratios, and the
// quadratic-field pair phi = (1 + sqrt(4m-3))/2, xi = -(m-1)/phi.

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "zdg/numeric.hpp"

namespace zdg {

/// Memoized sequence F_{m,0}, F_{m,1}, ... for one parameter m >= 2.
///
/// The cache grows on demand under an internal lock, so a single instance may
/// be shared between threads. Values are returned by copy.
class FibSequence {
 public:
  explicit FibSequence(std::int64_t m);

  FibSequence(const FibSequence& other);
  FibSequence& operator=(const FibSequence& other);

  std::int64_t parameter() const noexcept { return m_; }

  BigInt at(std::uint64_t k) const;

  /// gamma_{m,k} = F_{m,k+1} / F_{m,k}.
  Rational ratio(std::uint64_t k) const;

  /// F_{m,0} .. F_{m,count-1}.
  std::vector<BigInt> prefix(std::uint64_t count) const;

 private:
  void extend_to(std::uint64_t k) const;

  std::int64_t m_;
  mutable std::mutex mutex_;
  mutable std::vector<BigInt> cache_;
};

BigInt fib(std::int64_t m, std::int64_t k);
Rational gamma(std::int64_t m, std::int64_t k);

/// (F_l F_{r+1} - F_{l+1} F_r) - (1-m)^{r+1} F_{l-r-1}; zero whenever the
/// generalized D'Ocagne identity holds. Requires l > r >= 0.
BigInt docagne_residual(std::int64_t m, std::int64_t l, std::int64_t r);

/// a + b sqrt(d) with rational a, b and a non-negative integer radicand d.
///
/// Perfect-square radicands are folded into the rational part on
/// construction, so two values are equal iff their components are equal.
/// A value with b = 0 is compatible with every radicand.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational a, Rational b, BigInt radicand);
  explicit QuadraticNumber(Rational a) : a_(std::move(a)) {}
  explicit QuadraticNumber(std::int64_t a) : a_(a) {}

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& radical_part() const noexcept { return b_; }
  const BigInt& radicand() const noexcept { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// a^2 - d b^2; nonzero for every nonzero value when d is not a square.
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  QuadraticNumber conjugate() const;
  QuadraticNumber inverse() const;
  QuadraticNumber pow(std::uint64_t exponent) const;

  double to_double() const;
  std::string to_string() const;

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x);
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);

  QuadraticNumber& operator+=(const QuadraticNumber& y) { return *this = *this + y; }
  QuadraticNumber& operator-=(const QuadraticNumber& y) { return *this = *this - y; }
  QuadraticNumber& operator*=(const QuadraticNumber& y) { return *this = *this * y; }

 private:
  void normalize();

  Rational a_ = 0;
  Rational b_ = 0;
  BigInt d_ = 0;
};

inline bool is_zero(const QuadraticNumber& x) { return x.is_zero(); }

struct GoldenPair {
  QuadraticNumber phi;
  QuadraticNumber xi;
};

/// phi and xi over d = 4m - 3; the two roots of x^2 - x - (m-1).
GoldenPair golden_pair(std::int64_t m);

}  // namespace zdg
