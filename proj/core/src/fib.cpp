#include "zdg/fib.hpp"

#include <cmath>

#include "zdg/error.hpp"

namespace zdg {

namespace {

void require_parameter(std::int64_t m) {
  if (m < 2) throw InvalidArgument("fibonacci parameter m must be >= 2, got " + std::to_string(m));
}

void require_index(std::int64_t k) {
  if (k < 0) throw InvalidArgument("fibonacci index must be >= 0, got " + std::to_string(k));
}

}  // namespace

FibSequence::FibSequence(std::int64_t m) : m_(m), cache_{1, 1} { require_parameter(m); }

FibSequence::FibSequence(const FibSequence& other) : m_(other.m_) {
  std::lock_guard lock(other.mutex_);
  cache_ = other.cache_;
}

FibSequence& FibSequence::operator=(const FibSequence& other) {
  if (this == &other) return *this;
  std::vector<BigInt> copy;
  {
    std::lock_guard lock(other.mutex_);
    copy = other.cache_;
  }
  std::lock_guard lock(mutex_);
  m_ = other.m_;
  cache_ = std::move(copy);
  return *this;
}

void FibSequence::extend_to(std::uint64_t k) const {
  const BigInt weight = m_ - 1;
  cache_.reserve(k + 1);
  while (cache_.size() <= k) {
    const std::size_t i = cache_.size();
    cache_.push_back(cache_[i - 1] + weight * cache_[i - 2]);
  }
}

BigInt FibSequence::at(std::uint64_t k) const {
  std::lock_guard lock(mutex_);
  extend_to(k);
  return cache_[k];
}

Rational FibSequence::ratio(std::uint64_t k) const {
  std::lock_guard lock(mutex_);
  extend_to(k + 1);
  return Rational(cache_[k + 1], cache_[k]);
}

std::vector<BigInt> FibSequence::prefix(std::uint64_t count) const {
  std::lock_guard lock(mutex_);
  if (count > 0) extend_to(count - 1);
  return {cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(count)};
}

BigInt fib(std::int64_t m, std::int64_t k) {
  require_index(k);
  return FibSequence(m).at(static_cast<std::uint64_t>(k));
}

Rational gamma(std::int64_t m, std::int64_t k) {
  require_index(k);
  return FibSequence(m).ratio(static_cast<std::uint64_t>(k));
}

BigInt docagne_residual(std::int64_t m, std::int64_t l, std::int64_t r) {
  if (r < 0 || l <= r)
    throw InvalidArgument("D'Ocagne residual needs l > r >= 0, got l=" + std::to_string(l) +
                          " r=" + std::to_string(r));
  const FibSequence f(m);
  const auto ul = static_cast<std::uint64_t>(l);
  const auto ur = static_cast<std::uint64_t>(r);
  const BigInt lhs = f.at(ul) * f.at(ur + 1) - f.at(ul + 1) * f.at(ur);
  const BigInt rhs = ipow(BigInt(1 - m), ur + 1) * f.at(ul - ur - 1);
  return lhs - rhs;
}

// ---------------------------------------------------------------------------

QuadraticNumber::QuadraticNumber(Rational a, Rational b, BigInt radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
  if (d_ < 0) throw InvalidArgument("quadratic radicand must be non-negative");
  normalize();
}

void QuadraticNumber::normalize() {
  if (b_ == 0) return;
  const BigInt root = exact_sqrt_or_negative(d_);
  if (root >= 0) {
    a_ += b_ * Rational(root);
    b_ = 0;
  }
}

namespace {

const BigInt& common_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational()) return x.radicand();
  if (x.radicand() != y.radicand())
    throw InvalidArgument("quadratic numbers over different radicands: " + x.radicand().str() +
                          " vs " + y.radicand().str());
  return x.radicand();
}

}  // namespace

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  return {x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y)};
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
  return {x.a_ - y.a_, x.b_ - y.b_, common_radicand(x, y)};
}

QuadraticNumber operator-(const QuadraticNumber& x) { return {-x.a_, -x.b_, x.d_}; }

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  const BigInt& d = common_radicand(x, y);
  return {x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadraticNumber QuadraticNumber::conjugate() const { return {a_, -b_, d_}; }

QuadraticNumber QuadraticNumber::inverse() const {
  const Rational n = norm();
  if (n == 0) throw InvalidArgument("division by zero in quadratic field");
  return {a_ / n, -b_ / n, d_};
}

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
  return x * y.inverse();
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.b_ == 0 || x.d_ == y.d_;
}

QuadraticNumber QuadraticNumber::pow(std::uint64_t exponent) const {
  QuadraticNumber result(Rational(1), Rational(0), d_);
  QuadraticNumber base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

double QuadraticNumber::to_double() const {
  return zdg::to_double(a_) + zdg::to_double(b_) * std::sqrt(zdg::to_double(d_));
}

std::string QuadraticNumber::to_string() const {
  if (b_ == 0) return zdg::to_string(a_);
  std::string out = a_ == 0 ? "" : zdg::to_string(a_) + (b_ > 0 ? " + " : " - ");
  if (a_ == 0 && b_ < 0) out += "-";
  const Rational mag = b_ < 0 ? Rational(-b_) : b_;
  if (mag != 1) out += "(" + zdg::to_string(mag) + ")*";
  return out + "sqrt(" + d_.str() + ")";
}

GoldenPair golden_pair(std::int64_t m) {
  require_parameter(m);
  const BigInt d = BigInt(4) * m - 3;
  const Rational half(1, 2);
  QuadraticNumber phi(half, half, d);
  // xi = -(m-1)/phi simplifies to the conjugate 1 - phi.
  QuadraticNumber xi = QuadraticNumber(Rational(-(m - 1))) / phi;
  return {std::move(phi), std::move(xi)};
}

}  // namespace zdg
