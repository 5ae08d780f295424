#include "zdg/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "zdg/error.hpp"

namespace zdg {

double frobenius_norm(const Matrix<double>& a) {
  double sum = 0.0;
  for (double x : a.data()) sum += x * x;
  return std::sqrt(sum);
}

namespace {

double off_diagonal_norm(const Matrix<double>& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

struct Rotation {
  std::size_t p;
  std::size_t q;
  double c;
  double s;
};

/// Round-robin schedule: `rounds[r]` lists disjoint pairs, and the rounds
/// together cover every unordered pair of 0..n-1 exactly once.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tournament(std::size_t n) {
  const std::size_t players = n + (n % 2);
  std::vector<std::size_t> seat(players);
  std::iota(seat.begin(), seat.end(), 0);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rounds;
  for (std::size_t r = 0; r + 1 < players; ++r) {
    auto& round = rounds.emplace_back();
    for (std::size_t i = 0; i < players / 2; ++i) {
      std::size_t a = seat[i];
      std::size_t b = seat[players - 1 - i];
      if (a >= n || b >= n) continue;  // bye
      if (a > b) std::swap(a, b);
      round.emplace_back(a, b);
    }
    // Keep seat 0 fixed and rotate the rest.
    std::rotate(seat.begin() + 1, seat.end() - 1, seat.end());
  }
  return rounds;
}

}  // namespace

EigenDecomposition symmetric_eigen(const Matrix<double>& input, double convergence,
                                   int max_sweeps) {
  if (!input.square()) throw std::invalid_argument("symmetric_eigen: matrix is not square");
  const std::size_t n = input.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (input(i, j) != input(j, i))
        throw std::invalid_argument("symmetric_eigen: matrix is not symmetric");

  EigenDecomposition out;
  out.frobenius = frobenius_norm(input);
  Matrix<double> a = input;
  Matrix<double> vt = Matrix<double>::identity(n);  // V^T; rows become eigenvectors

  const double target = convergence * out.frobenius;
  const double negligible = n == 0 ? 0.0 : target / static_cast<double>(n);
  const auto rounds = tournament(n);
  std::vector<Rotation> batch;
  batch.reserve(n / 2);

  out.off_norm = off_diagonal_norm(a);
  while (out.off_norm > target) {
    if (out.sweeps == max_sweeps)
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(max_sweeps) +
                             " sweeps (off-diagonal norm " + std::to_string(out.off_norm) + ")");
    for (const auto& round : rounds) {
      batch.clear();
      for (const auto& [p, q] : round) {
        const double apq = a(p, q);
        if (std::abs(apq) <= negligible) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        batch.push_back({p, q, c, t * c});
      }
      if (batch.empty()) continue;

      // A <- J^T A: rows p, q.
      for (const auto& r : batch) {
        auto rp = a.row(r.p);
        auto rq = a.row(r.q);
        for (std::size_t k = 0; k < n; ++k) {
          const double x = rp[k];
          const double y = rq[k];
          rp[k] = r.c * x - r.s * y;
          rq[k] = r.s * x + r.c * y;
        }
        auto vp = vt.row(r.p);
        auto vq = vt.row(r.q);
        for (std::size_t k = 0; k < n; ++k) {
          const double x = vp[k];
          const double y = vq[k];
          vp[k] = r.c * x - r.s * y;
          vq[k] = r.s * x + r.c * y;
        }
      }
      // A <- A J: columns p, q, one row at a time.
      for (std::size_t k = 0; k < n; ++k) {
        auto row = a.row(k);
        for (const auto& r : batch) {
          const double x = row[r.p];
          const double y = row[r.q];
          row[r.p] = r.c * x - r.s * y;
          row[r.q] = r.s * x + r.c * y;
        }
      }
      for (const auto& r : batch) {
        a(r.p, r.q) = 0.0;
        a(r.q, r.p) = 0.0;
      }
    }
    ++out.sweeps;
    out.off_norm = off_diagonal_norm(a);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  out.values.resize(n);
  out.vectors = Matrix<double>(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    std::copy(vt.row(order[k]).begin(), vt.row(order[k]).end(), out.vectors.row(k).begin());
  }
  return out;
}

}  // namespace zdg
