#pragma once

#include <cstddef>
#include <vector>

#include "zdg/matrix.hpp"

namespace zdg {

struct EigenDecomposition {
  std::vector<double> values;  ///< ascending
  Matrix<double> vectors;      ///< row k is the unit eigenvector of values[k]
  int sweeps = 0;
  double off_norm = 0.0;       ///< off-diagonal Frobenius norm at exit
  double frobenius = 0.0;      ///< ||A||_F of the input
};

double frobenius_norm(const Matrix<double>& a);

/// Full eigen-decomposition of a real symmetric matrix by cyclic Jacobi
/// rotations. Each sweep rotates every off-diagonal pair once, visiting the
/// pairs in round-robin order so that each round applies n/2 disjoint
/// rotations. Stops when the off-diagonal norm drops below
/// `convergence * ||A||_F`; throws ConvergenceError after `max_sweeps`.
EigenDecomposition symmetric_eigen(const Matrix<double>& a, double convergence = 1e-12,
                                   int max_sweeps = 100);

}  // namespace zdg
