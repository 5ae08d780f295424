#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zdg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside the accepted domain (m < 2, n < 2, l <= r, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A graph or dense problem larger than the configured cap.
class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(std::string what, std::uint64_t requested, std::uint64_t cap)
      : Error(what + ": " + std::to_string(requested) + " vertices exceeds cap " +
              std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

/// Two vertices of cell `i` have different neighbour counts in cell `j`.
/// Cell indices are 1-based; vertex indices refer to the graph's enumeration.
class NotEquitable : public Error {
 public:
  NotEquitable(std::size_t cell_i, std::size_t cell_j, std::size_t vertex_a,
               std::int64_t count_a, std::size_t vertex_b, std::int64_t count_b)
      : Error("partition not equitable: cells (" + std::to_string(cell_i) + "," +
              std::to_string(cell_j) + "), vertex " + std::to_string(vertex_a) + " has " +
              std::to_string(count_a) + " neighbours, vertex " + std::to_string(vertex_b) +
              " has " + std::to_string(count_b)),
        cell_i_(cell_i),
        cell_j_(cell_j),
        vertex_a_(vertex_a),
        vertex_b_(vertex_b),
        count_a_(count_a),
        count_b_(count_b) {}

  std::size_t cell_i() const noexcept { return cell_i_; }
  std::size_t cell_j() const noexcept { return cell_j_; }
  std::size_t vertex_a() const noexcept { return vertex_a_; }
  std::size_t vertex_b() const noexcept { return vertex_b_; }
  std::int64_t count_a() const noexcept { return count_a_; }
  std::int64_t count_b() const noexcept { return count_b_; }

 private:
  std::size_t cell_i_, cell_j_, vertex_a_, vertex_b_;
  std::int64_t count_a_, count_b_;
};

/// Projection of the all-one vector fell inside the dead band below the
/// main-eigenvalue threshold.
class AmbiguousClassification : public Error {
 public:
  AmbiguousClassification(double eigenvalue, double projection)
      : Error("ambiguous main classification for eigenvalue " + std::to_string(eigenvalue) +
              " (projection " + std::to_string(projection) + ")"),
        eigenvalue_(eigenvalue),
        projection_(projection) {}

  double eigenvalue() const noexcept { return eigenvalue_; }
  double projection() const noexcept { return projection_; }

 private:
  double eigenvalue_;
  double projection_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace zdg
