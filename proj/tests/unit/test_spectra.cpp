#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zdg/eigen.hpp"
#include "zdg/error.hpp"
#include "zdg/graph.hpp"
#include "zdg/spectra.hpp"

using namespace zdg;

namespace {

Matrix<double> to_double(const Matrix<std::int64_t>& a) {
  return a.map<double>([](std::int64_t x) { return static_cast<double>(x); });
}

void close_all(const std::vector<double>& got, std::vector<double> want, double tol) {
  std::sort(want.begin(), want.end());
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

}  // namespace

TEST_CASE("symmetric_eigen: trivial cases") {
  const auto k2 = symmetric_eigen(Matrix<double>{{0, 1}, {1, 0}});
  close_all(k2.values, {-1, 1}, 1e-14);
  const auto z = symmetric_eigen(Matrix<double>(4, 4, 0.0));
  close_all(z.values, {0, 0, 0, 0}, 0);
  CHECK(z.sweeps == 0);
  CHECK_THROWS_AS(symmetric_eigen(Matrix<double>{{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_eigen(Matrix<double>{{0, 1}, {1, 0}}, 1e-12, 0), ConvergenceError);
}

TEST_CASE("symmetric_eigen: reconstruction, orthonormality, agreement with Eigen") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 33u, 64u}) {
    Matrix<double> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = gauss(rng);
    const auto eig = symmetric_eigen(a);
    const double fro = frobenius_norm(a);
    CHECK(eig.off_norm <= 1e-12 * fro);

    Eigen::MatrixXd ea(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ea(i, j) = a(i, j);
    const auto ref = oracle::symmetric_eigenvalues(ea);
    close_all(eig.values, ref, 1e-10 * std::max(1.0, fro));

    double recon = 0, gram = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0, g = 0;
        for (std::size_t k = 0; k < n; ++k) {
          s += eig.vectors(k, i) * eig.values[k] * eig.vectors(k, j);
          g += eig.vectors(i, k) * eig.vectors(j, k);
        }
        recon = std::max(recon, std::abs(s - a(i, j)));
        gram = std::max(gram, std::abs(g - (i == j ? 1.0 : 0.0)));
      }
    CHECK(recon <= 1e-10 * fro);
    CHECK(gram <= 1e-10);
  }
}

TEST_CASE("symmetric_eigen is deterministic") {
  const auto a = to_double(adjacency_matrix(build_graph(3, 4)));
  const auto x = symmetric_eigen(a);
  const auto y = symmetric_eigen(a);
  CHECK(x.values == y.values);
  CHECK(x.vectors == y.vectors);
}

TEST_CASE("classify_main: worked examples") {
  const auto k2 = classify_main(Matrix<std::int64_t>{{0, 1}, {1, 0}});
  REQUIRE(k2.entries.size() == 2);
  CHECK(k2.main_eigenvalues().size() == 1);
  CHECK(k2.main_eigenvalues()[0] == doctest::Approx(1));
  CHECK(k2.non_main_eigenvalues()[0] == doctest::Approx(-1));

  const auto full = classify_main(adjacency_matrix(build_graph(2, 4)));
  close_all(full.main_eigenvalues(), {-1, (5 - std::sqrt(21.0)) / 2, (5 + std::sqrt(21.0)) / 2}, 1e-8);
  CHECK(full.vertex_count() == 14);

  const auto bip = classify_main(adjacency_matrix(build_bipartite(2, 4)));
  close_all(bip.main_eigenvalues(), {-1, (3 - std::sqrt(5.0)) / 2, (3 + std::sqrt(5.0)) / 2}, 1e-8);
}

TEST_CASE("classify_main agrees with an Eigen-based oracle") {
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n) {
      const auto a = adjacency_matrix(build_graph(m, n));
      const auto ours = classify_main(a);
      const auto ref = oracle::main_split(oracle::to_eigen(a));
      close_all(ours.main_eigenvalues(), ref.main, 1e-8);
      close_all(ours.non_main_eigenvalues(), ref.non_main, 1e-8);
    }
}

TEST_CASE("classify_main: dead band throws") {
  // Eigenvectors of a 2x2 problem rotated so e has a tiny projection onto the first.
  for (double delta : {5e-8, 2e-8}) {
    const double theta = -M_PI / 4 + delta;
    EigenDecomposition eig;
    eig.values = {0.0, 1.0};
    eig.vectors = Matrix<double>{{std::cos(theta), std::sin(theta)},
                                 {-std::sin(theta), std::cos(theta)}};
    eig.frobenius = 1.0;
    try {
      classify_main(eig);
      FAIL("expected AmbiguousClassification");
    } catch (const AmbiguousClassification& e) {
      CHECK(e.eigenvalue() == 0.0);
      CHECK(e.projection() == doctest::Approx(delta).epsilon(1e-3));
    }
  }
  // Outside the band on either side there is a decision.
  for (double delta : {1e-10, 1e-6}) {
    const double theta = -M_PI / 4 + delta;
    EigenDecomposition eig;
    eig.values = {0.0, 1.0};
    eig.vectors = Matrix<double>{{std::cos(theta), std::sin(theta)},
                                 {-std::sin(theta), std::cos(theta)}};
    eig.frobenius = 1.0;
    const auto r = classify_main(eig);
    CHECK(r.entries[0].is_main == (delta > 1e-7));
  }
}

TEST_CASE("group_eigenvalues") {
  const auto g = group_eigenvalues({-1.0, -1.0 + 1e-12, 0.5, 2.0, 2.0 + 5e-9}, 1e-8);
  REQUIRE(g.size() == 3);
  CHECK(g[0].second == 2);
  CHECK(g[1].second == 1);
  CHECK(g[2].second == 2);
}

TEST_CASE("krylov_rank: worked examples and oracle") {
  CHECK(krylov_rank(Matrix<std::int64_t>{{0, 1}, {1, 0}}) == 1);
  CHECK(krylov_rank(adjacency_matrix(build_graph(2, 4))) == 3);
  CHECK(krylov_rank(adjacency_matrix(build_bipartite(2, 4))) == 3);
  CHECK(krylov_rank(Matrix<std::int64_t>(3, 3, 0)) == 1);
  for (unsigned q : {2u, 3u, 4u})
    for (unsigned n = 2; n <= 4; ++n) {
      const auto brute = oracle::brute_full(q, n);
      if (brute.vertices.size() > 70) continue;
      const auto g = build_graph(q, n);
      CHECK(krylov_rank(g) == oracle::krylov_rank(brute.adj));
      CHECK(krylov_rank(adjacency_matrix(g)) == oracle::krylov_rank(brute.adj));
    }
}

TEST_CASE("quotient eigenvalues agree with Eigen's general solver") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 9; ++n) {
      const auto p = build_p(m, n), q = build_q(m, n);
      close_all(quotient_eigenvalues(p), oracle::general_eigenvalues(oracle::to_eigen(p.entries())),
                1e-7 * std::pow(double(m), n));
      close_all(quotient_eigenvalues(q), oracle::general_eigenvalues(oracle::to_eigen(q.entries())),
                1e-7 * std::pow(double(m), n));
    }
  const auto q34 = quotient_eigenvalues(build_q(3, 4));
  close_all(q34, {2, -4, 8}, 1e-10);
}

TEST_CASE("predicted_spectrum") {
  const auto p34 = predicted_spectrum(3, 4);
  REQUIRE(p34.q_derived.size() == 3);
  std::vector<double> values;
  std::vector<std::uint64_t> mults;
  for (const auto& d : p34.q_derived) {
    values.push_back(d.value);
    mults.push_back(d.multiplicity);
    CHECK(d.exact.is_rational());
  }
  CHECK(values == std::vector<double>{-2, 4, -8});
  CHECK(mults == std::vector<std::uint64_t>{3, 5, 3});
  CHECK(predicted_spectrum(2, 4).zero_multiplicity == 0);
  const auto p32 = predicted_spectrum(3, 2);
  CHECK(p32.zero_multiplicity == 2);
  CHECK(p32.total_multiplicity() == 4);

  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= 9; ++n) {
      const auto ps = predicted_spectrum(m, n);
      CHECK(BigInt(ps.total_multiplicity()) == graph_vertex_count(m, n));
      CHECK(BigInt(ps.zero_multiplicity) ==
            oracle::power(m, n) - oracle::power(m - 1, n) - oracle::power(2, n) + 1);
      if (m == 2) CHECK(ps.zero_multiplicity == 0);
      // P eigenvalues are simple: separated by more than the grouping gap.
      for (std::size_t i = 1; i < ps.p_eigenvalues.size(); ++i)
        CHECK(ps.p_eigenvalues[i] - ps.p_eigenvalues[i - 1] > 1e-8);
    }
}

TEST_CASE("predicted spectrum against the Eigen oracle spectrum") {
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 5; ++n) {
      if (graph_vertex_count(m, n) > 300) continue;
      const auto a = adjacency_matrix(build_graph(m, n));
      const auto ref = oracle::symmetric_eigenvalues(oracle::to_eigen(a));
      std::vector<double> predicted;
      for (const auto& [v, k] : predicted_spectrum(m, n).multiset(1e-8))
        for (std::uint64_t t = 0; t < k; ++t) predicted.push_back(v);
      close_all(predicted, ref, 1e-8);
    }
}

TEST_CASE("verify_spectrum_theorem / verify_main_correspondences: worked cases") {
  for (auto [m, n] : {std::pair{2, 4}, {3, 2}, {2, 2}, {3, 4}, {2, 3}}) {
    const auto th = verify_spectrum_theorem(m, n, 1e-8);
    CHECK(th.passed());
    const auto co = verify_main_correspondences(m, n, 1e-8);
    CHECK(co.passed());
    CHECK(co.checks.size() == 4);
  }
  const auto g = build_graph(3, 4);
  const auto full = analyze_graph(g, GraphKind::Full);
  std::vector<double> nonzero_non_main;
  for (double v : full.report.non_main_eigenvalues())
    if (std::abs(v) > 1e-8) nonzero_non_main.push_back(v);
  close_all(nonzero_non_main, {-2, 4, -8}, 1e-8);

  const auto main23 = analyze_graph(build_graph(2, 3), GraphKind::Full).report.main_eigenvalues();
  close_all(main23, {1 - std::sqrt(2.0), 1 + std::sqrt(2.0)}, 1e-10);
}

TEST_CASE("verification detects a wrong prediction") {
  auto analysis = analyze_graph(build_graph(2, 4), GraphKind::Full);
  analysis.source.m = 3;  // pretend it is Γ(F_3^4): the multiset cannot match
  CHECK_FALSE(verify_spectrum_theorem(analysis, 1e-8).passed());
}

TEST_CASE("analyze_graph refuses above the dense cap") {
  CHECK_THROWS_AS(analyze_graph(build_graph(2, 5), GraphKind::Full, {}, Limits{20000, 10}),
                  SizeCapExceeded);
}

TEST_CASE("q_eigen_exact_check") {
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= 8; ++n) {
      const auto r = q_eigen_exact_check(m, n);
      CHECK(r.passed());
      CHECK(r.checks.size() == static_cast<std::size_t>(n - 1));
    }
  CHECK_THROWS_AS(q_eigen_exact_check(2, 11), InvalidArgument);
}
