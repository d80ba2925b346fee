#include "pacat/special_functions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "support/fock_oracle.hpp"

using namespace pacat;

TEST(special_functions, laguerre_examples) {
  EXPECT_EQ(laguerre(0, 3.7), 1.0);
  EXPECT_EQ(laguerre(1, -1.0), 2.0);
  EXPECT_NEAR(laguerre(2, 1.0), static_cast<double>(oracle::laguerre_series(2, 0, 1.0L)), 1e-15);
  EXPECT_NEAR(laguerre(2, 1.0), -0.5, 1e-15);
}

TEST(special_functions, assoc_laguerre_examples) {
  for (int m = 0; m <= 8; ++m) {
    for (double x : {-2.5, 0.0, 0.3, 4.0}) EXPECT_EQ(assoc_laguerre(m, 0, x), laguerre(m, x));
    EXPECT_NEAR(assoc_laguerre(m, 2, 0.0), (m + 2.0) * (m + 1.0) / 2.0, 1e-12);
  }
  EXPECT_NEAR(assoc_laguerre(1, 1, 1.0), 1.0, 1e-15);
}

TEST(special_functions, rejects_non_finite_arguments) {
  EXPECT_THROW(laguerre(3, std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(assoc_laguerre(2, 1, std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_THROW(assoc_laguerre(2, 1, cplx(0.0, std::numeric_limits<double>::infinity())), DomainError);
  EXPECT_THROW(assoc_laguerre(-1, 0, 1.0), DomainError);
}

TEST(special_functions, recurrence_matches_series) {
  for (int m = 0; m <= 12; ++m) {
    for (int k = 0; k <= 4; ++k) {
      for (double x = -25.0; x <= 25.0; x += 0.5) {
        const long double expected = oracle::laguerre_series(m, k, x);
        const double got = assoc_laguerre(m, k, x);
        const double scale = std::max(1.0L, std::abs(expected));
        EXPECT_NEAR(got, static_cast<double>(expected), 1e-10 * scale) << "m=" << m << " k=" << k << " x=" << x;
      }
    }
  }
}

TEST(special_functions, contiguity_identity) {
  for (int m = 1; m <= 12; ++m) {
    for (int k = 0; k <= 4; ++k) {
      for (double x = -10.0; x <= 10.0; x += 0.25) {
        const double lhs = assoc_laguerre(m, k, x);
        const double rhs = assoc_laguerre(m, k + 1, x) - assoc_laguerre(m - 1, k + 1, x);
        EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, std::abs(lhs)));
      }
    }
  }
}

TEST(special_functions, complex_argument_agrees_with_real_axis) {
  for (int m = 0; m <= 10; ++m) {
    const cplx z = assoc_laguerre(m, 1, cplx(2.3, 0.0));
    EXPECT_NEAR(z.real(), assoc_laguerre(m, 1, 2.3), 1e-13);
    EXPECT_EQ(z.imag(), 0.0);
  }
  // L_2(z) = (z² − 4z + 2)/2
  const cplx z(0.7, -1.1);
  const cplx expected = (z * z - 4.0 * z + 2.0) / 2.0;
  EXPECT_LT(std::abs(laguerre(2, z) - expected), 1e-15);
}

TEST(special_functions, log_factorial) {
  EXPECT_EQ(log_factorial(0), 0.0);
  EXPECT_EQ(log_factorial(1), 0.0);
  EXPECT_NEAR(log_factorial(5), std::log(120.0), 1e-14);
  double previous = 0.0;
  for (int n = 0; n < 2000; ++n) {
    const double v = log_factorial(n);
    EXPECT_GE(v, previous);
    EXPECT_NEAR(v, std::lgamma(n + 1.0), 1e-9 * std::max(1.0, v));
    previous = v;
  }
  EXPECT_THROW(log_factorial(-1), DomainError);
}

TEST(special_functions, displacement_examples) {
  for (int n = 0; n < 5; ++n)
    for (int p = 0; p < 5; ++p) EXPECT_EQ(displacement_matrix_element(n, p, cplx(0.0)), n == p ? cplx(1.0) : cplx(0.0));
  const cplx beta(0.6, -1.2);
  EXPECT_LT(std::abs(displacement_matrix_element(0, 0, beta) - std::exp(-0.5 * std::norm(beta))), 1e-15);
  EXPECT_NEAR(displacement_matrix_element(1, 0, cplx(1.0)).real(), std::exp(-0.5), 1e-15);
}

TEST(special_functions, displacement_matches_matrix_exponential) {
  const int dim = 30;
  for (cplx beta : {cplx(1.0, 0.0), cplx(0.4, 0.9), cplx(-1.1, -0.3)}) {
    const Eigen::MatrixXcd d = oracle::displacement_by_expm(beta, dim);
    // Entries far from the truncation edge are unaffected by it.
    for (int n = 0; n < 12; ++n)
      for (int p = 0; p < 12; ++p)
        EXPECT_LT(std::abs(displacement_matrix_element(n, p, beta) - d(n, p)), 1e-10) << n << "," << p;
  }
}

TEST(special_functions, displacement_unitarity) {
  const int cutoff = 40;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> mag(0.0, 2.0), ang(0.0, kTwoPi);
  for (int trial = 0; trial < 6; ++trial) {
    const cplx beta = std::polar(mag(rng), ang(rng));
    Eigen::MatrixXcd d(cutoff + 1, cutoff + 1), dinv(cutoff + 1, cutoff + 1);
    for (int n = 0; n <= cutoff; ++n)
      for (int p = 0; p <= cutoff; ++p) {
        d(n, p) = displacement_matrix_element(n, p, beta);
        dinv(n, p) = displacement_matrix_element(n, p, -beta);
      }
    for (int p = 0; p <= cutoff; ++p) EXPECT_LE(d.col(p).norm(), 1.0 + 1e-12);
    const Eigen::MatrixXcd product = d * dinv;
    const int block = 15;
    EXPECT_LT((product.topLeftCorner(block, block) - Eigen::MatrixXcd::Identity(block, block)).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(special_functions, displacement_finite_at_high_photon_number) {
  const cplx beta(3.0, 1.0);
  for (int n = 150; n <= 200; n += 10) {
    const cplx v = displacement_matrix_element(n, n - 3, beta);
    EXPECT_TRUE(std::isfinite(v.real()) && std::isfinite(v.imag()));
    EXPECT_LE(std::abs(v), 1.0);
  }
}
