#include "doctest.h"

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "qws/dirac.hpp"
#include "qws/lattice.hpp"

using namespace qws;
using Complex = std::complex<double>;

namespace {

Eigen::MatrixXcd sigma2() {
  Eigen::MatrixXcd m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

}  // namespace

TEST_SUITE("dirac") {

TEST_CASE("one-dimensional blocks reduce to sigma_2") {
  auto odd = build_block_hamiltonian(1, Parity::odd);
  Eigen::MatrixXd k_expected(2, 2);
  k_expected << 0, 1, -1, 0;
  CHECK((odd.K - k_expected).cwiseAbs().maxCoeff() == 0.0);
  CHECK((odd.hamiltonian() + sigma2() / 2).cwiseAbs().maxCoeff() < 1e-15);

  // In the corner ordering with all coordinates flipped, the even block
  // reads +sigma_2/2.
  auto even = build_block_hamiltonian(1, Parity::even);
  Eigen::MatrixXcd flip(2, 2);
  flip << 0, 1, 1, 0;
  Eigen::MatrixXcd flipped = flip * even.hamiltonian() * flip;
  CHECK((flipped - sigma2() / 2).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("summands anticommute and square to -I") {
  for (int d = 2; d <= 6; ++d) {
    const Eigen::Index n = Eigen::Index{1} << d;
    for (int i = 1; i <= d; ++i) {
      auto ti = pauli_term(d, i);
      CHECK((ti * ti + Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-14);
      for (int j = i + 1; j <= d; ++j) {
        auto tj = pauli_term(d, j);
        CHECK((ti * tj + tj * ti).cwiseAbs().maxCoeff() < 1e-14);
      }
    }
  }
}

TEST_CASE("block Hamiltonian squares to (d/4) I") {
  for (int d = 1; d <= 7; ++d) {
    for (auto parity : {Parity::odd, Parity::even}) {
      auto h = build_block_hamiltonian(d, parity);
      const Eigen::Index n = Eigen::Index{1} << d;
      REQUIRE(h.K.rows() == n);
      // K^2 = -I is (H^B)^2 = (d/4) I in real form.
      CHECK((h.K * h.K + Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-13);
      CHECK((h.K + h.K.transpose()).cwiseAbs().maxCoeff() == 0.0);
      CHECK(std::abs(h.K.trace()) == 0.0);
    }
  }
  CHECK_THROWS_AS(build_block_hamiltonian(0, Parity::odd), std::invalid_argument);
}

TEST_CASE("eigenvalues are +-sqrt(d)/2 in equal number") {
  for (int d = 1; d <= 4; ++d) {
    auto h = build_block_hamiltonian(d, Parity::odd);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.hamiltonian());
    REQUIRE(es.info() == Eigen::Success);
    const double lam = std::sqrt(static_cast<double>(d)) / 2;
    const Eigen::Index n = Eigen::Index{1} << d;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double expected = i < n / 2 ? -lam : lam;
      CHECK(es.eigenvalues()[i] == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("rotation matrix") {
  const double s = 0.3;
  auto r = build_block_rotation(1, Parity::odd, s);
  const double c = std::sqrt(1 - s * s);
  Eigen::MatrixXd expected(2, 2);
  expected << c, s, -s, c;
  CHECK((r.U - expected).cwiseAbs().maxCoeff() < 1e-15);

  auto id = build_block_rotation(3, Parity::even, 0.0);
  CHECK((id.U - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(build_block_rotation(2, Parity::odd, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(build_block_rotation(2, Parity::odd, 1.1), std::invalid_argument);
}

TEST_CASE("rotations are orthogonal with eigenvalues c +- is") {
  const double s = 0.7;
  for (int d = 1; d <= 6; ++d) {
    for (auto parity : {Parity::odd, Parity::even}) {
      auto r = build_block_rotation(d, parity, s);
      const Eigen::Index n = r.U.rows();
      CHECK((r.U * r.U.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <
            1e-12);
      if (d <= 5) {
        CHECK(r.U.determinant() == doctest::Approx(1.0).epsilon(1e-10));
        // (U - cI)^2 = -s^2 I pins the spectrum to c +- is.
        Eigen::MatrixXd shifted = r.U - r.c * Eigen::MatrixXd::Identity(n, n);
        CHECK((shifted * shifted + s * s * Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <
              1e-12);
      }
    }
  }
}

TEST_CASE("rotation equals the matrix exponential of the block Hamiltonian") {
  const double s = 1.0 / std::sqrt(2.0);
  const int d = 3;
  auto h = build_block_hamiltonian(d, Parity::odd);
  auto r = build_block_rotation(d, Parity::odd, s);
  const double tau = 2 * std::asin(s) / std::sqrt(static_cast<double>(d));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.hamiltonian());
  REQUIRE(es.info() == Eigen::Success);
  Eigen::VectorXcd phases = (Complex(0, -tau) * es.eigenvalues().cast<Complex>()).array().exp();
  Eigen::MatrixXcd expm =
      es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

  CHECK((expm - r.U.cast<Complex>()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("link signs") {
  CHECK(link_sign({5, 3, 2}, 1) == 1);
  CHECK(link_sign({1, 0, 0}, 2) == -1);
  CHECK(link_sign({1, 1, 0}, 3) == 1);
  CHECK(link_sign({1, 2, 3, 0}, 4) == 1);
  CHECK(link_sign({1, 2, 2, 0}, 4) == -1);
  CHECK_THROWS_AS(link_sign({0, 0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(link_sign({0, 0}, 0), std::invalid_argument);
}

TEST_CASE("dense partition reproduces the one-dimensional formulas") {
  auto cfg = LatticeConfig::make(1, 4);
  auto ho = assemble_dense_partition(cfg, Parity::odd);
  auto he = assemble_dense_partition(cfg, Parity::even);

  // H_o |x> = -(i/2) (-1)^x |x + (-1)^x>
  Eigen::MatrixXcd ho_expected = Eigen::MatrixXcd::Zero(4, 4);
  Eigen::MatrixXcd he_expected = Eigen::MatrixXcd::Zero(4, 4);
  for (int x = 0; x < 4; ++x) {
    const int sign = x % 2 == 0 ? 1 : -1;
    ho_expected(((x + sign) + 4) % 4, x) = Complex(0, -0.5) * static_cast<double>(sign);
    he_expected(((x - sign) + 4) % 4, x) = Complex(0, 0.5) * static_cast<double>(sign);
  }
  CHECK((ho - ho_expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((he - he_expected).cwiseAbs().maxCoeff() < 1e-15);

  // Together they give the free Dirac action -(i/2)(|x+1> - |x-1>).
  Eigen::MatrixXcd sum = ho + he;
  for (int x = 0; x < 4; ++x) {
    CHECK(sum((x + 1) % 4, x) == Complex(0, -0.5));
    CHECK(sum((x + 3) % 4, x) == Complex(0, 0.5));
  }

  CHECK_THROWS_AS(assemble_dense_partition(LatticeConfig::make(4, 10), Parity::odd),
                  std::domain_error);
}

TEST_CASE("dense partition restricted to blocks matches the tensor construction") {
  for (auto [d, L] : {std::pair{1, 4}, {1, 6}, {2, 4}, {2, 6}, {3, 4}}) {
    auto cfg = LatticeConfig::make(d, L);
    for (auto parity : {Parity::odd, Parity::even}) {
      auto dense = assemble_dense_partition(cfg, parity);
      auto block = build_block_hamiltonian(d, parity).hamiltonian();
      const Eigen::Index n = Eigen::Index{1} << d;
      for (const auto& b : enumerate_blocks(parity, cfg)) {
        auto members = block_members(b, cfg);
        Eigen::MatrixXcd restricted(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
          for (Eigen::Index j = 0; j < n; ++j) restricted(i, j) = dense(members[i], members[j]);
        CHECK((restricted - block).cwiseAbs().maxCoeff() < 1e-14);
      }
      // Every off-diagonal entry of the dense matrix lives inside some block.
      Eigen::MatrixXcd scatter = dense;
      for (const auto& b : enumerate_blocks(parity, cfg)) {
        auto members = block_members(b, cfg);
        for (Eigen::Index i = 0; i < n; ++i)
          for (Eigen::Index j = 0; j < n; ++j) scatter(members[i], members[j]) = 0;
      }
      CHECK(scatter.cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

}  // TEST_SUITE
