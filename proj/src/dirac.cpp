#include "qws/dirac.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qws {

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

Eigen::MatrixXcd BlockHamiltonian::hamiltonian() const {
  const std::complex<double> scale(0.0, std::sqrt(static_cast<double>(d)) / 2.0);
  return scale * K;
}

Eigen::MatrixXd pauli_term(int d, int j) {
  if (d < 1 || j < 1 || j > d) throw std::invalid_argument("pauli_term: need 1 <= j <= d");
  Eigen::MatrixXd isigma2(2, 2), sigma3(2, 2);
  isigma2 << 0, 1, -1, 0;
  sigma3 << 1, 0, 0, -1;

  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(1, 1);
  for (int slot = d; slot >= 1; --slot) {
    if (slot > j)
      term = kron(term, Eigen::MatrixXd::Identity(2, 2));
    else if (slot == j)
      term = kron(term, isigma2);
    else
      term = kron(term, sigma3);
  }
  return term;
}

BlockHamiltonian build_block_hamiltonian(int d, Parity parity) {
  if (d < 1) throw std::invalid_argument("build_block_hamiltonian: d must be >= 1");
  const Eigen::Index n = Eigen::Index{1} << d;
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
  for (int j = 1; j <= d; ++j) K += pauli_term(d, j);
  K /= std::sqrt(static_cast<double>(d));

  if (parity == Parity::even) {
    // Even blocks are the odd matrix negated and conjugated by the
    // permutation complementing every corner bit.
    const Eigen::Index mask = n - 1;
    Eigen::MatrixXd Ke(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index q = 0; q < n; ++q) Ke(r, q) = -K(r ^ mask, q ^ mask);
    K = std::move(Ke);
  }
  return BlockHamiltonian{d, parity, std::move(K)};
}

BlockRotation build_block_rotation(int d, Parity parity, double s) {
  if (!(s >= 0.0 && s <= 1.0))
    throw std::invalid_argument("build_block_rotation: s must lie in [0, 1]");
  BlockHamiltonian h = build_block_hamiltonian(d, parity);
  const double c = std::sqrt(1.0 - s * s);
  const Eigen::Index n = h.K.rows();
  Eigen::MatrixXd U = c * Eigen::MatrixXd::Identity(n, n) + s * h.K;
  return BlockRotation{d, parity, s, c, std::move(U)};
}

int link_sign(const VertexCoords& x, int n) {
  if (n < 1 || n > static_cast<int>(x.size()))
    throw std::invalid_argument("link_sign: direction out of range");
  int sign = 1;
  for (int j = 0; j < n - 1; ++j)
    if (x[j] % 2 != 0) sign = -sign;
  return sign;
}

Eigen::MatrixXcd assemble_dense_partition(const LatticeConfig& cfg, Parity parity) {
  if (cfg.N > 4096)
    throw std::domain_error("assemble_dense_partition: dense path restricted to N <= 4096");
  const std::complex<double> half_i(0.0, 0.5);
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(cfg.N, cfg.N);
  for (Index from = 0; from < cfg.N; ++from) {
    VertexCoords x = coords_of_index(from, cfg);
    for (int n = 1; n <= cfg.d; ++n) {
      const Parity part = x[n - 1] % 2 == 0 ? Parity::odd : Parity::even;
      if (part != parity) continue;
      VertexCoords y = x;
      y[n - 1] = (y[n - 1] + 1) % cfg.L;
      const Index to = vertex_index(y, cfg);
      const double eta = link_sign(x, n);
      H(to, from) += -half_i * eta;
      H(from, to) += half_i * eta;
    }
  }
  return H;
}

}  // namespace qws
