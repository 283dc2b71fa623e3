#include "qws/refcheck.hpp"

#include <cmath>
#include <stdexcept>

#include "qws/dirac.hpp"

namespace qws {

namespace {

void check_dense_size(Index N) {
  if (N > 4096) throw std::domain_error("refcheck: dense path restricted to N <= 4096");
}

Eigen::MatrixXcd dense_half(const LatticeConfig& cfg, const WalkParams& params, Parity parity) {
  auto rot = build_block_rotation(cfg.d, parity, params.s);
  const Eigen::Index n = rot.U.rows();
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(cfg.N, cfg.N);
  for (const auto& block : enumerate_blocks(parity, cfg)) {
    auto members = block_members(block, cfg);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) U(members[i], members[j]) = rot.U(i, j);
  }
  return U;
}

}  // namespace

DenseOperator dense_walk(const LatticeConfig& cfg, const WalkParams& params) {
  check_dense_size(cfg.N);
  Eigen::MatrixXcd W = dense_half(cfg, params, Parity::even) * dense_half(cfg, params, Parity::odd);
  return DenseOperator{"W", std::move(W)};
}

DenseOperator dense_search_step(const LatticeConfig& cfg, const WalkParams& params,
                                const MarkedSet& marked) {
  check_dense_size(cfg.N);
  Eigen::MatrixXcd W = dense_walk(cfg, params).matrix;
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Identity(cfg.N, cfg.N);
  for (int t = 0; t < params.t1; ++t) S = W * S;
  for (Index v : marked.vertices) S.col(v) *= -1.0;
  return DenseOperator{"W^t1 R", std::move(S)};
}

DenseOperator grover_step(Index N, const std::vector<Index>& marked) {
  if (N < 2) throw std::invalid_argument("grover_step: need N >= 2");
  check_dense_size(N);
  const double n = static_cast<double>(N);
  Eigen::MatrixXcd G =
      Eigen::MatrixXcd::Constant(N, N, 2.0 / n) - Eigen::MatrixXcd::Identity(N, N);
  for (Index v : marked) {
    if (v < 0 || v >= N) throw std::invalid_argument("grover_step: marked item out of range");
    G.col(v) *= -1.0;
  }
  return DenseOperator{"GR", std::move(G)};
}

Eigen::Matrix2d grover_projection(Index N) {
  const double n = static_cast<double>(N);
  const double off = 2.0 / n * std::sqrt(n - 1.0);
  Eigen::Matrix2d proj;
  proj << 1.0 - 2.0 / n, off, -off, 1.0 - 2.0 / n;
  return proj;
}

}  // namespace qws
