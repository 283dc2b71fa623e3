#pragma once

#include <Eigen/Dense>

#include "qws/lattice.hpp"

namespace qws {

// Block Hamiltonian of one parity class on a 2^d-corner elementary
// hypercube. H is purely imaginary Hermitian, so it is stored through its
// real antisymmetric companion K = -2i H / sqrt(d), which satisfies
// K^T = -K and K^2 = -I.
struct BlockHamiltonian {
  int d = 0;
  Parity parity = Parity::odd;
  Eigen::MatrixXd K;

  // H = (i sqrt(d) / 2) K, for reference checks in complex arithmetic.
  Eigen::MatrixXcd hamiltonian() const;
};

// Exact exponential U = exp(-i H tau) with s = sin(sqrt(d) tau / 2):
// a real rotation U = c I + s K, c = sqrt(1 - s^2).
struct BlockRotation {
  int d = 0;
  Parity parity = Parity::odd;
  double s = 0;
  double c = 1;
  Eigen::MatrixXd U;
};

// Summand j of the odd block Hamiltonian, times i to make it real:
// identity on slots above j, the real form of i*sigma_2 on slot j,
// sigma_3 on slots below j. Slot j acts on corner-code bit j-1.
// Each term squares to -I and distinct terms anticommute.
Eigen::MatrixXd pauli_term(int d, int j);

BlockHamiltonian build_block_hamiltonian(int d, Parity parity);
BlockRotation build_block_rotation(int d, Parity parity, double s);

// Staggered sign for direction n at vertex x: product of (-1)^(x_j)
// over j < n. Directions are 1-based; link_sign(x, 1) == +1.
int link_sign(const VertexCoords& x, int n);

// Full N x N Hamiltonian of one parity class, assembled link by link:
// direction-n link out of x carries <x+n|H|x> = -(i/2) link_sign(x, n) and
// belongs to the odd part iff x_n is even. Test support only; restricting
// it to a block's members must reproduce build_block_hamiltonian.
Eigen::MatrixXcd assemble_dense_partition(const LatticeConfig& cfg, Parity parity);

}  // namespace qws
