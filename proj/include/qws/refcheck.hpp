#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qws/evolve.hpp"
#include "qws/lattice.hpp"

namespace qws {

// Explicit N x N operator for small lattices; ground truth for the block
// kernel. Construction refuses N > 4096 to keep accidental dense use out of
// experiment scripts.
struct DenseOperator {
  std::string label;
  Eigen::MatrixXcd matrix;
};

// W = U_e U_o with the block rotations placed via block_members.
DenseOperator dense_walk(const LatticeConfig& cfg, const WalkParams& params);

// One search query, W^t1 R, as an explicit matrix.
DenseOperator dense_search_step(const LatticeConfig& cfg, const WalkParams& params,
                                const MarkedSet& marked);

// One Grover iteration G R with G = 2|s><s| - I on an unstructured set of
// N items.
DenseOperator grover_step(Index N, const std::vector<Index>& marked);

// Restriction of G R to the |s>, |s_perp> plane: the rotation by
// 2 asin(1/sqrt(N)).
Eigen::Matrix2d grover_projection(Index N);

}  // namespace qws
