#pragma once

#include <cstdint>
#include <vector>

namespace qws {

using Index = std::int64_t;

enum class Parity { odd, even };

inline const char* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

// d-dimensional periodic hypercubic lattice with N = L^d vertices.
// L must be even (bipartite block structure) and at least 4: with L=2 the
// two blocks sharing a link coincide under wraparound.
struct LatticeConfig {
  int d = 0;
  int L = 0;
  Index N = 0;

  static LatticeConfig make(int d, int L);
};

using VertexCoords = std::vector<int>;

// An elementary hypercube of one parity class, identified by its lowest
// corner. Odd blocks sit at all-even corners, even blocks at all-odd ones.
struct BlockId {
  Parity parity;
  VertexCoords base;
};

// Flat index: sum_j x_j * L^(j-1), dimension 1 fastest.
Index vertex_index(const VertexCoords& x, const LatticeConfig& cfg);
VertexCoords coords_of_index(Index idx, const LatticeConfig& cfg);

// All N / 2^d blocks of one parity, bases in lexicographic order
// (dimension 1 fastest).
std::vector<BlockId> enumerate_blocks(Parity parity, const LatticeConfig& cfg);

// The 2^d member vertices of a block, ordered by local corner code
// sum_j b_j 2^(j-1); member b sits at (base_j + b_j) mod L.
std::vector<Index> block_members(const BlockId& block, const LatticeConfig& cfg);

}  // namespace qws
