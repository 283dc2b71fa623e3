#include "qws/lattice.hpp"

#include <limits>
#include <stdexcept>

namespace qws {

LatticeConfig LatticeConfig::make(int d, int L) {
  if (d < 1) throw std::invalid_argument("lattice: dimension must be >= 1");
  if (L < 4 || L % 2 != 0)
    throw std::invalid_argument("lattice: side must be an even integer >= 4");
  Index n = 1;
  for (int j = 0; j < d; ++j) {
    if (n > std::numeric_limits<Index>::max() / L)
      throw std::invalid_argument("lattice: L^d overflows the index range");
    n *= L;
  }
  return LatticeConfig{d, L, n};
}

Index vertex_index(const VertexCoords& x, const LatticeConfig& cfg) {
  if (static_cast<int>(x.size()) != cfg.d)
    throw std::invalid_argument("vertex_index: coordinate count != d");
  Index idx = 0;
  Index stride = 1;
  for (int j = 0; j < cfg.d; ++j) {
    if (x[j] < 0 || x[j] >= cfg.L)
      throw std::invalid_argument("vertex_index: coordinate out of range");
    idx += stride * x[j];
    stride *= cfg.L;
  }
  return idx;
}

VertexCoords coords_of_index(Index idx, const LatticeConfig& cfg) {
  if (idx < 0 || idx >= cfg.N)
    throw std::invalid_argument("coords_of_index: index out of range");
  VertexCoords x(cfg.d);
  for (int j = 0; j < cfg.d; ++j) {
    x[j] = static_cast<int>(idx % cfg.L);
    idx /= cfg.L;
  }
  return x;
}

std::vector<BlockId> enumerate_blocks(Parity parity, const LatticeConfig& cfg) {
  const int shift = parity == Parity::odd ? 0 : 1;
  const int half = cfg.L / 2;
  Index count = 1;
  for (int j = 0; j < cfg.d; ++j) count *= half;

  std::vector<BlockId> blocks;
  blocks.reserve(count);
  VertexCoords base(cfg.d, shift);
  for (Index i = 0; i < count; ++i) {
    blocks.push_back(BlockId{parity, base});
    for (int j = 0; j < cfg.d; ++j) {
      base[j] += 2;
      if (base[j] < cfg.L) break;
      base[j] = shift;
    }
  }
  return blocks;
}

std::vector<Index> block_members(const BlockId& block, const LatticeConfig& cfg) {
  if (static_cast<int>(block.base.size()) != cfg.d)
    throw std::invalid_argument("block_members: base coordinate count != d");
  const int want = block.parity == Parity::odd ? 0 : 1;
  for (int j = 0; j < cfg.d; ++j) {
    if (block.base[j] < 0 || block.base[j] >= cfg.L || block.base[j] % 2 != want)
      throw std::invalid_argument("block_members: base parity mismatch");
  }

  const Index n_members = Index{1} << cfg.d;
  std::vector<Index> members(n_members);
  VertexCoords x(cfg.d);
  for (Index code = 0; code < n_members; ++code) {
    for (int j = 0; j < cfg.d; ++j) {
      int c = block.base[j] + ((code >> j) & 1);
      x[j] = c == cfg.L ? 0 : c;
    }
    members[code] = vertex_index(x, cfg);
  }
  return members;
}

}  // namespace qws
