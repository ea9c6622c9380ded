#pragma once

#include <bit>

#include "hpd/types.hpp"

namespace hpd {

// Point-wise formulas work for any q up to the word size; anything that
// walks all vertices or edges of Q_q goes through require_materializable.
inline constexpr int kMaxPointwiseDim = 63;
inline constexpr int kMaxMaterializeDim = 30;
inline constexpr std::uint64_t kDefaultMaxEdges = std::uint64_t{1} << 28;

[[nodiscard]] inline constexpr Vertex low_mask(int k) {
  return k >= 64 ? ~Vertex{0} : (Vertex{1} << k) - 1;
}

[[nodiscard]] inline constexpr std::uint64_t edge_count(int q) {
  // |E(Q_q)| = q * 2^(q-1)
  return q == 0 ? 0 : static_cast<std::uint64_t>(q) << (q - 1);
}

inline void require_dim(int q) {
  if (q < 0 || q > kMaxPointwiseDim)
    throw InvalidParameter("dimension out of range: q=" + std::to_string(q));
}

inline void require_coord(int q, int j) {
  if (j < 0 || j >= q)
    throw InvalidIndex("coordinate out of range: j=" + std::to_string(j) +
                       " for q=" + std::to_string(q));
}

inline void require_vertex(int q, Vertex v) {
  if (q < 64 && (v >> q) != 0)
    throw InvalidIndex("vertex label out of range for q=" + std::to_string(q));
}

inline void require_materializable(int q, std::uint64_t max_edges) {
  require_dim(q);
  if (q > kMaxMaterializeDim || edge_count(q) > max_edges)
    throw ResourceLimit("Q_" + std::to_string(q) +
                        " exceeds the materialization guard");
}

// Parity of a bit vector: sum of coordinates mod 2.
[[nodiscard]] inline int parity(Vertex v) { return std::popcount(v) & 1; }

// Flip coordinate j.
[[nodiscard]] inline Vertex flip(Vertex v, int j) { return v ^ (Vertex{1} << j); }

// Representative of the edge {v, flip(v, j)} with parity 0. Alters bit j
// only when needed; the two endpoints of an edge always have opposite
// parity, so exactly one of force_even/force_odd is the identity.
[[nodiscard]] inline Vertex force_even(Vertex v, int j) {
  return parity(v) ? flip(v, j) : v;
}

[[nodiscard]] inline Vertex force_odd(Vertex v, int j) {
  return parity(v) ? v : flip(v, j);
}

[[nodiscard]] inline EdgeRef edge_ref(Vertex v, int j) {
  return EdgeRef{v & ~(Vertex{1} << j), j};
}

// Injective over all edges of Q_q; the value is below q * 2^q.
[[nodiscard]] inline std::uint64_t edge_index(const EdgeRef& e, int q) {
  return e.base * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(e.coord);
}

// The gamma-translate of the monotone path 0^q, 10^(q-1), 110^(q-2), ..., 1^q.
// Vertex k is (2^k - 1) XOR gamma. Requires parity(gamma) == 0.
[[nodiscard]] PathEmbedding f_gamma(int q, Vertex gamma);

// Partition of E(Q_q) into the 2^(q-1) translates f_gamma, gamma even,
// in increasing order of gamma. Every path has length q.
[[nodiscard]] Decomposition base_partition(int q);

}  // namespace hpd
