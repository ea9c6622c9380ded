#pragma once

#include "hpd/cube.hpp"
#include "hpd/types.hpp"

namespace hpd {

// Hamiltonian cycles of Q_{2^r}, indexed by a bit vector delta of length
// r-1. Bit i-1 of `delta` holds d_i; the last bit d_{r-1} picks which of
// the two doubling formulas applies at the outermost level:
//
//   g_{delta 0}(N*u + v) = (g_delta(v - u), g_delta(u))
//   g_{delta 1}(N*u + v) = (g_delta(u), g_delta(v - u))
//
// with N = 2^(2^(r-1)), arithmetic on positions mod N, and the first tuple
// component stored in the low half of the output bits. The base cycle on
// Q_2 is the 2-bit reflected Gray code 0, 1, 3, 2.
//
// Positions fit in 64 bits only up to r = 5 (cycle length 2^32); larger r
// is rejected.

inline constexpr int kMaxHamLevel = 5;
inline constexpr int kMaxHamMaterializeLevel = 4;

struct CycleRef {
  int r = 0;
  std::uint32_t delta = 0;
};

// Number of positions on a level-r cycle: 2^(2^r).
[[nodiscard]] inline std::uint64_t ham_cycle_length(int r) {
  return std::uint64_t{1} << (1 << r);
}

// Vertex at position w (taken mod the cycle length) of cycle delta.
[[nodiscard]] Vertex g_eval(int r, std::uint32_t delta, std::uint64_t w);

// Position of `vertex` on cycle delta; inverse of g_eval.
[[nodiscard]] std::uint64_t g_inverse(int r, std::uint32_t delta, Vertex vertex);

// One step along cycle delta: g(g^{-1}(v) + dir) with dir = +1 or -1.
[[nodiscard]] Vertex advance(int r, std::uint32_t delta, Vertex v, int dir);

// The 2^(r-1) cycles indexed by delta partition E(Q_{2^r}).
[[nodiscard]] CycleEmbedding ham_cycle(int r, std::uint32_t delta);
[[nodiscard]] std::vector<CycleEmbedding> ham_decomposition(int r);

// 1-value of a vertex of Q_{2n}: the sum of the base-cycle positions of its
// 2-bit blocks, mod 4. Satisfies rho1(g_delta(w)) == w mod 4 for every
// level-r cycle.
[[nodiscard]] std::uint32_t rho1(Vertex v, int q);

// 2-value of a vertex of Q_{4n}: the sum of the g_0 positions of its 4-bit
// blocks, mod 16. Satisfies rho2(g_{0 delta}(w)) == w mod 16 and
// rho2(g_{1 delta}(w)) == 5 w mod 8.
[[nodiscard]] std::uint32_t rho2(Vertex v, int q);

}  // namespace hpd
