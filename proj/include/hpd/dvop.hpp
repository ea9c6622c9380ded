#pragma once

#include "hpd/ham.hpp"
#include "hpd/types.hpp"

namespace hpd {

// A DVOP[k] on Q_d: one length-k path per vertex, starting at that vertex,
// with all d * 2^(d-1) path edge sets pairwise disjoint. The edges not on
// any path form the complement, stored as Hamiltonian cycle indices and
// expanded only when a consumer splits them. path_of is point-wise, so a
// Dvop on Q_32 is usable even though Q_32 can never be materialized.
struct Dvop {
  int dim = 0;
  int k = 0;
  std::function<PathEmbedding(Vertex)> path_of;
  std::vector<CycleRef> complement;
};

// k forward steps, one along each of the first k cycles of Q_{2^r} in
// increasing delta order. Needs k <= min(3, 2^(r-1)).
[[nodiscard]] Dvop dvop_basic(int r, int k);

// A DVOP[n] on Q_{2n} with empty complement. The path from (alpha, beta)
// climbs the monotone translate in the low factor when the vertex parity
// is even and in the high factor otherwise.
[[nodiscard]] Dvop dvop_half(int n);

// A DVOP[k] on Q_{2^r}, r >= 4, k <= 7: steps along cycles 1..7 in the
// direction pattern +,-,+,+,+,-,+. The 1-values along a full path read
// nu, nu+1, nu, nu+1, nu+2, nu+3, nu+2, nu+3 (mod 4).
[[nodiscard]] Dvop dvop_mid(int r, int k);

// A DVOP[k] on Q_{2^r}, r >= 5, k <= 15, alternating between the cycle
// families with first index bit 0 and 1. The 2-values along a full path
// read nu, nu+1, nu, nu+1, nu+2, nu+7, nu+2, nu+7, nu+4, nu+5, nu+4, nu+5,
// nu+6, nu+3, nu+6, nu+3 (mod 8).
[[nodiscard]] Dvop dvop_wide(int r, int k);

// Construction table for Q_{2^r}: basic for k <= min(3, 2^(r-1)), half for
// k == 2^(r-1), mid for r >= 4 and k <= 7, wide for r >= 5 and k <= 15.
// Throws Unsupported for anything else.
[[nodiscard]] Dvop dvop_for(int r, int k);

// The (delta, direction) pairs used by dvop_wide, exposed for the trace
// checks: entry i drives step i+1.
[[nodiscard]] std::vector<std::pair<std::uint32_t, int>> dvop_wide_steps();

}  // namespace hpd
