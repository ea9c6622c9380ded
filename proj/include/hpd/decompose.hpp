#pragma once

#include <memory>

#include "hpd/cube.hpp"
#include "hpd/types.hpp"

namespace hpd {

// P_m divides Q_q (q odd) exactly when m <= q and m divides q * 2^(q-1);
// since the odd part of m is coprime to the power of two, the latter is
// equivalent to odd_part(m) | q. Works for any 64-bit q, so the check
// never needs big integers.
[[nodiscard]] bool check_divisibility(std::uint64_t m, std::uint64_t q);

// Consecutive length-m arcs of a cycle, starting at position 0. Needs
// m | length(c).
[[nodiscard]] std::vector<PathEmbedding> split_cycle(const CycleEmbedding& c, int m);

// Product composition: D1 on the low q1 bits, translated by every vertex
// of the high factor, plus D2 on the high q2 bits translated by every
// vertex of the low factor. Path lengths must agree.
[[nodiscard]] Decomposition cartesian_combine(const Decomposition& d1,
                                              const Decomposition& d2);

// Hand-built partition of E(Q_3) into six paths of length 2: two inside
// the bottom square, and one outer edge paired with a matching edge at
// each of the four top vertices.
[[nodiscard]] Decomposition p2_in_q3();

// Every edge as a length-1 path.
[[nodiscard]] Decomposition trivial_partition(int q);

// Q_{2^r} into paths of length 2^t (t < 2^r), by splitting each of the
// 2^(r-1) Hamiltonian cycles.
[[nodiscard]] Decomposition split_ham_partition(int r, int t);

// How a decomposition will be produced, before anything is emitted. The
// tree is cheap to build and validate even where the target cube is far
// beyond anything materializable.
struct Plan {
  enum class Kind {
    Trivial,        // P_1: every edge on its own
    BasePartition,  // m == q: the translate family
    P2Q3,           // the hand-built P_2 | Q_3 base case
    PowerTwoBase,   // P_{2^t} | Q_{2^t + s} via the s-sharp of Q_{2^r}
    Stride,         // child on Q_{q - 2^r} combined with split cycles of Q_{2^r}
    GcdReduce,      // odd d = gcd(m, q): stretch a P_{m/d} | Q_{q/d} child
  };

  Kind kind = Kind::Trivial;
  std::int64_t m = 1;  // path length this node produces
  std::int64_t q = 1;  // target cube dimension
  // PowerTwoBase and Stride
  int t = 0;
  int s = 0;
  int r = 0;
  std::int64_t sharp_m = 0;
  int k_first = 0;
  int k_second = 0;
  // GcdReduce
  std::int64_t d = 0;
  std::shared_ptr<const Plan> child;
};

[[nodiscard]] std::shared_ptr<const Plan> plan_for(std::int64_t m, std::int64_t q);

// Structural soundness of a plan tree: parameter ranges, dimension
// bookkeeping, stride divisibility, and supported path-system sizes.
// Throws on the first violation.
void validate_plan(const Plan& plan);

[[nodiscard]] std::string plan_to_string(const Plan& plan);

// Runs a plan, streaming paths. Emission requires the target (and every
// intermediate cube) to fit under the edge guard.
[[nodiscard]] Decomposition execute_plan(const std::shared_ptr<const Plan>& plan,
                                         std::uint64_t max_edges = kDefaultMaxEdges);

// P_{2^t} decomposition of Q_q for odd q > 2^t (any q when t = 0).
[[nodiscard]] Decomposition power2_decompose(int t, int q,
                                             std::uint64_t max_edges = kDefaultMaxEdges);

// The main entry point: a certified-checkable partition of E(Q_q) into
// q * 2^(q-1) / m paths of length m, for odd q and any m passing
// check_divisibility.
[[nodiscard]] Decomposition decompose(std::int64_t m, std::int64_t q,
                                      std::uint64_t max_edges = kDefaultMaxEdges);

}  // namespace hpd
