#pragma once

#include <optional>

#include "hpd/cube.hpp"
#include "hpd/dvop.hpp"
#include "hpd/types.hpp"

namespace hpd {

enum class FailureKind { None, NonPath, WrongLength, DuplicateEdge, IncompleteCover };

[[nodiscard]] const char* failure_name(FailureKind kind);

struct Report {
  bool ok = true;
  std::uint64_t paths_seen = 0;
  std::uint64_t edges_seen = 0;
  FailureKind first_failure = FailureKind::None;
  std::string witness;   // what went wrong, with the offending labels
  bool sampled = false;  // true when only a random sample was checked
  std::uint64_t seed = 0;

  [[nodiscard]] std::string summary() const;
};

// Incremental checker for "these edge sets partition E(Q_q)". Keeps one
// bit per possible edge index, so the guard bounds the allocation.
class PartitionChecker {
 public:
  explicit PartitionChecker(int q, std::uint64_t max_edges = kDefaultMaxEdges);

  // All return false once a failure has been recorded; the first failure
  // wins and later input is ignored.
  bool add_path(const PathEmbedding& p, int expected_len);
  bool add_edge(Vertex a, Vertex b);
  bool add_cycle(const CycleEmbedding& c);

  // Final cover check: every edge of Q_q seen exactly once.
  Report finish();
  [[nodiscard]] const Report& report() const { return rep_; }

 private:
  bool fail(FailureKind kind, std::string witness);
  bool mark(EdgeRef e);

  int q_;
  std::vector<std::uint64_t> bits_;
  Report rep_;
};

// Checks a claimed decomposition independently of how it was produced:
// every block a simple path of the declared length, every edge of Q_q
// covered exactly once.
[[nodiscard]] Report verify_decomposition(const Decomposition& d,
                                          std::uint64_t max_edges = kDefaultMaxEdges);

struct DvopCheckOptions {
  std::uint64_t max_edges = kDefaultMaxEdges;
  std::uint64_t samples = 10000;                  // for cubes too big to sweep
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

// Exhaustive when the cube fits under the guard: per-vertex origination,
// simplicity, disjointness, and exact cover together with the complement
// cycles. Otherwise samples vertices and checks the per-path properties,
// reporting sampled = true.
[[nodiscard]] Report verify_dvop(const Dvop& d, const DvopCheckOptions& opts = {});

// Exhaustive backtracking search for a partition of E(Q_q) into simple
// length-m paths. Independent of every construction above; only for
// desk-size instances (q * 2^(q-1) <= 32).
[[nodiscard]] std::optional<std::vector<PathEmbedding>> brute_force_decompose(int q, int m);

}  // namespace hpd
