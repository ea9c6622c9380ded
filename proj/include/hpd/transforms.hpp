#pragma once

#include <memory>

#include "hpd/cube.hpp"
#include "hpd/dvop.hpp"
#include "hpd/types.hpp"

namespace hpd {

// Vertices of the m-stretch m*Q_q: the cube vertices plus, for each edge,
// m-1 interior subdivision points. An interior point is written (j, k,
// alpha) for the point k steps from alpha along the edge {alpha,
// flip(alpha, j)}. Canonical form keeps alpha of even parity and
// 0 < k < m; counting from the other end gives the identification
// (j, k, alpha) = (j, m-k, flip(alpha, j)).
struct StretchedVertex {
  bool is_base = true;
  Vertex alpha = 0;
  int j = 0;
  int k = 0;

  static StretchedVertex base(Vertex a) { return {true, a, 0, 0}; }
  static StretchedVertex inner(int j, int k, Vertex a) { return {false, a, j, k}; }
  friend bool operator==(const StretchedVertex&, const StretchedVertex&) = default;
};

[[nodiscard]] StretchedVertex normalize_stretched(int m, const StretchedVertex& v);

// An embedding of m*Q_q into Q_target whose image edge set is one block of
// a decomposition. Evaluation normalizes first, so either representation
// of an interior point may be passed in.
class EmbeddingMap {
 public:
  EmbeddingMap() = default;
  EmbeddingMap(int m, int q, int target, std::function<Vertex(const StretchedVertex&)> eval)
      : m_(m), q_(q), target_(target), eval_(std::move(eval)) {}

  [[nodiscard]] int stretch() const { return m_; }
  [[nodiscard]] int source_dim() const { return q_; }
  [[nodiscard]] int target_dim() const { return target_; }

  Vertex operator()(const StretchedVertex& v) const;

 private:
  int m_ = 1;
  int q_ = 0;
  int target_ = 0;
  std::function<Vertex(const StretchedVertex&)> eval_;
};

// The trivial embedding of 1*Q_q = Q_q into itself.
[[nodiscard]] EmbeddingMap identity_map(int q);

// Odd m. gamma packs q even-parity m-bit blocks, block s at bits
// [s*m, (s+1)*m). A base vertex maps to its blow-up (each coordinate
// repeated m times) plus gamma; interior point k of an edge flips the
// first k bits of the varying block. m = 1 gives identity_map(q) up to
// the (then empty) gamma. The 2^((m-1)q) choices of gamma tile E(Q_{mq}).
[[nodiscard]] EmbeddingMap stretch_map_odd(int m, int q, Vertex gamma);

// Doubling: embeds 2*Q_q into Q_{2q} (low q bits first factor), with
// gamma in B_q and eps picking which edge endpoint parity lands in which
// factor. The 2 * 2^(q-1) maps tile E(Q_{2q}).
[[nodiscard]] EmbeddingMap stretch_map_two(int q, Vertex gamma, int eps);

// Doubling of an arbitrary embedding: from m*Q_q into Q_t build
// (2m)*Q_q into Q_{2t}. gamma ranges over B_t, eps over {0, 1}.
[[nodiscard]] EmbeddingMap double_stretch(EmbeddingMap inner, Vertex gamma, int eps);

// The full stretch family: 2^(mq - q) embeddings of m*Q_q whose images
// partition E(Q_{mq}). Factored as the odd part followed by doublings;
// emitted in a fixed nested order (odd gamma outermost).
void stretch_decomposition(int m, int q, const std::function<void(const EmbeddingMap&)>& sink);
[[nodiscard]] std::uint64_t stretch_family_size(int m, int q);

// Enumerates the edges of m*Q_q (as canonical vertex pairs) once each.
void for_each_stretched_edge(
    int m, int q,
    const std::function<void(const StretchedVertex&, const StretchedVertex&)>& sink);

// Vertices of the m-sharp m#Q_q: two copies of Q_q joined by a length-m
// path at every vertex. Rung position j = 0 is the first copy, j = m the
// second.
struct SharpVertex {
  Vertex beta = 0;
  int j = 0;

  static SharpVertex prime(Vertex b) { return {b, 0}; }
  static SharpVertex rung(Vertex b, int j) { return {b, j}; }
  friend bool operator==(const SharpVertex&, const SharpVertex&) = default;
};

// Embedding of m#Q_q into Q_{m+q} for odd m and gamma in B_m: rung
// position j maps to f_gamma(j) in the low m bits with beta above. The
// 2^(m-1) choices of gamma tile E(Q_{m+q}).
class SharpMap {
 public:
  SharpMap(int m, int q, Vertex gamma);

  [[nodiscard]] int rung_len() const { return m_; }
  [[nodiscard]] int source_dim() const { return q_; }
  [[nodiscard]] int target_dim() const { return m_ + q_; }

  Vertex operator()(const SharpVertex& v) const;

 private:
  int m_;
  int q_;
  Vertex gamma_;
};

[[nodiscard]] inline SharpMap sharp_map(int m, int q, Vertex gamma) {
  return SharpMap(m, q, gamma);
}

void for_each_sharp_edge(
    int m, int q, const std::function<void(const SharpVertex&, const SharpVertex&)>& sink);

// One concatenated path per vertex v of Q_q: the first system's path
// reversed into v, the rung across, the second system's path out.
// Length kA + m + kB.
[[nodiscard]] std::vector<SharpVertex> concat_dvop_path(
    int m, const PathEmbedding& path_a, const PathEmbedding& path_b);

// The per-vertex concatenation family on m#G together with the two
// complements, passed through untouched: whatever each system leaves
// uncovered in its copy of G.
struct SharpConcat {
  int q = 0;
  int m = 0;
  int path_len = 0;
  std::function<std::vector<SharpVertex>(Vertex)> path_of;
  std::vector<CycleRef> complement_first;
  std::vector<CycleRef> complement_second;
};

[[nodiscard]] SharpConcat concat_dvop_paths(int m, const Dvop& a, const Dvop& b);

}  // namespace hpd
