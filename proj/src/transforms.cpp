#include "hpd/transforms.hpp"

#include <bit>

namespace hpd {

namespace {

// Vertex i of the subdivided edge {alpha, flip(alpha, j)} in m*Q_q,
// walking away from alpha. alpha must have even parity.
StretchedVertex subdivision_point(int m, int j, Vertex alpha, int i) {
  if (i == 0) return StretchedVertex::base(alpha);
  if (i == m) return StretchedVertex::base(flip(alpha, j));
  return StretchedVertex::inner(j, i, alpha);
}

// x-th even-parity value of width m, in increasing order.
Vertex nth_even(Vertex x) { return (x << 1) | static_cast<Vertex>(parity(x)); }

}  // namespace

StretchedVertex normalize_stretched(int m, const StretchedVertex& v) {
  if (v.is_base) return v;
  if (v.k < 0 || v.k > m) throw InvalidIndex("subdivision step out of range");
  if (v.k == 0) return StretchedVertex::base(v.alpha);
  if (v.k == m) return StretchedVertex::base(flip(v.alpha, v.j));
  if (parity(v.alpha) != 0)
    return StretchedVertex::inner(v.j, m - v.k, flip(v.alpha, v.j));
  return v;
}

Vertex EmbeddingMap::operator()(const StretchedVertex& v) const {
  return eval_(normalize_stretched(m_, v));
}

EmbeddingMap identity_map(int q) {
  require_dim(q);
  return EmbeddingMap(1, q, q, [](const StretchedVertex& v) { return v.alpha; });
}

EmbeddingMap stretch_map_odd(int m, int q, Vertex gamma) {
  if (m < 1 || m % 2 == 0) throw InvalidParameter("stretch_map_odd needs odd m");
  if (q < 1) throw InvalidParameter("stretch_map_odd needs q >= 1");
  require_dim(m * q);
  require_vertex(m * q, gamma);
  for (int s = 0; s < q; ++s)
    if (parity((gamma >> (s * m)) & low_mask(m)) != 0)
      throw InvalidIndex("translate block with odd parity");
  return EmbeddingMap(m, q, m * q, [m, q, gamma](const StretchedVertex& v) {
    require_vertex(q, v.alpha);
    Vertex out = gamma;
    for (int s = 0; s < q; ++s)
      if ((v.alpha >> s) & 1) out ^= low_mask(m) << (s * m);
    if (!v.is_base) out ^= low_mask(v.k) << (v.j * m);
    return out;
  });
}

EmbeddingMap double_stretch(EmbeddingMap inner, Vertex gamma, int eps) {
  const int q1 = inner.target_dim();
  require_dim(2 * q1);
  require_vertex(q1, gamma);
  if (parity(gamma) != 0) throw InvalidIndex("doubling translate must have even parity");
  if (eps != 0 && eps != 1) throw InvalidParameter("eps must be 0 or 1");

  const int m1 = inner.stretch();
  const int q = inner.source_dim();
  auto pair_up = [q1, gamma](Vertex lo, Vertex hi) { return lo | ((hi ^ gamma) << q1); };
  // Image of the midpoint of edge {a, b} of Q_{q1}: the even-parity
  // endpoint goes to the factor chosen by eps.
  auto midpoint = [pair_up, eps](Vertex a, Vertex b) {
    const int j = std::countr_zero(a ^ b);
    const Vertex e0 = force_even(a, j);
    const Vertex e1 = flip(e0, j);
    return eps == 0 ? pair_up(e0, e1) : pair_up(e1, e0);
  };

  auto eval = [inner = std::move(inner), pair_up, midpoint, m1](const StretchedVertex& v) {
    if (v.is_base) {
      const Vertex b = inner(StretchedVertex::base(v.alpha));
      return pair_up(b, b);
    }
    // Position k along the doubled edge: even positions sit on the inner
    // stretch's subdivision, odd ones in the middle of one of its edges.
    const int t = v.k / 2;
    const Vertex a = inner(subdivision_point(m1, v.j, v.alpha, t));
    if (v.k % 2 == 0) return pair_up(a, a);
    const Vertex b = inner(subdivision_point(m1, v.j, v.alpha, t + 1));
    return midpoint(a, b);
  };
  return EmbeddingMap(2 * m1, q, 2 * q1, std::move(eval));
}

EmbeddingMap stretch_map_two(int q, Vertex gamma, int eps) {
  return double_stretch(identity_map(q), gamma, eps);
}

std::uint64_t stretch_family_size(int m, int q) {
  if (m < 1 || q < 1) throw InvalidParameter("stretch family needs m, q >= 1");
  require_dim(m * q);
  return std::uint64_t{1} << (m * q - q);
}

namespace {

void stretch_family(int m, int q, const std::function<void(const EmbeddingMap&)>& sink) {
  if (m % 2 == 1) {
    const int bits_per_block = m - 1;
    const std::uint64_t combos = std::uint64_t{1} << (bits_per_block * q);
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      Vertex gamma = 0;
      for (int s = 0; s < q; ++s) {
        const Vertex x = (idx >> (bits_per_block * s)) & low_mask(bits_per_block);
        gamma |= nth_even(x) << (s * m);
      }
      sink(stretch_map_odd(m, q, gamma));
    }
    return;
  }
  stretch_family(m / 2, q, [&](const EmbeddingMap& inner) {
    const int q1 = inner.target_dim();
    const Vertex end = Vertex{1} << q1;
    for (Vertex gamma = 0; gamma < end; ++gamma) {
      if (parity(gamma) != 0) continue;
      for (int eps = 0; eps < 2; ++eps) sink(double_stretch(inner, gamma, eps));
    }
  });
}

}  // namespace

void stretch_decomposition(int m, int q,
                           const std::function<void(const EmbeddingMap&)>& sink) {
  stretch_family_size(m, q);  // validates the ranges
  stretch_family(m, q, sink);
}

void for_each_stretched_edge(
    int m, int q,
    const std::function<void(const StretchedVertex&, const StretchedVertex&)>& sink) {
  require_materializable(q, kDefaultMaxEdges);
  const Vertex end = Vertex{1} << q;
  for (Vertex alpha = 0; alpha < end; ++alpha) {
    if (parity(alpha) != 0) continue;
    for (int j = 0; j < q; ++j)
      for (int t = 1; t <= m; ++t)
        sink(subdivision_point(m, j, alpha, t - 1), subdivision_point(m, j, alpha, t));
  }
}

SharpMap::SharpMap(int m, int q, Vertex gamma) : m_(m), q_(q), gamma_(gamma) {
  if (m < 1 || m % 2 == 0) throw InvalidParameter("sharp_map needs odd m");
  if (q < 1) throw InvalidParameter("sharp_map needs q >= 1");
  require_dim(m + q);
  require_vertex(m, gamma);
  if (parity(gamma) != 0) throw InvalidIndex("sharp translate must have even parity");
}

Vertex SharpMap::operator()(const SharpVertex& v) const {
  if (v.j < 0 || v.j > m_) throw InvalidIndex("rung position out of range");
  require_vertex(q_, v.beta);
  return (low_mask(v.j) ^ gamma_) | (v.beta << m_);
}

void for_each_sharp_edge(
    int m, int q, const std::function<void(const SharpVertex&, const SharpVertex&)>& sink) {
  require_materializable(q, kDefaultMaxEdges);
  const Vertex end = Vertex{1} << q;
  for (Vertex beta = 0; beta < end; ++beta) {
    for (int j = 0; j < q; ++j) {
      if ((beta >> j) & 1) continue;
      sink(SharpVertex{beta, 0}, SharpVertex{flip(beta, j), 0});
      sink(SharpVertex{beta, m}, SharpVertex{flip(beta, j), m});
    }
    for (int t = 1; t <= m; ++t) sink(SharpVertex{beta, t - 1}, SharpVertex{beta, t});
  }
}

std::vector<SharpVertex> concat_dvop_path(int m, const PathEmbedding& path_a,
                                          const PathEmbedding& path_b) {
  if (m < 1) throw InvalidParameter("rung length must be positive");
  if (path_a.verts.empty() || path_b.verts.empty() ||
      path_a.verts.front() != path_b.verts.front())
    throw InvalidParameter("path systems must start at the same vertex");
  const Vertex v = path_a.verts.front();
  std::vector<SharpVertex> out;
  out.reserve(path_a.verts.size() + m - 1 + path_b.verts.size());
  for (auto it = path_a.verts.rbegin(); it != path_a.verts.rend(); ++it)
    out.push_back(SharpVertex{*it, 0});
  for (int t = 1; t < m; ++t) out.push_back(SharpVertex{v, t});
  for (Vertex x : path_b.verts) out.push_back(SharpVertex{x, m});
  return out;
}

SharpConcat concat_dvop_paths(int m, const Dvop& a, const Dvop& b) {
  if (a.dim != b.dim) throw InvalidParameter("path systems must live on the same cube");
  SharpConcat out;
  out.q = a.dim;
  out.m = m;
  out.path_len = a.k + m + b.k;
  out.path_of = [m, pa = a.path_of, pb = b.path_of](Vertex v) {
    return concat_dvop_path(m, pa(v), pb(v));
  };
  out.complement_first = a.complement;
  out.complement_second = b.complement;
  return out;
}

}  // namespace hpd
