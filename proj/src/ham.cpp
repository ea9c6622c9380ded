#include "hpd/ham.hpp"

namespace hpd {

namespace {

// 2-bit Gray code and its inverse (it happens to be an involution).
constexpr Vertex kGray2[4] = {0, 1, 3, 2};
constexpr std::uint32_t kGray2Inv[4] = {0, 1, 3, 2};

void require_level(int r) {
  if (r < 1) throw InvalidParameter("cycle level must be positive");
  if (r > kMaxHamLevel)
    throw ResourceLimit("cycle positions exceed 64 bits beyond r=5");
}

void require_delta(int r, std::uint32_t delta) {
  if (r - 1 < 32 && (delta >> (r - 1)) != 0)
    throw InvalidIndex("cycle index needs exactly r-1 bits");
}

}  // namespace

Vertex g_eval(int r, std::uint32_t delta, std::uint64_t w) {
  require_level(r);
  require_delta(r, delta);
  w &= ham_cycle_length(r) - 1;
  if (r == 1) return kGray2[w];
  const int shift = 1 << (r - 1);          // bits per half, = position bits below
  const std::uint64_t nhalf = std::uint64_t{1} << shift;
  const std::uint64_t u = w >> shift;
  const std::uint64_t v = w & (nhalf - 1);
  const std::uint64_t diff = (v - u) & (nhalf - 1);
  const std::uint32_t rest = delta & ((std::uint32_t{1} << (r - 2)) - 1);
  Vertex first, second;
  if (((delta >> (r - 2)) & 1) == 0) {
    first = g_eval(r - 1, rest, diff);
    second = g_eval(r - 1, rest, u);
  } else {
    first = g_eval(r - 1, rest, u);
    second = g_eval(r - 1, rest, diff);
  }
  return first | (second << shift);
}

std::uint64_t g_inverse(int r, std::uint32_t delta, Vertex vertex) {
  require_level(r);
  require_delta(r, delta);
  require_vertex(1 << r, vertex);
  if (r == 1) return kGray2Inv[vertex];
  const int shift = 1 << (r - 1);
  const std::uint64_t nhalf = std::uint64_t{1} << shift;
  const Vertex first = vertex & (nhalf - 1);
  const Vertex second = vertex >> shift;
  const std::uint32_t rest = delta & ((std::uint32_t{1} << (r - 2)) - 1);
  std::uint64_t u, diff;
  if (((delta >> (r - 2)) & 1) == 0) {
    diff = g_inverse(r - 1, rest, first);
    u = g_inverse(r - 1, rest, second);
  } else {
    u = g_inverse(r - 1, rest, first);
    diff = g_inverse(r - 1, rest, second);
  }
  const std::uint64_t v = (diff + u) & (nhalf - 1);
  return (u << shift) | v;
}

Vertex advance(int r, std::uint32_t delta, Vertex v, int dir) {
  if (dir != 1 && dir != -1) throw InvalidParameter("advance direction must be +1 or -1");
  const std::uint64_t w = g_inverse(r, delta, v);
  return g_eval(r, delta, w + static_cast<std::uint64_t>(dir));
}

CycleEmbedding ham_cycle(int r, std::uint32_t delta) {
  require_level(r);
  require_delta(r, delta);
  if (r > kMaxHamMaterializeLevel)
    throw ResourceLimit("refusing to materialize a cycle of length 2^32");
  const std::uint64_t n = ham_cycle_length(r);
  CycleEmbedding c;
  c.q = 1 << r;
  c.verts.resize(n);
  // Walk the recursion once per position; n <= 65536 here.
  for (std::uint64_t w = 0; w < n; ++w) c.verts[w] = g_eval(r, delta, w);
  return c;
}

std::vector<CycleEmbedding> ham_decomposition(int r) {
  require_level(r);
  if (r > kMaxHamMaterializeLevel)
    throw ResourceLimit("refusing to materialize cycles of length 2^32");
  std::vector<CycleEmbedding> out;
  const std::uint32_t cycles = std::uint32_t{1} << (r - 1);
  out.reserve(cycles);
  for (std::uint32_t delta = 0; delta < cycles; ++delta)
    out.push_back(ham_cycle(r, delta));
  return out;
}

std::uint32_t rho1(Vertex v, int q) {
  require_dim(q);
  if (q % 2 != 0) throw InvalidParameter("1-values need an even dimension");
  require_vertex(q, v);
  std::uint32_t sum = 0;
  for (int i = 0; i < q; i += 2) sum += kGray2Inv[(v >> i) & 3];
  return sum & 3;
}

std::uint32_t rho2(Vertex v, int q) {
  require_dim(q);
  if (q % 4 != 0) throw InvalidParameter("2-values need a dimension divisible by 4");
  require_vertex(q, v);
  std::uint32_t sum = 0;
  for (int i = 0; i < q; i += 4)
    sum += static_cast<std::uint32_t>(g_inverse(2, 0, (v >> i) & 0xf));
  return sum & 15;
}

}  // namespace hpd
