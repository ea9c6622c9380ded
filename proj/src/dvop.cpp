#include "hpd/dvop.hpp"

#include <algorithm>

namespace hpd {

namespace {

std::vector<CycleRef> remaining_cycles(int r, const std::vector<std::uint32_t>& used) {
  std::vector<CycleRef> out;
  const std::uint32_t cycles = std::uint32_t{1} << (r - 1);
  for (std::uint32_t delta = 0; delta < cycles; ++delta)
    if (std::find(used.begin(), used.end(), delta) == used.end())
      out.push_back(CycleRef{r, delta});
  return out;
}

// Shared builder: step i+1 moves along cycle steps[i].first with direction
// steps[i].second.
Dvop steps_dvop(int r, int k, std::vector<std::pair<std::uint32_t, int>> steps) {
  Dvop d;
  d.dim = 1 << r;
  d.k = k;
  std::vector<std::uint32_t> used;
  for (int i = 0; i < k; ++i) used.push_back(steps[i].first);
  d.complement = remaining_cycles(r, used);
  d.path_of = [r, k, steps = std::move(steps)](Vertex v) {
    PathEmbedding p;
    p.q = 1 << r;
    require_vertex(p.q, v);
    p.verts.resize(k + 1);
    p.verts[0] = v;
    for (int i = 0; i < k; ++i)
      p.verts[i + 1] = advance(r, steps[i].first, p.verts[i], steps[i].second);
    return p;
  };
  return d;
}

}  // namespace

Dvop dvop_basic(int r, int k) {
  if (r < 1 || r > kMaxHamLevel) throw InvalidParameter("dvop_basic needs 1 <= r <= 5");
  if (k < 0 || k > 3 || k > (1 << (r - 1)))
    throw InvalidParameter("dvop_basic needs k <= min(3, 2^(r-1))");
  std::vector<std::pair<std::uint32_t, int>> steps;
  for (int i = 0; i < k; ++i) steps.emplace_back(static_cast<std::uint32_t>(i), 1);
  return steps_dvop(r, k, std::move(steps));
}

Dvop dvop_half(int n) {
  if (n < 1 || 2 * n > kMaxPointwiseDim) throw InvalidParameter("dvop_half needs 1 <= n <= 31");
  Dvop d;
  d.dim = 2 * n;
  d.k = n;
  d.path_of = [n](Vertex v) {
    require_vertex(2 * n, v);
    const Vertex lo = v & low_mask(n);
    const Vertex hi = v >> n;
    PathEmbedding p;
    p.q = 2 * n;
    p.verts.resize(n + 1);
    if (parity(v) == 0) {
      for (int j = 0; j <= n; ++j) p.verts[j] = (low_mask(j) ^ lo) | (hi << n);
    } else {
      for (int j = 0; j <= n; ++j) p.verts[j] = lo | ((low_mask(j) ^ hi) << n);
    }
    return p;
  };
  return d;
}

Dvop dvop_mid(int r, int k) {
  if (r < 4 || r > kMaxHamLevel) throw InvalidParameter("dvop_mid needs r in {4, 5}");
  if (k < 0 || k > 7) throw InvalidParameter("dvop_mid needs k <= 7");
  static constexpr int kDirs[7] = {1, -1, 1, 1, 1, -1, 1};
  std::vector<std::pair<std::uint32_t, int>> steps;
  for (int i = 0; i < k; ++i) steps.emplace_back(static_cast<std::uint32_t>(i), kDirs[i]);
  return steps_dvop(r, k, std::move(steps));
}

std::vector<std::pair<std::uint32_t, int>> dvop_wide_steps() {
  // Cycles with an even index form one family, odd index the other; h_i is
  // cycle 2(i-1), the barred variant 2(i-1)+1.
  auto h = [](int i) { return static_cast<std::uint32_t>(2 * (i - 1)); };
  auto hb = [](int i) { return static_cast<std::uint32_t>(2 * (i - 1) + 1); };
  return {
      {h(1), 1},  {h(2), -1},  {h(3), 1},  {h(4), 1},
      {hb(1), 1}, {hb(2), -1}, {hb(3), 1}, {hb(4), 1},
      {h(5), 1},  {h(6), -1},  {h(7), 1},  {h(8), 1},
      {hb(5), 1}, {hb(6), -1}, {hb(7), 1},
  };
}

Dvop dvop_wide(int r, int k) {
  if (r < 5 || r > kMaxHamLevel) throw InvalidParameter("dvop_wide needs r = 5");
  if (k < 0 || k > 15) throw InvalidParameter("dvop_wide needs k <= 15");
  auto steps = dvop_wide_steps();
  steps.resize(k);
  return steps_dvop(r, k, std::move(steps));
}

Dvop dvop_for(int r, int k) {
  if (r < 1 || r > kMaxHamLevel) throw InvalidParameter("dvop_for needs 1 <= r <= 5");
  if (k < 0) throw InvalidParameter("dvop_for needs k >= 0");
  const int half = 1 << (r - 1);
  if (k <= 3 && k <= half) return dvop_basic(r, k);
  if (k == half) return dvop_half(half);
  if (r >= 4 && k <= 7) return dvop_mid(r, k);
  if (r >= 5 && k <= 15) return dvop_wide(r, k);
  throw Unsupported("no DVOP[" + std::to_string(k) + "] construction on Q_" +
                    std::to_string(1 << r));
}

}  // namespace hpd
