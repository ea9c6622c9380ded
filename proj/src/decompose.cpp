#include "hpd/decompose.hpp"

#include <bit>
#include <numeric>
#include <sstream>

#include "hpd/dvop.hpp"
#include "hpd/ham.hpp"
#include "hpd/transforms.hpp"

namespace hpd {

bool check_divisibility(std::uint64_t m, std::uint64_t q) {
  if (q == 0 || q % 2 == 0) throw InvalidParameter("the ambient dimension must be odd");
  if (m == 0) throw InvalidParameter("the path length must be positive");
  if (m > q) return false;
  const std::uint64_t odd_part = m >> std::countr_zero(m);
  return q % odd_part == 0;
}

std::vector<PathEmbedding> split_cycle(const CycleEmbedding& c, int m) {
  const std::uint64_t n = c.verts.size();
  if (m < 1 || n == 0 || n % static_cast<std::uint64_t>(m) != 0)
    throw InvalidParameter("arc length must divide the cycle length");
  std::vector<PathEmbedding> out;
  out.reserve(n / m);
  for (std::uint64_t start = 0; start < n; start += m) {
    PathEmbedding p;
    p.q = c.q;
    p.verts.resize(m + 1);
    for (int l = 0; l <= m; ++l) p.verts[l] = c.verts[(start + l) % n];
    out.push_back(std::move(p));
  }
  return out;
}

Decomposition cartesian_combine(const Decomposition& d1, const Decomposition& d2) {
  if (d1.path_len() != d2.path_len())
    throw InvalidParameter("combined decompositions must share the path length");
  const int q1 = d1.dim();
  const int q2 = d2.dim();
  require_dim(q1 + q2);
  const std::uint64_t count =
      (std::uint64_t{1} << q2) * d1.path_count() + (std::uint64_t{1} << q1) * d2.path_count();
  auto gen = [d1, d2, q1, q2](const Decomposition::Sink& sink) {
    PathEmbedding buf;
    buf.q = q1 + q2;
    for (Vertex y = 0; y < (Vertex{1} << q2); ++y) {
      const Vertex offset = y << q1;
      d1.for_each([&](const PathEmbedding& p) {
        buf.verts.resize(p.verts.size());
        for (std::size_t i = 0; i < p.verts.size(); ++i) buf.verts[i] = p.verts[i] | offset;
        sink(buf);
      });
    }
    for (Vertex x = 0; x < (Vertex{1} << q1); ++x) {
      d2.for_each([&](const PathEmbedding& p) {
        buf.verts.resize(p.verts.size());
        for (std::size_t i = 0; i < p.verts.size(); ++i) buf.verts[i] = x | (p.verts[i] << q1);
        sink(buf);
      });
    }
  };
  return Decomposition(q1 + q2, d1.path_len(), count, std::move(gen));
}

Decomposition p2_in_q3() {
  // Bottom square split into two paths, then each top-square edge paired
  // with the matching edge at its first endpoint.
  static constexpr Vertex kPaths[6][3] = {
      {1, 0, 2}, {2, 3, 1}, {0, 4, 5}, {1, 5, 7}, {3, 7, 6}, {2, 6, 4},
  };
  return Decomposition(3, 2, 6, [](const Decomposition::Sink& sink) {
    PathEmbedding buf;
    buf.q = 3;
    for (const auto& verts : kPaths) {
      buf.verts.assign(verts, verts + 3);
      sink(buf);
    }
  });
}

Decomposition trivial_partition(int q) {
  if (q < 1) throw InvalidParameter("trivial_partition needs q >= 1");
  require_materializable(q, kDefaultMaxEdges);
  return Decomposition(q, 1, edge_count(q), [q](const Decomposition::Sink& sink) {
    PathEmbedding buf;
    buf.q = q;
    buf.verts.resize(2);
    for (Vertex v = 0; v < (Vertex{1} << q); ++v)
      for (int j = 0; j < q; ++j) {
        if ((v >> j) & 1) continue;
        buf.verts[0] = v;
        buf.verts[1] = flip(v, j);
        sink(buf);
      }
  });
}

Decomposition split_ham_partition(int r, int t) {
  if (r < 1 || r > kMaxHamMaterializeLevel)
    throw ResourceLimit("cycle splitting needs 1 <= r <= 4");
  if (t < 0 || t >= (1 << r))
    throw InvalidParameter("arc length 2^t must divide the cycle length");
  const int q = 1 << r;
  const int m = 1 << t;
  const std::uint64_t cycles = std::uint64_t{1} << (r - 1);
  const std::uint64_t arcs = ham_cycle_length(r) >> t;
  auto gen = [r, m](const Decomposition::Sink& sink) {
    for (std::uint32_t delta = 0; delta < (std::uint32_t{1} << (r - 1)); ++delta) {
      const CycleEmbedding c = ham_cycle(r, delta);
      for (const PathEmbedding& p : split_cycle(c, m)) sink(p);
    }
  };
  return Decomposition(q, m, cycles * arcs, std::move(gen));
}

namespace {

std::shared_ptr<const Plan> plan_power2(int t, std::int64_t q);

std::shared_ptr<const Plan> make_plan(Plan p) {
  return std::make_shared<const Plan>(std::move(p));
}

// (k_first, k_second) for the sharp base on Q_{2^r} with offset s.
std::pair<int, int> sharp_base_kpair(int r, int s) {
  if (r == 2) return s == 1 ? std::pair{2, 1} : std::pair{1, 0};
  const int half = 1 << (r - 1);
  const int k_first = s < half ? half : 0;
  return {k_first, (1 << r) - s - k_first};
}

std::shared_ptr<const Plan> plan_power2(int t, std::int64_t q) {
  if (t == 0) {
    Plan p;
    p.kind = Plan::Kind::Trivial;
    p.m = 1;
    p.q = q;
    return make_plan(std::move(p));
  }
  if (t >= 32) throw Unsupported("no construction for path lengths of 2^32 or more");
  if (t == 1 && q == 3) {
    Plan p;
    p.kind = Plan::Kind::P2Q3;
    p.m = 2;
    p.q = 3;
    return make_plan(std::move(p));
  }
  const int r = t == 1 ? 1 : std::bit_width(static_cast<unsigned>(t));
  const std::int64_t stride = std::int64_t{1} << r;
  const std::int64_t p2t = std::int64_t{1} << t;
  const int s = static_cast<int>((q - p2t - 1) % stride) + 1;
  Plan p;
  p.m = p2t;
  p.q = q;
  p.t = t;
  p.r = r;
  if (t >= 2 && q == p2t + s) {
    p.kind = Plan::Kind::PowerTwoBase;
    p.s = s;
    p.sharp_m = q - stride;
    const auto [ka, kb] = sharp_base_kpair(r, s);
    p.k_first = ka;
    p.k_second = kb;
  } else {
    p.kind = Plan::Kind::Stride;
    p.child = plan_power2(t, q - stride);
  }
  return make_plan(std::move(p));
}

}  // namespace

std::shared_ptr<const Plan> plan_for(std::int64_t m, std::int64_t q) {
  if (m < 1 || q < 1) throw InvalidParameter("path length and dimension must be positive");
  if (!check_divisibility(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(q)))
    throw NotDivisible("P_" + std::to_string(m) + " does not divide Q_" + std::to_string(q));
  if (m == q) {
    Plan p;
    p.kind = Plan::Kind::BasePartition;
    p.m = m;
    p.q = q;
    return make_plan(std::move(p));
  }
  const std::int64_t d = std::gcd(m, q);
  const std::int64_t m_inner = m / d;
  const int t = std::countr_zero(static_cast<std::uint64_t>(m_inner));
  if (d == 1) return plan_power2(t, q);
  Plan p;
  p.kind = Plan::Kind::GcdReduce;
  p.m = m;
  p.q = q;
  p.d = d;
  p.child = plan_power2(t, q / d);
  return make_plan(std::move(p));
}

void validate_plan(const Plan& plan) {
  auto fail = [](const std::string& what) { throw InvalidParameter("malformed plan: " + what); };
  if (plan.m < 1 || plan.q < 1 || plan.q % 2 == 0) fail("bad target shape");
  switch (plan.kind) {
    case Plan::Kind::Trivial:
      if (plan.m != 1) fail("trivial node with m != 1");
      break;
    case Plan::Kind::BasePartition:
      if (plan.m != plan.q) fail("translate family needs m == q");
      break;
    case Plan::Kind::P2Q3:
      if (plan.m != 2 || plan.q != 3) fail("hand base case is P_2 on Q_3");
      break;
    case Plan::Kind::PowerTwoBase: {
      if (plan.t < 2 || plan.t > 31) fail("sharp base exponent out of range");
      if (plan.r != std::bit_width(static_cast<unsigned>(plan.t))) fail("wrong cube level");
      if (plan.r < 2 || plan.r > 5) fail("cube level out of range");
      if (plan.m != (std::int64_t{1} << plan.t)) fail("m is not 2^t");
      if (plan.s % 2 != 1 || plan.s < 1 || plan.s >= (1 << plan.r)) fail("offset not odd");
      if (plan.q != plan.m + plan.s) fail("dimension mismatch at sharp base");
      if (plan.sharp_m != plan.q - (1 << plan.r) || plan.sharp_m < 1 || plan.sharp_m % 2 == 0)
        fail("bad rung length");
      if (plan.k_first + plan.k_second + plan.s != (1 << plan.r))
        fail("path pieces do not add up to 2^t");
      // both path systems must exist on Q_{2^r}
      (void)dvop_for(plan.r, plan.k_first);
      (void)dvop_for(plan.r, plan.k_second);
      break;
    }
    case Plan::Kind::Stride: {
      if (plan.t < 1 || plan.t > 31) fail("stride exponent out of range");
      if (plan.r < 1 || plan.r > 5) fail("stride level out of range");
      if (plan.t >= (1 << plan.r)) fail("arc length does not divide the stride cycles");
      if (plan.m != (std::int64_t{1} << plan.t)) fail("m is not 2^t");
      if (!plan.child) fail("stride without child");
      if (plan.child->m != plan.m) fail("stride child path length mismatch");
      if (plan.child->q != plan.q - (std::int64_t{1} << plan.r)) fail("stride dimensions");
      validate_plan(*plan.child);
      break;
    }
    case Plan::Kind::GcdReduce: {
      if (plan.d < 3 || plan.d % 2 == 0) fail("reduction factor must be odd and > 1");
      if (plan.m % plan.d != 0 || plan.q % plan.d != 0) fail("factor divides neither side");
      if (!plan.child) fail("reduction without child");
      if (plan.child->m != plan.m / plan.d || plan.child->q != plan.q / plan.d)
        fail("reduction child shape");
      validate_plan(*plan.child);
      break;
    }
  }
}

std::string plan_to_string(const Plan& plan) {
  std::ostringstream os;
  switch (plan.kind) {
    case Plan::Kind::Trivial:
      os << "edges(q=" << plan.q << ")";
      break;
    case Plan::Kind::BasePartition:
      os << "translates(q=" << plan.q << ")";
      break;
    case Plan::Kind::P2Q3:
      os << "p2_in_q3";
      break;
    case Plan::Kind::PowerTwoBase:
      os << "sharp_base(m=" << plan.m << ", q=" << plan.q << ", rung=" << plan.sharp_m
         << "#Q_" << (1 << plan.r) << ", k=" << plan.k_first << "+" << plan.k_second << ")";
      break;
    case Plan::Kind::Stride:
      os << "stride(Q_" << (1 << plan.r) << " x " << plan_to_string(*plan.child) << ")";
      break;
    case Plan::Kind::GcdReduce:
      os << "stretch(d=" << plan.d << ", " << plan_to_string(*plan.child) << ")";
      break;
  }
  return os.str();
}

namespace {

Decomposition execute_sharp_base(const Plan& plan) {
  const int q = static_cast<int>(plan.q);
  const int m = static_cast<int>(plan.sharp_m);
  const int base_dim = 1 << plan.r;
  const Dvop first = dvop_for(plan.r, plan.k_first);
  const Dvop second = dvop_for(plan.r, plan.k_second);
  const SharpConcat cc = concat_dvop_paths(m, first, second);
  const std::uint64_t base_verts = std::uint64_t{1} << base_dim;
  const std::uint64_t arcs = ham_cycle_length(plan.r) >> plan.t;
  const std::uint64_t comp_cycles = cc.complement_first.size() + cc.complement_second.size();
  const std::uint64_t per_copy = base_verts + comp_cycles * arcs;
  const std::uint64_t copies = std::uint64_t{1} << (m - 1);
  const int path_len = static_cast<int>(plan.m);

  auto gen = [q, m, base_dim, cc, path_len](const Decomposition::Sink& sink) {
    PathEmbedding buf;
    buf.q = q;
    for (Vertex gamma = 0; gamma < (Vertex{1} << m); ++gamma) {
      if (parity(gamma) != 0) continue;
      const SharpMap map(m, base_dim, gamma);
      for (Vertex v = 0; v < (Vertex{1} << base_dim); ++v) {
        const std::vector<SharpVertex> path = cc.path_of(v);
        buf.verts.resize(path.size());
        for (std::size_t i = 0; i < path.size(); ++i) buf.verts[i] = map(path[i]);
        sink(buf);
      }
      // Whatever the two path systems leave uncovered is a set of
      // Hamiltonian cycles; their arcs complete the copy.
      buf.verts.resize(path_len + 1);
      for (int side = 0; side < 2; ++side) {
        const auto& comp = side == 0 ? cc.complement_first : cc.complement_second;
        const int rung_pos = side == 0 ? 0 : m;
        for (const CycleRef& ref : comp) {
          const CycleEmbedding cyc = ham_cycle(ref.r, ref.delta);
          const std::uint64_t n = cyc.verts.size();
          for (std::uint64_t start = 0; start < n; start += path_len) {
            for (int l = 0; l <= path_len; ++l)
              buf.verts[l] = map(SharpVertex{cyc.verts[(start + l) % n], rung_pos});
            sink(buf);
          }
        }
      }
    }
  };
  return Decomposition(q, path_len, copies * per_copy, std::move(gen));
}

Decomposition execute_stretch(const Plan& plan, const Decomposition& child) {
  const int d = static_cast<int>(plan.d);
  const int q_inner = child.dim();
  const int q = static_cast<int>(plan.q);
  const int bits_per_block = d - 1;
  const std::uint64_t combos = std::uint64_t{1} << (bits_per_block * q_inner);
  const std::uint64_t count = combos * child.path_count();
  const int path_len = static_cast<int>(plan.m);

  auto gen = [d, q, q_inner, bits_per_block, combos, child,
              path_len](const Decomposition::Sink& sink) {
    PathEmbedding buf;
    buf.q = q;
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      Vertex gamma = 0;
      for (int s = 0; s < q_inner; ++s) {
        const Vertex x = (idx >> (bits_per_block * s)) & low_mask(bits_per_block);
        gamma |= ((x << 1) | static_cast<Vertex>(parity(x))) << (s * d);
      }
      const EmbeddingMap map = stretch_map_odd(d, q_inner, gamma);
      child.for_each([&](const PathEmbedding& p) {
        buf.verts.clear();
        buf.verts.reserve(path_len + 1);
        buf.verts.push_back(map(StretchedVertex::base(p.verts[0])));
        for (int i = 0; i + 1 < static_cast<int>(p.verts.size()); ++i) {
          const Vertex a = p.verts[i];
          const Vertex b = p.verts[i + 1];
          const int j = std::countr_zero(a ^ b);
          // Interior points are emitted in walking order, which depends on
          // which endpoint carries the even parity.
          if (parity(a) == 0) {
            for (int k = 1; k < d; ++k)
              buf.verts.push_back(map(StretchedVertex::inner(j, k, a)));
          } else {
            for (int k = d - 1; k >= 1; --k)
              buf.verts.push_back(map(StretchedVertex::inner(j, k, b)));
          }
          buf.verts.push_back(map(StretchedVertex::base(b)));
        }
        sink(buf);
      });
    }
  };
  return Decomposition(q, path_len, count, std::move(gen));
}

}  // namespace

Decomposition execute_plan(const std::shared_ptr<const Plan>& plan, std::uint64_t max_edges) {
  if (!plan) throw InvalidParameter("empty plan");
  if (plan->q > kMaxMaterializeDim)
    throw ResourceLimit("target cube Q_" + std::to_string(plan->q) +
                        " is beyond the emission guard");
  require_materializable(static_cast<int>(plan->q), max_edges);
  switch (plan->kind) {
    case Plan::Kind::Trivial:
      return trivial_partition(static_cast<int>(plan->q));
    case Plan::Kind::BasePartition:
      return base_partition(static_cast<int>(plan->q));
    case Plan::Kind::P2Q3:
      return p2_in_q3();
    case Plan::Kind::PowerTwoBase:
      return execute_sharp_base(*plan);
    case Plan::Kind::Stride:
      return cartesian_combine(execute_plan(plan->child, max_edges),
                               split_ham_partition(plan->r, plan->t));
    case Plan::Kind::GcdReduce:
      return execute_stretch(*plan, execute_plan(plan->child, max_edges));
  }
  throw InvalidParameter("unknown plan node");
}

Decomposition power2_decompose(int t, int q, std::uint64_t max_edges) {
  if (t < 0) throw InvalidParameter("the exponent must be non-negative");
  if (q < 1 || q % 2 == 0) throw InvalidParameter("the ambient dimension must be odd");
  if (t > 0 && q < (std::int64_t{1} << t) + 1)
    throw NotDivisible("P_" + std::to_string(std::int64_t{1} << t) +
                       " does not divide Q_" + std::to_string(q));
  return execute_plan(plan_power2(t, q), max_edges);
}

Decomposition decompose(std::int64_t m, std::int64_t q, std::uint64_t max_edges) {
  const auto plan = plan_for(m, q);
  Decomposition dec = execute_plan(plan, max_edges);
  // Count law: a partition into length-m paths has exactly |E|/m blocks.
  if (dec.path_count() != edge_count(static_cast<int>(q)) / static_cast<std::uint64_t>(m))
    throw Error("internal: path count does not match |E(Q_q)| / m");
  return dec;
}

}  // namespace hpd
