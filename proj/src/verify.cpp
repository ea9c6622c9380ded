#include "hpd/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hpd/ham.hpp"

namespace hpd {

namespace {

std::string hex_label(Vertex v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

std::string edge_label(Vertex a, Vertex b) {
  return "{" + hex_label(a) + "," + hex_label(b) + "}";
}

// Path-local validity; the caller handles edge bookkeeping.
FailureKind path_shape_failure(const PathEmbedding& p, int q, int expected_len,
                               std::string* witness) {
  if (p.length() != expected_len) {
    *witness = "path has length " + std::to_string(p.length()) + ", expected " +
               std::to_string(expected_len);
    return FailureKind::WrongLength;
  }
  for (Vertex v : p.verts)
    if (q < 64 && (v >> q) != 0) {
      *witness = "vertex " + hex_label(v) + " is not in Q_" + std::to_string(q);
      return FailureKind::NonPath;
    }
  for (std::size_t i = 0; i + 1 < p.verts.size(); ++i)
    if (std::popcount(p.verts[i] ^ p.verts[i + 1]) != 1) {
      *witness = edge_label(p.verts[i], p.verts[i + 1]) + " is not an edge";
      return FailureKind::NonPath;
    }
  std::vector<Vertex> sorted = p.verts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    *witness = "path revisits a vertex";
    return FailureKind::NonPath;
  }
  return FailureKind::None;
}

}  // namespace

const char* failure_name(FailureKind kind) {
  switch (kind) {
    case FailureKind::None: return "None";
    case FailureKind::NonPath: return "NonPath";
    case FailureKind::WrongLength: return "WrongLength";
    case FailureKind::DuplicateEdge: return "DuplicateEdge";
    case FailureKind::IncompleteCover: return "IncompleteCover";
  }
  return "?";
}

std::string Report::summary() const {
  std::ostringstream os;
  os << (ok ? "ok" : "FAILED") << ": " << paths_seen << " paths, " << edges_seen
     << " edges";
  if (sampled) os << " (sampled, seed " << seed << ")";
  if (!ok) os << "; " << failure_name(first_failure) << ": " << witness;
  return os.str();
}

PartitionChecker::PartitionChecker(int q, std::uint64_t max_edges) : q_(q) {
  require_materializable(q, max_edges);
  // One bit per edge_index value, i.e. q * 2^q positions (half stay unused).
  const std::uint64_t positions = static_cast<std::uint64_t>(q) << q;
  bits_.assign((positions + 63) / 64, 0);
}

bool PartitionChecker::fail(FailureKind kind, std::string witness) {
  if (rep_.ok) {
    rep_.ok = false;
    rep_.first_failure = kind;
    rep_.witness = std::move(witness);
  }
  return false;
}

bool PartitionChecker::mark(EdgeRef e) {
  const std::uint64_t idx = edge_index(e, q_);
  std::uint64_t& word = bits_[idx >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (idx & 63);
  if (word & bit)
    return fail(FailureKind::DuplicateEdge,
                "edge " + edge_label(e.base, flip(e.base, e.coord)) + " covered twice");
  word |= bit;
  ++rep_.edges_seen;
  return true;
}

bool PartitionChecker::add_edge(Vertex a, Vertex b) {
  if (!rep_.ok) return false;
  if ((q_ < 64 && ((a >> q_) != 0 || (b >> q_) != 0)) || std::popcount(a ^ b) != 1)
    return fail(FailureKind::NonPath, edge_label(a, b) + " is not an edge of Q_" +
                                          std::to_string(q_));
  return mark(edge_ref(a, std::countr_zero(a ^ b)));
}

bool PartitionChecker::add_path(const PathEmbedding& p, int expected_len) {
  if (!rep_.ok) return false;
  std::string witness;
  const FailureKind kind = path_shape_failure(p, q_, expected_len, &witness);
  if (kind != FailureKind::None) return fail(kind, std::move(witness));
  ++rep_.paths_seen;
  for (std::size_t i = 0; i + 1 < p.verts.size(); ++i) {
    const Vertex a = p.verts[i];
    const Vertex b = p.verts[i + 1];
    if (!mark(edge_ref(a, std::countr_zero(a ^ b)))) return false;
  }
  return true;
}

bool PartitionChecker::add_cycle(const CycleEmbedding& c) {
  if (!rep_.ok) return false;
  const std::size_t n = c.verts.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!add_edge(c.verts[i], c.verts[(i + 1) % n])) return false;
  return true;
}

Report PartitionChecker::finish() {
  if (rep_.ok && rep_.edges_seen != edge_count(q_))
    fail(FailureKind::IncompleteCover,
         std::to_string(rep_.edges_seen) + " of " + std::to_string(edge_count(q_)) +
             " edges covered");
  return rep_;
}

namespace {

struct StopStream {};

}  // namespace

Report verify_decomposition(const Decomposition& d, std::uint64_t max_edges) {
  PartitionChecker checker(d.dim(), max_edges);
  try {
    d.for_each([&](const PathEmbedding& p) {
      if (!checker.add_path(p, d.path_len())) throw StopStream{};
    });
  } catch (const StopStream&) {
  }
  return checker.finish();
}

Report verify_dvop(const Dvop& d, const DvopCheckOptions& opts) {
  const bool exhaustive =
      d.dim <= kMaxMaterializeDim && edge_count(d.dim) <= opts.max_edges;
  if (exhaustive) {
    PartitionChecker checker(d.dim, opts.max_edges);
    const Vertex end = Vertex{1} << d.dim;
    for (Vertex v = 0; v < end; ++v) {
      const PathEmbedding p = d.path_of(v);
      if (p.verts.empty() || p.verts.front() != v) {
        Report rep = checker.report();
        rep.ok = false;
        rep.first_failure = FailureKind::NonPath;
        rep.witness = "path does not start at its vertex";
        return rep;
      }
      if (!checker.add_path(p, d.k)) return checker.finish();
    }
    for (const CycleRef& ref : d.complement)
      if (!checker.add_cycle(ham_cycle(ref.r, ref.delta))) return checker.finish();
    return checker.finish();
  }

  // Too big to sweep: check the per-path contract on a vertex sample.
  Report rep;
  rep.sampled = true;
  rep.seed = opts.seed;
  std::mt19937_64 rng(opts.seed);
  const Vertex mask = low_mask(d.dim);
  for (std::uint64_t i = 0; i < opts.samples && rep.ok; ++i) {
    const Vertex v = rng() & mask;
    const PathEmbedding p = d.path_of(v);
    std::string witness;
    const FailureKind kind = path_shape_failure(p, d.dim, d.k, &witness);
    if (kind != FailureKind::None) {
      rep.ok = false;
      rep.first_failure = kind;
      rep.witness = witness;
      break;
    }
    if (p.verts.front() != v) {
      rep.ok = false;
      rep.first_failure = FailureKind::NonPath;
      rep.witness = "path does not start at its vertex";
      break;
    }
    ++rep.paths_seen;
    rep.edges_seen += d.k;
  }
  return rep;
}

namespace {

struct BruteForce {
  int q;
  int m;
  std::vector<EdgeRef> edges;         // sorted by edge_index
  std::vector<int> slot;              // edge_index -> position in `edges`
  std::uint64_t full = 0;

  explicit BruteForce(int q, int m) : q(q), m(m) {
    slot.assign(static_cast<std::size_t>(q) << q, -1);
    for (Vertex v = 0; v < (Vertex{1} << q); ++v)
      for (int j = 0; j < q; ++j) {
        if ((v >> j) & 1) continue;
        slot[edge_index(EdgeRef{v, j}, q)] = static_cast<int>(edges.size());
        edges.push_back(EdgeRef{v, j});
      }
    full = edges.size() == 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << edges.size()) - 1;
  }

  [[nodiscard]] int edge_slot(Vertex a, Vertex b) const {
    return slot[edge_index(edge_ref(a, std::countr_zero(a ^ b)), q)];
  }

  bool solve(std::uint64_t covered, std::vector<PathEmbedding>& acc) {
    if (covered == full) return true;
    const int e0 = std::countr_zero(~covered);
    const Vertex a = edges[e0].base;
    const Vertex b = flip(a, edges[e0].coord);
    // The new path must contain the lowest uncovered edge; enumerate it by
    // how many edges extend past b, then grow both ends.
    std::vector<Vertex> back{a, b};
    for (int back_len = 0; back_len < m; ++back_len)
      if (grow_back(covered | (std::uint64_t{1} << e0), back, back_len,
                    m - 1 - back_len, acc))
        return true;
    return false;
  }

  bool grow_back(std::uint64_t covered, std::vector<Vertex>& path, int back_left,
                 int front_left, std::vector<PathEmbedding>& acc) {
    if (back_left == 0) {
      std::vector<Vertex> front{path.front()};
      return grow_front(covered, path, front, front_left, acc);
    }
    const Vertex cur = path.back();
    for (int j = 0; j < q; ++j) {
      const Vertex nxt = flip(cur, j);
      if (std::find(path.begin(), path.end(), nxt) != path.end()) continue;
      const int e = edge_slot(cur, nxt);
      if (covered & (std::uint64_t{1} << e)) continue;
      path.push_back(nxt);
      if (grow_back(covered | (std::uint64_t{1} << e), path, back_left - 1, front_left, acc))
        return true;
      path.pop_back();
    }
    return false;
  }

  bool grow_front(std::uint64_t covered, std::vector<Vertex>& back,
                  std::vector<Vertex>& front, int front_left,
                  std::vector<PathEmbedding>& acc) {
    if (front_left == 0) {
      PathEmbedding p;
      p.q = q;
      p.verts.assign(front.rbegin(), front.rend());
      p.verts.insert(p.verts.end(), back.begin() + 1, back.end());
      acc.push_back(std::move(p));
      if (solve(covered, acc)) return true;
      acc.pop_back();
      return false;
    }
    const Vertex cur = front.back();
    for (int j = 0; j < q; ++j) {
      const Vertex nxt = flip(cur, j);
      if (std::find(front.begin(), front.end(), nxt) != front.end() ||
          std::find(back.begin(), back.end(), nxt) != back.end())
        continue;
      const int e = edge_slot(cur, nxt);
      if (covered & (std::uint64_t{1} << e)) continue;
      front.push_back(nxt);
      if (grow_front(covered | (std::uint64_t{1} << e), back, front, front_left - 1, acc))
        return true;
      front.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<PathEmbedding>> brute_force_decompose(int q, int m) {
  if (q < 1 || m < 1) throw InvalidParameter("need q >= 1 and m >= 1");
  if (edge_count(q) > 32)
    throw ResourceLimit("exhaustive search is limited to q * 2^(q-1) <= 32 edges");
  if (edge_count(q) % static_cast<std::uint64_t>(m) != 0) return std::nullopt;
  BruteForce bf(q, m);
  std::vector<PathEmbedding> acc;
  if (!bf.solve(0, acc)) return std::nullopt;
  return acc;
}

}  // namespace hpd
