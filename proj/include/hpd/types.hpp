#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hpd {

// Vertex of the hypercube Q_q, packed into an unsigned integer.
// Coordinate i of the usual tuple notation (1-based) lives at bit i-1,
// so coordinate 1 is the least significant bit.
using Vertex = std::uint64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidIndex : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };
struct NotDivisible : Error { using Error::Error; };
struct ResourceLimit : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };

// Canonical name of the edge {base, base ^ (1 << coord)}: the base is the
// endpoint with bit `coord` cleared, so every edge has exactly one EdgeRef.
struct EdgeRef {
  Vertex base = 0;
  int coord = 0;
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

// A path v_0, ..., v_m in Q_q; consecutive vertices differ in one bit.
struct PathEmbedding {
  int q = 0;
  std::vector<Vertex> verts;
  [[nodiscard]] int length() const { return static_cast<int>(verts.size()) - 1; }
};

// A cycle v_0, ..., v_{n-1} in Q_q; vertices are cyclically adjacent.
struct CycleEmbedding {
  int q = 0;
  std::vector<Vertex> verts;
  [[nodiscard]] int length() const { return static_cast<int>(verts.size()); }
};

// A claimed edge decomposition of Q_q into paths of length m, produced as a
// deterministic finite stream. Generation never materializes the whole
// family; the sink may be called with a reused buffer, so it must copy
// anything it wants to keep. The claim itself is checked by
// verify_decomposition, never assumed.
class Decomposition {
 public:
  using Sink = std::function<void(const PathEmbedding&)>;
  using Generator = std::function<void(const Sink&)>;

  Decomposition() = default;
  Decomposition(int q, int path_len, std::uint64_t path_count, Generator gen)
      : q_(q), m_(path_len), count_(path_count), gen_(std::move(gen)) {}

  [[nodiscard]] int dim() const { return q_; }
  [[nodiscard]] int path_len() const { return m_; }
  [[nodiscard]] std::uint64_t path_count() const { return count_; }

  void for_each(const Sink& sink) const { gen_(sink); }

  // Materializes every path. Only sensible for small instances.
  [[nodiscard]] std::vector<PathEmbedding> collect() const {
    std::vector<PathEmbedding> out;
    out.reserve(count_);
    gen_([&](const PathEmbedding& p) { out.push_back(p); });
    return out;
  }

 private:
  int q_ = 0;
  int m_ = 0;
  std::uint64_t count_ = 0;
  Generator gen_;
};

}  // namespace hpd
