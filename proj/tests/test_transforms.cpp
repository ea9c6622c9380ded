#include <doctest.h>

#include <bit>
#include <vector>

#include "hpd/ham.hpp"
#include "hpd/transforms.hpp"
#include "hpd/verify.hpp"

using namespace hpd;

namespace {

// Push every stretched edge through every family member and demand a
// partition of E(Q_{mq}).
void check_stretch_family(int m, int q) {
  CAPTURE(m);
  CAPTURE(q);
  PartitionChecker checker(m * q);
  std::uint64_t maps = 0;
  stretch_decomposition(m, q, [&](const EmbeddingMap& map) {
    ++maps;
    CHECK(map.stretch() == m);
    CHECK(map.source_dim() == q);
    CHECK(map.target_dim() == m * q);
    for_each_stretched_edge(m, q,
                            [&](const StretchedVertex& a, const StretchedVertex& b) {
                              checker.add_edge(map(a), map(b));
                            });
  });
  CHECK(maps == stretch_family_size(m, q));
  const Report rep = checker.finish();
  CHECK(rep.ok);
  CHECK(rep.edges_seen == edge_count(m * q));
}

void check_sharp_family(int m, int q) {
  CAPTURE(m);
  CAPTURE(q);
  PartitionChecker checker(m + q);
  std::uint64_t maps = 0;
  for (Vertex gamma = 0; gamma < (Vertex{1} << m); ++gamma) {
    if (parity(gamma) != 0) continue;
    ++maps;
    const SharpMap map(m, q, gamma);
    for_each_sharp_edge(m, q, [&](const SharpVertex& a, const SharpVertex& b) {
      checker.add_edge(map(a), map(b));
    });
  }
  CHECK(maps == (std::uint64_t{1} << (m - 1)));
  const Report rep = checker.finish();
  CHECK(rep.ok);
  CHECK(rep.edges_seen == edge_count(m + q));
}

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("subdivision points normalize to an even base") {
  const StretchedVertex v = StretchedVertex::inner(0, 2, 0b001);
  CHECK(normalize_stretched(3, v) == StretchedVertex::inner(0, 1, 0b000));
  CHECK(normalize_stretched(3, StretchedVertex::inner(0, 3, 0b001)) ==
        StretchedVertex::base(0b000));
  CHECK(normalize_stretched(3, StretchedVertex::inner(1, 0, 0b011)) ==
        StretchedVertex::base(0b011));
  const StretchedVertex c = StretchedVertex::inner(1, 2, 0b011);
  CHECK(normalize_stretched(3, c) == c);  // already canonical
}

TEST_CASE("odd stretch blows up coordinates") {
  const EmbeddingMap map = stretch_map_odd(3, 2, 0);
  CHECK(map(StretchedVertex::base(0b00)) == 0);
  CHECK(map(StretchedVertex::base(0b01)) == 0b000111);
  CHECK(map(StretchedVertex::base(0b11)) == 0b111111);
  CHECK(map(StretchedVertex::inner(0, 1, 0)) == 0b000001);
  CHECK(map(StretchedVertex::inner(0, 2, 0)) == 0b000011);
  CHECK(map(StretchedVertex::inner(1, 1, 0)) == 0b001000);
  // the two names of one interior point agree
  CHECK(map(StretchedVertex::inner(0, 2, 0b00)) ==
        map(StretchedVertex::inner(0, 1, 0b01)));
  CHECK_THROWS_AS((void)stretch_map_odd(2, 2, 0), InvalidParameter);
  CHECK_THROWS_AS((void)stretch_map_odd(3, 2, 0b000001), InvalidIndex);
}

TEST_CASE("walking a stretched edge lands on adjacent labels") {
  const EmbeddingMap map = stretch_map_odd(5, 3, 0);
  for (const Vertex alpha : {Vertex{0}, Vertex{0b011}, Vertex{0b101}}) {
    for (int j = 0; j < 3; ++j) {
      Vertex prev = map(StretchedVertex::base(alpha));
      for (int k = 1; k <= 5; ++k) {
        const Vertex cur = k == 5 ? map(StretchedVertex::base(flip(alpha, j)))
                                  : map(StretchedVertex::inner(j, k, alpha));
        CHECK(std::popcount(prev ^ cur) == 1);
        prev = cur;
      }
    }
  }
}

TEST_CASE("doubling splits edge midpoints by parity") {
  // 2-stretch of Q_1 into Q_2, two maps over the trivial translate
  const EmbeddingMap e0 = stretch_map_two(1, 0, 0);
  const EmbeddingMap e1 = stretch_map_two(1, 0, 1);
  CHECK(e0(StretchedVertex::base(0)) == 0b00);
  CHECK(e0(StretchedVertex::base(1)) == 0b11);
  CHECK(e0(StretchedVertex::inner(0, 1, 0)) == 0b10);
  CHECK(e1(StretchedVertex::inner(0, 1, 0)) == 0b01);
}

TEST_CASE("stretch families tile the big cube") {
  check_stretch_family(2, 2);
  check_stretch_family(2, 3);
  check_stretch_family(3, 2);
  check_stretch_family(3, 3);
  check_stretch_family(6, 1);
  CHECK(stretch_family_size(2, 2) == 4);
  CHECK(stretch_family_size(3, 2) == 16);
  CHECK(stretch_family_size(6, 1) == 32);
}

TEST_CASE("sharp maps and rungs") {
  const SharpMap map(3, 2, 0b011);
  CHECK(map.rung_len() == 3);
  CHECK(map.source_dim() == 2);
  CHECK(map.target_dim() == 5);
  CHECK(map(SharpVertex::prime(0b10)) == (0b011 | (0b10 << 3)));
  CHECK(map(SharpVertex::rung(0b10, 1)) == (0b010 | (0b10 << 3)));
  CHECK(map(SharpVertex::rung(0b10, 3)) == (0b100 | (0b10 << 3)));
  CHECK_THROWS_AS(SharpMap(2, 2, 0), InvalidParameter);
  CHECK_THROWS_AS(SharpMap(3, 2, 0b001), InvalidIndex);
}

TEST_CASE("sharp families tile the big cube") {
  check_sharp_family(1, 2);
  check_sharp_family(3, 2);
  check_sharp_family(1, 4);
  check_sharp_family(3, 4);
}

TEST_CASE("concatenated path systems") {
  // k'=2 and k''=1 joined by one rung edge: paths of length 4 out of Q_4,
  // with one leftover cycle on the far side.
  const SharpConcat cc = concat_dvop_paths(1, dvop_for(2, 2), dvop_for(2, 1));
  CHECK(cc.path_len == 4);
  CHECK(cc.complement_first.empty());
  REQUIRE(cc.complement_second.size() == 1);
  CHECK(cc.complement_second[0].delta == 1);

  PartitionChecker checker(5);
  const SharpMap map(1, 4, 0);
  for (Vertex v = 0; v < 16; ++v) {
    const auto path = cc.path_of(v);
    REQUIRE(path.size() == 5);
    CHECK(path[2] == SharpVertex::prime(v));  // reversed system ends at v
    CHECK(path[3] == SharpVertex::rung(v, 1));
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      checker.add_edge(map(path[i]), map(path[i + 1]));
  }
  const CycleEmbedding c16 = ham_cycle(2, 1);
  CycleEmbedding lifted;
  lifted.q = 5;
  for (const Vertex b : c16.verts) lifted.verts.push_back(map(SharpVertex::rung(b, 1)));
  checker.add_cycle(lifted);
  const Report rep = checker.finish();
  CHECK(rep.ok);
  CHECK(rep.edges_seen == edge_count(5));
}

TEST_CASE("empty systems leave just the rungs") {
  const SharpConcat cc = concat_dvop_paths(3, dvop_for(2, 0), dvop_for(2, 0));
  CHECK(cc.path_len == 3);
  CHECK(cc.complement_first.size() == 2);
  CHECK(cc.complement_second.size() == 2);
  const auto path = cc.path_of(5);
  REQUIRE(path.size() == 4);
  for (int t = 0; t <= 3; ++t) CHECK(path[t] == SharpVertex::rung(5, t));
}

}  // TEST_SUITE
