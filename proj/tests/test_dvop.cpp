#include <doctest.h>

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hpd/dvop.hpp"
#include "hpd/verify.hpp"

using namespace hpd;

TEST_SUITE("dvop") {

TEST_CASE("construction table") {
  CHECK(dvop_for(2, 2).complement.empty());
  CHECK(dvop_for(3, 4).complement.empty());  // the half construction
  CHECK(dvop_for(3, 3).complement.size() == 1);
  CHECK(dvop_for(3, 0).complement.size() == 4);
  CHECK(dvop_for(4, 7).complement.size() == 1);
  CHECK(dvop_for(4, 8).complement.empty());
  CHECK(dvop_for(5, 15).complement.size() == 1);
  CHECK(dvop_for(5, 16).complement.empty());
  CHECK_THROWS_AS((void)dvop_for(3, 5), Unsupported);
  CHECK_THROWS_AS((void)dvop_for(1, 2), Unsupported);
  CHECK_THROWS_AS((void)dvop_for(4, 9), Unsupported);
  CHECK_THROWS_AS((void)dvop_for(5, 17), Unsupported);
  CHECK_THROWS_AS((void)dvop_for(2, -1), InvalidParameter);
  CHECK_THROWS_AS((void)dvop_for(0, 0), InvalidParameter);
}

TEST_CASE("every supported system up to Q_16 sweeps clean") {
  for (int r = 1; r <= 4; ++r) {
    const int half = 1 << (r - 1);
    for (int k = 0; k <= half; ++k) {
      CAPTURE(r);
      CAPTURE(k);
      const Dvop d = dvop_for(r, k);
      CHECK(d.dim == (1 << r));
      CHECK(d.k == k);
      CHECK(d.complement.size() == static_cast<std::size_t>(half - k));
      const Report rep = verify_dvop(d);
      CHECK(rep.ok);
      CHECK_FALSE(rep.sampled);
      CHECK(rep.paths_seen == (std::uint64_t{1} << d.dim));
      CHECK(rep.edges_seen == edge_count(d.dim));
    }
  }
}

TEST_CASE("half construction scales point-wise") {
  for (const int n : {1, 2, 3}) {
    const Dvop d = dvop_half(n);
    CHECK(d.complement.empty());
    const Report rep = verify_dvop(d);
    CHECK(rep.ok);
    CHECK(rep.edges_seen == edge_count(2 * n));
  }
  const Dvop big = dvop_half(16);  // Q_32, usable far beyond materialization
  const PathEmbedding p = big.path_of(0xdeadbeefull);
  REQUIRE(p.verts.size() == 17);
  CHECK(p.verts.front() == 0xdeadbeefull);
}

TEST_CASE("middle construction trace") {
  // 1-values along a k=7 path always read nu, nu+1, nu, nu+1, nu+2, nu+3,
  // nu+2, nu+3 mod 4, independent of the start vertex.
  static constexpr std::uint32_t kOffsets[8] = {0, 1, 0, 1, 2, 3, 2, 3};
  const Dvop d = dvop_mid(4, 7);
  for (Vertex v = 0; v < (Vertex{1} << 16); v += 97) {
    const PathEmbedding p = d.path_of(v);
    REQUIRE(p.verts.size() == 8);
    const std::uint32_t nu = rho1(v, 16);
    for (int i = 0; i < 8; ++i)
      CHECK(rho1(p.verts[i], 16) == ((nu + kOffsets[i]) & 3));
  }
}

TEST_CASE("wide construction steps and trace") {
  const std::vector<std::pair<std::uint32_t, int>> expect = {
      {0, 1}, {2, -1}, {4, 1},  {6, 1},   {1, 1},  {3, -1}, {5, 1}, {7, 1},
      {8, 1}, {10, -1}, {12, 1}, {14, 1}, {9, 1}, {11, -1}, {13, 1}};
  CHECK(dvop_wide_steps() == expect);

  // 2-values along a k=15 path, mod 8
  static constexpr std::uint32_t kOffsets[16] = {0, 1, 0, 1, 2, 7, 2, 7,
                                                 4, 5, 4, 5, 6, 3, 6, 3};
  const Dvop d = dvop_wide(5, 15);
  std::mt19937_64 rng(7);
  for (int n = 0; n < 500; ++n) {
    const Vertex v = rng() & low_mask(32);
    const PathEmbedding p = d.path_of(v);
    REQUIRE(p.verts.size() == 16);
    CHECK(p.verts.front() == v);
    const std::set<Vertex> distinct(p.verts.begin(), p.verts.end());
    CHECK(distinct.size() == 16);  // simple
    const std::uint32_t nu = rho2(v, 32);
    for (int i = 0; i < 16; ++i)
      CHECK((rho2(p.verts[i], 32) & 7) == ((nu + kOffsets[i]) & 7));
  }

  const Report rep = verify_dvop(d);  // Q_32 cannot be swept, so sampled
  CHECK(rep.ok);
  CHECK(rep.sampled);
  CHECK(rep.seed == DvopCheckOptions{}.seed);
}

}  // TEST_SUITE
