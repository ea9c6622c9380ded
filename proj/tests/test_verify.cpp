#include <doctest.h>

#include <utility>
#include <vector>

#include "hpd/cube.hpp"
#include "hpd/decompose.hpp"
#include "hpd/dvop.hpp"
#include "hpd/verify.hpp"

using namespace hpd;

namespace {

Decomposition from_paths(int q, int m, std::vector<PathEmbedding> paths) {
  const auto n = paths.size();
  return Decomposition(q, m, n,
                       [paths = std::move(paths)](const Decomposition::Sink& sink) {
                         for (const auto& p : paths) sink(p);
                       });
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("clean partitions pass") {
  const Report rep = verify_decomposition(base_partition(3));
  CHECK(rep.ok);
  CHECK(rep.first_failure == FailureKind::None);
  CHECK(rep.summary() == "ok: 4 paths, 12 edges");
}

TEST_CASE("tampering is caught") {
  const auto good = base_partition(3).collect();

  auto dup = good;
  dup[1] = dup[0];
  Report rep = verify_decomposition(from_paths(3, 3, dup));
  CHECK_FALSE(rep.ok);
  CHECK(rep.first_failure == FailureKind::DuplicateEdge);
  CHECK(rep.summary().find("DuplicateEdge") != std::string::npos);

  auto short_one = good;
  short_one[2].verts.pop_back();
  rep = verify_decomposition(from_paths(3, 3, short_one));
  CHECK_FALSE(rep.ok);
  CHECK(rep.first_failure == FailureKind::WrongLength);

  auto jump = good;
  jump[0].verts[1] = 7;  // 0 -> 7 flips three coordinates at once
  rep = verify_decomposition(from_paths(3, 3, jump));
  CHECK_FALSE(rep.ok);
  CHECK(rep.first_failure == FailureKind::NonPath);

  auto revisit = good;
  revisit[0].verts = {0, 1, 0, 2};
  rep = verify_decomposition(from_paths(3, 3, revisit));
  CHECK_FALSE(rep.ok);
  CHECK(rep.first_failure == FailureKind::NonPath);

  auto alien = good;
  alien[0].verts[3] = 0b1111;  // label outside the cube
  rep = verify_decomposition(from_paths(3, 3, alien));
  CHECK_FALSE(rep.ok);
  CHECK(rep.first_failure == FailureKind::NonPath);

  auto missing = good;
  missing.pop_back();
  rep = verify_decomposition(from_paths(3, 3, missing));
  CHECK_FALSE(rep.ok);
  CHECK(rep.first_failure == FailureKind::IncompleteCover);
  CHECK(rep.edges_seen == 9);
}

TEST_CASE("failure names") {
  CHECK(std::string(failure_name(FailureKind::None)) == "None");
  CHECK(std::string(failure_name(FailureKind::NonPath)) == "NonPath");
  CHECK(std::string(failure_name(FailureKind::WrongLength)) == "WrongLength");
  CHECK(std::string(failure_name(FailureKind::DuplicateEdge)) == "DuplicateEdge");
  CHECK(std::string(failure_name(FailureKind::IncompleteCover)) == "IncompleteCover");
}

TEST_CASE("exhaustive search agrees with the condition on tiny cubes") {
  for (const int q : {1, 3}) {
    for (int m = 1; m <= 2 * q; ++m) {
      CAPTURE(q);
      CAPTURE(m);
      const auto witness = brute_force_decompose(q, m);
      CHECK(witness.has_value() == check_divisibility(m, q));
      if (witness) {
        CHECK(witness->size() == edge_count(q) / m);
        PartitionChecker checker(q);
        for (const auto& p : *witness) checker.add_path(p, m);
        CHECK(checker.finish().ok);
      }
    }
  }
}

TEST_CASE("search guard") {
  CHECK_THROWS_AS((void)brute_force_decompose(5, 1), ResourceLimit);
  CHECK_THROWS_AS((void)brute_force_decompose(0, 1), InvalidParameter);
}

TEST_CASE("per-vertex system reports") {
  Report rep = verify_dvop(dvop_for(2, 2));
  CHECK(rep.ok);
  CHECK_FALSE(rep.sampled);
  CHECK(rep.paths_seen == 16);
  CHECK(rep.edges_seen == edge_count(4));

  // break a system: every vertex walks the same coordinate, so each edge
  // shows up from both of its endpoints
  Dvop broken = dvop_for(2, 1);
  broken.path_of = [](Vertex v) {
    PathEmbedding p;
    p.q = 4;
    p.verts = {v, v ^ 1};
    return p;
  };
  rep = verify_dvop(broken);
  CHECK_FALSE(rep.ok);
  CHECK(rep.first_failure == FailureKind::DuplicateEdge);
}

}  // TEST_SUITE
