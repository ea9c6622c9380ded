#include <doctest.h>

#include <utility>
#include <vector>

#include "hpd/decompose.hpp"
#include "hpd/ham.hpp"
#include "hpd/verify.hpp"

using namespace hpd;

TEST_SUITE("decompose") {

TEST_CASE("divisibility condition") {
  CHECK(check_divisibility(1, 1));
  CHECK_FALSE(check_divisibility(2, 1));
  CHECK(check_divisibility(2, 3));
  CHECK(check_divisibility(3, 3));
  CHECK_FALSE(check_divisibility(4, 3));  // longer than the dimension
  CHECK_FALSE(check_divisibility(5, 9));  // 5 does not divide 9 * 2^8
  CHECK(check_divisibility(6, 9));
  CHECK(check_divisibility(8, 9));
  CHECK(check_divisibility(16, 17));
  CHECK(check_divisibility(10, 15));
  CHECK_FALSE(check_divisibility(14, 15));
  // no big integers needed even when q * 2^(q-1) overflows
  CHECK(check_divisibility(std::uint64_t{1} << 32, (std::uint64_t{1} << 32) + 1));
  CHECK_THROWS_AS((void)check_divisibility(2, 4), InvalidParameter);
  CHECK_THROWS_AS((void)check_divisibility(0, 3), InvalidParameter);
}

TEST_CASE("cycle splitting") {
  const CycleEmbedding c = ham_cycle(1, 0);
  const auto halves = split_cycle(c, 2);
  REQUIRE(halves.size() == 2);
  CHECK(halves[0].verts == std::vector<Vertex>{0, 1, 3});
  CHECK(halves[1].verts == std::vector<Vertex>{3, 2, 0});
  CHECK_THROWS_AS((void)split_cycle(c, 3), InvalidParameter);
}

TEST_CASE("hand-built base case for length 2") {
  const Decomposition d = p2_in_q3();
  const auto paths = d.collect();
  REQUIRE(paths.size() == 6);
  CHECK(paths[0].verts == std::vector<Vertex>{1, 0, 2});
  CHECK(paths[1].verts == std::vector<Vertex>{2, 3, 1});
  CHECK(paths[2].verts == std::vector<Vertex>{0, 4, 5});
  CHECK(paths[3].verts == std::vector<Vertex>{1, 5, 7});
  CHECK(paths[4].verts == std::vector<Vertex>{3, 7, 6});
  CHECK(paths[5].verts == std::vector<Vertex>{2, 6, 4});
  CHECK(verify_decomposition(d).ok);
}

TEST_CASE("every edge alone") {
  const Decomposition d = trivial_partition(3);
  CHECK(d.path_len() == 1);
  CHECK(d.path_count() == 12);
  CHECK(verify_decomposition(d).ok);
}

TEST_CASE("split cycles cover a power-of-two cube") {
  const Decomposition d = split_ham_partition(2, 2);
  CHECK(d.dim() == 4);
  CHECK(d.path_len() == 4);
  CHECK(d.path_count() == 8);
  CHECK(verify_decomposition(d).ok);
}

TEST_CASE("product composition") {
  const Decomposition d = cartesian_combine(p2_in_q3(), split_ham_partition(1, 1));
  CHECK(d.dim() == 5);
  CHECK(d.path_count() == 4 * 6 + 8 * 2);
  const Report rep = verify_decomposition(d);
  CHECK(rep.ok);
  CHECK(rep.edges_seen == edge_count(5));
  CHECK_THROWS_AS((void)cartesian_combine(p2_in_q3(), trivial_partition(2)),
                  InvalidParameter);
}

TEST_CASE("plans mirror the construction table") {
  CHECK(plan_for(1, 5)->kind == Plan::Kind::Trivial);
  CHECK(plan_for(5, 5)->kind == Plan::Kind::BasePartition);
  CHECK(plan_for(2, 3)->kind == Plan::Kind::P2Q3);

  const auto stride = plan_for(2, 5);
  REQUIRE(stride->kind == Plan::Kind::Stride);
  CHECK(stride->r == 1);
  REQUIRE(stride->child);
  CHECK(stride->child->kind == Plan::Kind::P2Q3);

  const auto p45 = plan_for(4, 5);
  REQUIRE(p45->kind == Plan::Kind::PowerTwoBase);
  CHECK(p45->t == 2);
  CHECK(p45->r == 2);
  CHECK(p45->s == 1);
  CHECK(p45->sharp_m == 1);
  CHECK(p45->k_first == 2);
  CHECK(p45->k_second == 1);

  const auto p47 = plan_for(4, 7);
  REQUIRE(p47->kind == Plan::Kind::PowerTwoBase);
  CHECK(p47->s == 3);
  CHECK(p47->sharp_m == 3);
  CHECK(p47->k_first == 1);
  CHECK(p47->k_second == 0);

  const auto p16 = plan_for(16, 17);
  REQUIRE(p16->kind == Plan::Kind::PowerTwoBase);
  CHECK(p16->t == 4);
  CHECK(p16->r == 3);
  CHECK(p16->s == 1);
  CHECK(p16->sharp_m == 9);
  CHECK(p16->k_first == 4);
  CHECK(p16->k_second == 3);
  CHECK(plan_to_string(*p16) == "sharp_base(m=16, q=17, rung=9#Q_8, k=4+3)");

  const auto p69 = plan_for(6, 9);
  REQUIRE(p69->kind == Plan::Kind::GcdReduce);
  CHECK(p69->d == 3);
  REQUIRE(p69->child);
  CHECK(p69->child->kind == Plan::Kind::P2Q3);

  const auto p49 = plan_for(4, 9);
  REQUIRE(p49->kind == Plan::Kind::Stride);
  CHECK(p49->r == 2);
  REQUIRE(p49->child);
  CHECK(p49->child->kind == Plan::Kind::PowerTwoBase);

  for (const auto& [m, q] :
       {std::pair{2, 3}, {4, 5}, {8, 9}, {16, 17}, {6, 9}, {8, 13}, {12, 15}}) {
    CAPTURE(m);
    CAPTURE(q);
    CHECK_NOTHROW(validate_plan(*plan_for(m, q)));
  }
}

TEST_CASE("plans beyond any materializable cube") {
  const auto big = plan_for(std::int64_t{1} << 16, (std::int64_t{1} << 16) + 1);
  REQUIRE(big->kind == Plan::Kind::PowerTwoBase);
  CHECK(big->t == 16);
  CHECK(big->r == 5);
  CHECK(big->s == 1);
  CHECK(big->k_first == 16);
  CHECK(big->k_second == 15);
  CHECK(big->sharp_m == 65505);
  CHECK_NOTHROW(validate_plan(*big));
  CHECK_THROWS_AS((void)execute_plan(big), ResourceLimit);
  CHECK_THROWS_AS((void)decompose(std::int64_t{1} << 16, (std::int64_t{1} << 16) + 1),
                  ResourceLimit);
  CHECK_THROWS_AS(
      (void)plan_for(std::int64_t{1} << 32, (std::int64_t{1} << 32) + 1), Unsupported);
}

TEST_CASE("decompose matches the counting law") {
  struct Case {
    int m, q;
    std::uint64_t n;
  };
  for (const auto [m, q, n] : {Case{2, 3, 6}, {4, 5, 20}, {2, 5, 40}, {4, 7, 112},
                               {8, 9, 288}, {6, 9, 384}}) {
    CAPTURE(m);
    CAPTURE(q);
    const Decomposition d = decompose(m, q);
    CHECK(d.path_count() == n);
    CHECK(d.path_count() == edge_count(q) / m);
    const Report rep = verify_decomposition(d);
    CHECK(rep.ok);
    CHECK(rep.edges_seen == edge_count(q));
  }
  CHECK_THROWS_AS((void)decompose(5, 9), NotDivisible);
  CHECK_THROWS_AS((void)decompose(4, 3), NotDivisible);
  CHECK_THROWS_AS((void)decompose(2, 4), InvalidParameter);
  CHECK_THROWS_AS((void)decompose(0, 3), InvalidParameter);
}

TEST_CASE("power-of-two entry point") {
  CHECK(power2_decompose(0, 3).path_count() == 12);
  CHECK(power2_decompose(2, 7).path_count() == 112);
  CHECK_THROWS_AS((void)power2_decompose(2, 3), NotDivisible);
}

}  // TEST_SUITE
