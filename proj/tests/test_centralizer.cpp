#include <doctest.h>

#include <random>
#include <set>

#include "cma/centralizer.hpp"
#include "cma/perm.hpp"
#include "test_helpers.hpp"

using namespace cma;
using cma::testing::jordan;
using cma::testing::random_invertible;
using cma::testing::random_matrix;

TEST_CASE("worked block decompositions") {
  auto Q = field_traits<Rat>::ctx(FieldSpec::rationals());

  // c = J_3(0) + J_1(0) + J_1(1): blocks {x: n=3, exps {3,1}}, {x-1: n=1}
  auto rc = decompose<Rat>(jordan<Rat>(Q, {{3, 0}, {1, 0}, {1, 1}}), Q);
  REQUIRE(rc.blocks.size() == 2);
  CHECK(rc.blocks[1].irr == Poly<Rat>::x(Q));
  CHECK(rc.blocks[1].n_i == 3);
  CHECK(rc.blocks[1].exps == std::vector<int>{3, 1});
  CHECK(rc.blocks[1].dim_block == 3 + 1 + 1 + 1);
  CHECK(rc.blocks[0].n_i == 1);
  CHECK(rc.blocks[0].is_semisimple);
  CHECK(rc.num_nonproj_simples == 2);
  CHECK(rc.num_simples == 3);
  CHECK(rc.total_dim == 7);

  // d = J_3(1) + J_2(1): single block {x-1: n=3, exps {3,2}}
  auto rd = decompose<Rat>(jordan<Rat>(Q, {{3, 1}, {2, 1}}), Q);
  REQUIRE(rd.blocks.size() == 1);
  CHECK(rd.blocks[0].exps == std::vector<int>{3, 2});
  CHECK(rd.blocks[0].dim_block == 3 + 2 + 2 + 2);
  CHECK(rd.num_nonproj_simples == 2); // matches c's count
  CHECK(!rd.blocks[0].is_semisimple);
  CHECK(!rd.blocks[0].has_nodes);

  // identity: all of M_n
  auto ri = decompose<Rat>(identity<Rat>(3, Q), Q);
  REQUIRE(ri.blocks.size() == 1);
  CHECK(ri.blocks[0].is_semisimple);
  CHECK(ri.total_dim == 9);
  CHECK(ri.num_nonproj_simples == 0);
}

TEST_CASE("brute-force commutant dimensions") {
  auto F2 = field_traits<Fp>::ctx(FieldSpec::prime(2));
  auto F5 = field_traits<Fp>::ctx(FieldSpec::prime(5));
  auto Q = field_traits<Rat>::ctx(FieldSpec::rationals());

  CHECK(brute_force_centralizer_dim<Fp>(jordan<Fp>(F2, {{2, 0}, {1, 0}}), F2) == 5);
  CHECK(brute_force_centralizer_dim<Fp>(identity<Fp>(3, F5), F5) == 9);
  CHECK(brute_force_centralizer_dim<Rat>(jordan<Rat>(Q, {{3, 0}}), Q) == 3);
  CHECK_THROWS_AS(brute_force_centralizer_dim<Fp>(identity<Fp>(13, F5), F5), Error);
}

TEST_CASE("dimension formula matches the brute force oracle") {
  std::mt19937_64 rng(2718);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto ctx = field_traits<Fp>::ctx(FieldSpec::prime(p));
    for (int trial = 0; trial < 30; ++trial) {
      int n = 2 + static_cast<int>(rng() % 6); // n <= 7
      MatrixX<Fp> c = random_matrix<Fp>(ctx, n, rng);
      auto rep = decompose<Fp>(c, ctx);
      CHECK(rep.total_dim == brute_force_centralizer_dim<Fp>(c, ctx));
      // transpose invariance
      MatrixX<Fp> ct = c.transpose();
      CHECK(brute_force_centralizer_dim<Fp>(ct, ctx) == rep.total_dim);
    }
  }
  // Jordan-type inputs over Q
  auto Q = field_traits<Rat>::ctx(FieldSpec::rationals());
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::pair<int, long long>> blocks;
    int n = 0;
    while (n < 5) {
      int sz = 1 + static_cast<int>(rng() % 3);
      blocks.push_back({sz, static_cast<long long>(rng() % 3)});
      n += sz;
    }
    MatrixX<Rat> c = jordan<Rat>(Q, blocks);
    CHECK(decompose<Rat>(c, Q).total_dim == brute_force_centralizer_dim<Rat>(c, Q));
  }
}

TEST_CASE("report is a similarity invariant") {
  auto F3 = field_traits<Fp>::ctx(FieldSpec::prime(3));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    MatrixX<Fp> c = random_matrix<Fp>(F3, n, rng);
    MatrixX<Fp> g = random_invertible<Fp>(F3, n, rng);
    auto a = decompose<Fp>(c, F3);
    auto b = decompose<Fp>(g * c * inverse<Fp>(g, F3), F3);
    CHECK(a.total_dim == b.total_dim);
    CHECK(a.num_simples == b.num_simples);
    CHECK(a.num_nonproj_simples == b.num_nonproj_simples);
    REQUIRE(a.blocks.size() == b.blocks.size());
    for (size_t i = 0; i < a.blocks.size(); ++i) {
      CHECK(a.blocks[i].irr == b.blocks[i].irr);
      CHECK(a.blocks[i].exps == b.blocks[i].exps);
    }
  }
}

TEST_CASE("equivalent divisor data yields equal non-projective simple counts") {
  auto F3 = field_traits<Fp>::ctx(FieldSpec::prime(3));
  std::mt19937_64 rng(4);
  int hits = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // random multiset over {x, x-1}, then a J-perturbed partner
    ElementaryDivisorMultiset<Fp> a;
    std::vector<Poly<Fp>> irrs = {Poly<Fp>::x(F3),
                                  Poly<Fp>({F3.from_int(-1), F3.from_int(1)})};
    for (int gi = 0; gi < 2; ++gi) {
      std::set<int> s;
      int k = 1 + static_cast<int>(rng() % 3);
      while (static_cast<int>(s.size()) < k) s.insert(1 + static_cast<int>(rng() % 6));
      for (int x : s) a.add(irrs[gi], x);
    }
    a.canonicalize();
    ElementaryDivisorMultiset<Fp> b;
    for (const auto& g : a.groups) {
      PowerIndexSet t = g.distinct_exps();
      if (rng() % 2) t = j_transform(t);
      for (int x : t) b.add(g.irr, x);
    }
    b.canonicalize();
    auto v = s_equivalent(a, b, F3);
    REQUIRE(v.equivalent);
    if (!(a == b)) ++hits;
    CHECK(decompose_from_eldiv(a, F3).num_nonproj_simples ==
          decompose_from_eldiv(b, F3).num_nonproj_simples);
  }
  CHECK(hits > 20);
}

TEST_CASE("cycle type (6,1) block data in characteristic 3") {
  auto F3 = field_traits<Fp>::ctx(FieldSpec::prime(3));
  auto rep = decompose_from_eldiv(perm_elementary_divisors<Fp>({6, 1}, F3), F3);
  // blocks: (x+1) exps {3}, (x-1) exps {3,1}; counts 1 + 2
  REQUIRE(rep.blocks.size() == 2);
  CHECK(rep.num_nonproj_simples == 3);
}

TEST_CASE("report JSON and table") {
  auto Q = field_traits<Rat>::ctx(FieldSpec::rationals());
  auto rep = decompose<Rat>(jordan<Rat>(Q, {{2, 0}, {1, 0}}), Q);
  auto j = report_to_json(rep);
  CHECK(j.at("total_dim").get<long long>() == 5);
  CHECK(j.at("blocks")[0].at("has_nodes").get<bool>());
  std::string table = report_to_table(rep);
  CHECK(table.find("dim=5") != std::string::npos);
  CHECK(table.find("[nodes]") != std::string::npos);
}
