#include "doctest.h"

#include "support.hpp"

#include "srr/batchpir.hpp"
#include "srr/errors.hpp"

#include <set>

using namespace srr;

namespace {

DemandVector dv(std::initializer_list<int> xs) {
  DemandVector out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

std::vector<DemandVector> sum_four_vectors() {
  std::vector<DemandVector> out;
  for (int a = 4; a >= 0; --a) {
    for (int b = 4 - a; b >= 0; --b) out.push_back(dv({a, b, 4 - a - b}));
  }
  return out;
}

/// Server set of matching edge e, 1-based, dummies dropped.
std::vector<std::size_t> servers_of(const Algorithm1Result& r, std::size_t e) {
  const auto& ed = r.graph.edge(e);
  const auto s = r.catalog.sets(ed.file)[ed.set].servers;
  std::vector<std::size_t> out;
  for (auto l : s) out.push_back(l + 1);
  return out;
}

}  // namespace

TEST_CASE("batch verdicts of the [7,3] simplex code") {
  const auto c = enumerate_recovery_sets(test::simplex3());
  const auto four = is_batch_t(c, 4);
  CHECK(four.all_served);
  CHECK(four.vectors_checked == 15);
  CHECK_FALSE(four.first_failure);

  const auto five = is_batch_t(c, 5);
  CHECK_FALSE(five.all_served);
  REQUIRE(five.first_failure);
  CHECK(*five.first_failure == dv({5, 0, 0}));
  CHECK(five.vectors_checked == 1);

  CHECK_THROWS_AS(is_batch_t(c, 0), std::invalid_argument);
}

TEST_CASE("batch parameter") {
  const auto s3 = batch_t_max(enumerate_recovery_sets(test::simplex3()));
  CHECK(s3.t_max == 4);
  REQUIRE(s3.verdicts.size() == 5);
  CHECK(s3.verdicts.back().t == 5);
  CHECK_FALSE(s3.verdicts.back().all_served);

  const auto id = batch_t_max(enumerate_recovery_sets(test::identity_code(2)));
  CHECK(id.t_max == 1);
  REQUIRE(id.verdicts.back().first_failure);
  CHECK(*id.verdicts.back().first_failure == dv({2, 0}));

  CHECK(batch_t_max(enumerate_recovery_sets(simplex_code(2))).t_max == 2);

  // a file with no recovery set fails already at t = 1
  const auto tri = batch_t_max(enumerate_recovery_sets(test::triangle_code()));
  CHECK(tri.t_max == 0);
  REQUIRE(tri.verdicts.size() == 1);
  CHECK(*tri.verdicts[0].first_failure == dv({0, 1, 0}));
}

TEST_CASE("batch enumeration guard") {
  // C(t + k - 1, k - 1) vectors; k = 10, t = 30 is far past the limit
  const auto c = enumerate_recovery_sets(test::identity_code(10));
  CHECK_THROWS_AS(is_batch_t(c, 30), GuardError);
  CHECK_NOTHROW(is_batch_t(c, 1));
}

TEST_CASE("PIR parameter") {
  const auto c = enumerate_recovery_sets(test::simplex3());
  const auto p = pir_t(c);
  CHECK(p.t_pir == 4);
  CHECK(p.per_file == std::vector<std::size_t>{4, 4, 4});
  CHECK(pir_t(enumerate_recovery_sets(test::identity_code(3))).t_pir == 1);
  CHECK(pir_t(enumerate_recovery_sets(simplex_code(4))).t_pir == 8);
  CHECK(pir_t(enumerate_recovery_sets(test::triangle_code())).t_pir == 0);
}

TEST_CASE("PIR families are disjoint and simplex codes reach 2^(k-1)") {
  for (int k = 2; k <= 4; ++k) {
    CAPTURE(k);
    const auto c = enumerate_recovery_sets(simplex_code(k));
    const auto p = pir_t(c);
    CHECK(p.t_pir == (std::size_t{1} << (k - 1)));
    for (std::size_t i = 0; i < c.files(); ++i) {
      CHECK(p.families[i].size() == p.per_file[i]);
      std::set<std::size_t> used;
      std::size_t total = 0;
      for (auto j : p.families[i]) {
        for (auto l : c.sets(i)[j].servers) used.insert(l);
        total += c.sets(i)[j].servers.size();
      }
      CHECK(used.size() == total);
    }
  }
}

TEST_CASE("batch and PIR relations on random codes") {
  for (const auto& g : test::property_corpus(60, 3)) {
    const auto c = enumerate_recovery_sets(g);
    const auto b = batch_t_max(c);
    const auto p = pir_t(c);
    CHECK(p.t_pir >= b.t_max);
    for (std::size_t t = 1; t <= b.t_max; ++t) CHECK(is_batch_t(c, t).all_served);
    CHECK(Rational(b.t_max) <= capacity(c, unit_capacities(g.servers())).capacity);
  }
}

TEST_CASE("Algorithm 1 serves every demand of total 4") {
  for (const auto& lambda : sum_four_vectors()) {
    CAPTURE(lambda[0]);
    CAPTURE(lambda[1]);
    CAPTURE(lambda[2]);
    const auto r = algorithm1(lambda);
    CHECK(r.matching.size() == 4);
    CHECK(is_matching(r.graph, r.matching));
    const auto counts = color_counts(r.graph, r.matching);
    for (std::size_t i = 0; i < 3; ++i) CHECK(Rational(counts[i]) == lambda[i]);
  }
}

TEST_CASE("Algorithm 1 worked cases") {
  // (2,2,0): the loop through {4,5} and {6,7} turns into {4,6} and {5,7}
  const auto a = algorithm1(dv({2, 2, 0}));
  std::set<std::vector<std::size_t>> sets_a;
  for (auto e : a.matching.edges) sets_a.insert(servers_of(a, e));
  CHECK(sets_a == std::set<std::vector<std::size_t>>{{1}, {2, 3}, {4, 6}, {5, 7}});

  // (2,1,1): systematic swap of {2,3} for {2} and a loop giving {4}
  const auto b = algorithm1(dv({2, 1, 1}));
  std::set<std::vector<std::size_t>> sets_b;
  for (auto e : b.matching.edges) sets_b.insert(servers_of(b, e));
  CHECK(sets_b == std::set<std::vector<std::size_t>>{{1}, {6, 7}, {2}, {4}});
}

TEST_CASE("Algorithm 1 input errors") {
  CHECK_THROWS_AS(algorithm1(dv({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(algorithm1(dv({2, 1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(algorithm1(dv({5, -1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(algorithm1({Rational(3, 2), Rational(5, 2), Rational(0)}), std::invalid_argument);
}
