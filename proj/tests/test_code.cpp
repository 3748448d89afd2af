#include "doctest.h"

#include "support.hpp"

#include "srr/code.hpp"

#include <numeric>
#include <random>

using namespace srr;
using test::make_code;

namespace {

using ServerSets = std::vector<std::vector<std::size_t>>;

/// 1-based server sets of one file, in catalog order.
ServerSets labels(const RecoverySetCatalog& c, std::size_t file) {
  ServerSets out;
  for (const auto& s : c.sets(file)) {
    std::vector<std::size_t> v;
    for (auto l : s.servers) v.push_back(l + 1);
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("parse generator matrix") {
  const auto g = parse_generator_matrix(R"({"q": 2, "matrix": [[1,0,1,0,1,0,1],[0,1,1,0,0,1,1],[0,0,0,1,1,1,1]]})");
  CHECK(g.files() == 3);
  CHECK(g.servers() == 7);
  CHECK(g == test::simplex3());

  const auto id = parse_generator_matrix(R"({"q": 2, "matrix": [[1,0],[0,1]]})");
  CHECK(id.files() == 2);
  CHECK(id.servers() == 2);

  // entries reduced mod q
  const auto r = parse_generator_matrix(R"({"q": 3, "matrix": [[4,-1,3]]})");
  CHECK(r.at(0, 0).value() == 1);
  CHECK(r.at(0, 1).value() == 2);
  CHECK(r.at(0, 2).value() == 0);
}

TEST_CASE("parse generator matrix errors") {
  CHECK_THROWS_WITH_AS(parse_generator_matrix(R"({"q": 4, "matrix": [[1]]})"), "q must be prime, got 4",
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_matrix(R"({"q": 2, "matrix": [[1,0],[1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_matrix(R"({"q": 2, "matrix": [[1,0.5]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_matrix(R"({"q": 2, "matrix": [[1,"a"]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_matrix(R"({"q": 2, "matrix": []})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_matrix(R"({"q": 2, "matrix": [[]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_matrix(R"({"q": 2, "matrix": [[1,1],[0,0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_matrix(R"({"matrix": [[1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_matrix("not json"), std::invalid_argument);
}

TEST_CASE("JSON round trip") {
  const auto g = test::triangle_code();
  CHECK(generator_matrix_from_json(nlohmann::json::parse(to_json(g).dump())) == g);
}

TEST_CASE("recovery sets of the [7,3] simplex code") {
  const auto c = enumerate_recovery_sets(test::simplex3());
  CHECK(labels(c, 0) == ServerSets{{1}, {2, 3}, {4, 5}, {6, 7}});
  CHECK(labels(c, 1) == ServerSets{{2}, {1, 3}, {4, 6}, {5, 7}});
  CHECK(labels(c, 2) == ServerSets{{4}, {1, 5}, {2, 6}, {3, 7}});
  CHECK(c.total() == 12);
}

TEST_CASE("recovery sets of small codes") {
  const auto id = enumerate_recovery_sets(test::identity_code(2));
  CHECK(labels(id, 0) == ServerSets{{1}});
  CHECK(labels(id, 1) == ServerSets{{2}});

  // Exhaustive by hand: singletons {1},{2},{3} and pairs {1,2},{1,3},{2,3} against e1, e2.
  const auto c = enumerate_recovery_sets(test::code_3_2());
  CHECK(labels(c, 0) == ServerSets{{1}, {2, 3}});
  CHECK(labels(c, 1) == ServerSets{{2}, {1, 3}});
}

TEST_CASE("one server pair may serve several files") {
  // GF(3) columns (1,1) and (1,2): 2g1 + 2g2 = e1 and 2g1 + g2 = e2.
  const auto g = make_code(3, {{1, 1}, {1, 2}});
  const auto c = enumerate_recovery_sets(g);
  CHECK(labels(c, 0) == ServerSets{{1, 2}});
  CHECK(labels(c, 1) == ServerSets{{1, 2}});
  for (std::size_t i = 0; i < 2; ++i) CHECK(verify_recovery_set(g, c.sets(i)[0]));
}

TEST_CASE("duplicate columns give distinct recovery sets") {
  // g2 = g3 = e2 + e1 style duplicate; {2,5} and {3,5} must both appear.
  const auto g = make_code(2, {{1, 1, 1, 0, 0}, {0, 1, 1, 1, 1}});
  const auto c = enumerate_recovery_sets(g);
  const auto f1 = labels(c, 0);
  CHECK(std::find(f1.begin(), f1.end(), std::vector<std::size_t>{2, 5}) != f1.end());
  CHECK(std::find(f1.begin(), f1.end(), std::vector<std::size_t>{3, 5}) != f1.end());
}

TEST_CASE("zero columns take part in no recovery set") {
  const auto c = enumerate_recovery_sets(make_code(2, {{1, 0, 0}, {0, 0, 1}}));
  CHECK(labels(c, 0) == ServerSets{{1}});
  CHECK(labels(c, 1) == ServerSets{{3}});
}

TEST_CASE("files without recovery sets are reported, not rejected") {
  const auto c = enumerate_recovery_sets(test::triangle_code());
  CHECK(c.count(0) == 3);
  CHECK(c.count(1) == 0);
  CHECK(c.count(2) == 0);
}

TEST_CASE("simplex code construction") {
  CHECK(simplex_code(3) == test::simplex3());

  const auto s2 = simplex_code(2);
  CHECK(s2.servers() == 3);
  CHECK(s2 == make_code(2, {{1, 0, 1}, {0, 1, 1}}));

  const auto s4 = simplex_code(4);
  CHECK(s4.servers() == 15);
  std::set<std::vector<std::int64_t>> cols;
  for (std::size_t j = 0; j < 15; ++j) {
    const GfColumn c = s4.column(j);
    CHECK_FALSE(is_zero_column(c));
    cols.insert({c.data(), c.data() + c.size()});
  }
  CHECK(cols.size() == 15);

  CHECK_THROWS_AS(simplex_code(1), std::invalid_argument);
  CHECK_THROWS_AS(simplex_code(11), std::invalid_argument);
}

TEST_CASE("simplex files have 2^(k-1) recovery sets") {
  for (int k = 2; k <= 6; ++k) {
    const auto c = enumerate_recovery_sets(simplex_code(k));
    for (std::size_t i = 0; i < c.files(); ++i) {
      CHECK(c.count(i) == (std::size_t{1} << (k - 1)));
      CHECK(c.sets(i).front().is_systematic());
    }
  }
}

TEST_CASE("catalog re-evaluates exactly and matches brute force on random codes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = trial % 2 ? test::random_code(rng, 3, 6) : test::random_rich_code(rng, 3, 6);
    const auto c = enumerate_recovery_sets(g);
    std::set<std::pair<std::size_t, std::vector<std::size_t>>> got;
    for (std::size_t i = 0; i < c.files(); ++i) {
      const auto& sets = c.sets(i);
      for (std::size_t j = 0; j < sets.size(); ++j) {
        CHECK(verify_recovery_set(g, sets[j]));
        CHECK(sets[j].file == i);
        got.insert({i, sets[j].servers});
        if (j > 0) {
          // singletons first, then lexicographic pairs
          const auto& prev = sets[j - 1];
          const bool ordered = prev.servers.size() < sets[j].servers.size() ||
                               (prev.servers.size() == sets[j].servers.size() && prev.servers < sets[j].servers);
          CHECK(ordered);
        }
      }
    }
    CHECK(got.size() == c.total());  // no duplicate server sets within a file
    CHECK(got == test::brute_force_recovery_sets(g));
  }
}

TEST_CASE("column permutation relabels the catalog") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = test::random_rich_code(rng, 3, 6);
    std::vector<std::size_t> perm(g.servers());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    GeneratorMatrix::Entries e(g.entries().rows(), g.entries().cols());
    for (std::size_t j = 0; j < perm.size(); ++j) e.col(static_cast<Eigen::Index>(perm[j])) = g.entries().col(static_cast<Eigen::Index>(j));
    const GeneratorMatrix h(g.modulus(), e);

    const auto cg = enumerate_recovery_sets(g);
    const auto ch = enumerate_recovery_sets(h);
    for (std::size_t i = 0; i < g.files(); ++i) {
      std::set<std::vector<std::size_t>> mapped, direct;
      for (const auto& s : cg.sets(i)) {
        std::vector<std::size_t> v;
        for (auto l : s.servers) v.push_back(perm[l]);
        std::sort(v.begin(), v.end());
        mapped.insert(v);
      }
      for (const auto& s : ch.sets(i)) direct.insert(s.servers);
      CHECK(mapped == direct);
    }
  }
}

TEST_CASE("catalog flat indexing") {
  const auto c = enumerate_recovery_sets(test::simplex3());
  CHECK(c.flat_index(0, 0) == 0);
  CHECK(c.flat_index(1, 2) == 6);
  CHECK(c.flat_index(2, 3) == 11);
  const auto flat = c.flatten();
  CHECK(flat.size() == 12);
  CHECK(flat[6].servers == std::vector<std::size_t>{3, 5});
}
