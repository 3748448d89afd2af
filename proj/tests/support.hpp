// Fixtures, random generators and brute-force oracles shared by the test suites.
// Oracles here deliberately avoid the library's algorithms: they enumerate.
#pragma once

#include "srr/code.hpp"
#include "srr/graph.hpp"
#include "srr/lp.hpp"
#include "srr/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace srr::test {

inline GeneratorMatrix make_code(std::int64_t q, const std::vector<std::vector<std::int64_t>>& rows) {
  GeneratorMatrix::Entries e(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.at(0).size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  }
  return GeneratorMatrix(FieldModulus(q), std::move(e));
}

/// The [7,3] binary simplex code as printed in the worked example.
inline GeneratorMatrix simplex3() {
  return make_code(2, {{1, 0, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}});
}

inline GeneratorMatrix identity_code(std::size_t k) {
  std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) rows[i][i] = 1;
  return make_code(2, rows);
}

/// Rows 101 / 011 over GF(2).
inline GeneratorMatrix code_3_2() { return make_code(2, {{1, 0, 1}, {0, 1, 1}}); }

/// Over GF(3): file 1 is recoverable from every pair of the three servers and no
/// other file is recoverable, so the graph is a single-color triangle.
inline GeneratorMatrix triangle_code() { return make_code(3, {{0, 1, 1}, {1, 1, 2}, {1, 1, 2}}); }

inline ServiceGraph single_edge_graph() {
  return ServiceGraph({{1, Rational(1), false}, {2, Rational(1), false}}, {{0, 1, 0, 0}}, 1);
}

inline ServiceGraph triangle_graph() {
  return ServiceGraph({{1, Rational(1), false}, {2, Rational(1), false}, {3, Rational(1), false}},
                      {{0, 1, 0, 0}, {1, 2, 0, 1}, {0, 2, 0, 2}}, 1);
}

/// Cycle on n real vertices, single color.
inline ServiceGraph cycle_graph(std::size_t n) {
  std::vector<ServiceVertex> v;
  std::vector<ServiceEdge> e;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back({i + 1, Rational(1), false});
    e.push_back({i, (i + 1) % n, 0, i});
  }
  return ServiceGraph(std::move(v), std::move(e), 1);
}

/// Random code with q in {2,3}, 1 <= k <= max_k, 1 <= n <= max_n; no all-zero rows.
inline GeneratorMatrix random_code(std::mt19937_64& rng, std::size_t max_k, std::size_t max_n,
                                   std::vector<std::int64_t> fields = {2, 3}) {
  std::uniform_int_distribution<std::size_t> kd(1, max_k), nd(1, max_n), fd(0, fields.size() - 1);
  const std::int64_t q = fields[fd(rng)];
  const std::size_t k = kd(rng);
  const std::size_t n = nd(rng);
  std::uniform_int_distribution<std::int64_t> vd(0, q - 1);
  while (true) {
    std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(n));
    bool ok = true;
    for (auto& row : rows) {
      for (auto& x : row) x = vd(rng);
      ok = ok && std::any_of(row.begin(), row.end(), [](std::int64_t x) { return x != 0; });
    }
    if (ok) return make_code(q, rows);
  }
}

/// Random code biased towards many recovery sets: columns drawn from unit vectors,
/// pair sums and random vectors.
inline GeneratorMatrix random_rich_code(std::mt19937_64& rng, std::size_t max_k, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> kd(1, max_k), nd(2, max_n);
  const std::int64_t q = std::uniform_int_distribution<int>(0, 1)(rng) ? 2 : 3;
  const std::size_t k = kd(rng), n = nd(rng);
  std::uniform_int_distribution<std::int64_t> vd(0, q - 1);
  std::uniform_int_distribution<std::size_t> id(0, k - 1), kind(0, 2);
  while (true) {
    std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(n, 0));
    for (std::size_t c = 0; c < n; ++c) {
      switch (kind(rng)) {
        case 0:
          rows[id(rng)][c] = 1;
          break;
        case 1:
          rows[id(rng)][c] = 1;
          rows[id(rng)][c] = std::max<std::int64_t>(1, vd(rng));
          break;
        default:
          for (std::size_t r = 0; r < k; ++r) rows[r][c] = vd(rng);
      }
    }
    const bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& row) {
      return std::any_of(row.begin(), row.end(), [](std::int64_t x) { return x != 0; });
    });
    if (ok) return make_code(q, rows);
  }
}

/// The fixed corpus used by the property suites: `count` codes, q in {2,3},
/// k <= 3, n <= 7, half of them drawn from the recovery-rich generator.
inline std::vector<GeneratorMatrix> property_corpus(std::size_t count, std::uint64_t seed = 20240611) {
  std::mt19937_64 rng(seed);
  std::vector<GeneratorMatrix> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(i % 2 == 0 ? random_code(rng, 3, 7) : random_rich_code(rng, 3, 7));
  }
  return out;
}

/// Oracle: every (file, server set) with |set| <= 2 admitting nonzero coefficients
/// that combine the columns to e_file, found by trying all coefficient tuples.
inline std::set<std::pair<std::size_t, std::vector<std::size_t>>> brute_force_recovery_sets(const GeneratorMatrix& g) {
  const std::int64_t q = g.modulus().value();
  const auto& m = g.entries();
  const std::size_t k = g.files(), n = g.servers();
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> out;
  auto check = [&](const std::vector<std::size_t>& servers, const std::vector<std::int64_t>& coef) {
    for (std::size_t i = 0; i < k; ++i) {
      bool hit = true;
      for (std::size_t r = 0; r < k && hit; ++r) {
        std::int64_t s = 0;
        for (std::size_t t = 0; t < servers.size(); ++t) {
          s += coef[t] * m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(servers[t]));
        }
        hit = (s % q) == (r == i ? 1 : 0);
      }
      if (hit) out.insert({i, servers});
    }
  };
  auto zero = [&](std::size_t j) { return m.col(static_cast<Eigen::Index>(j)).isZero(); };
  for (std::size_t a = 0; a < n; ++a) {
    if (zero(a)) continue;
    for (std::int64_t x = 1; x < q; ++x) check({a}, {x});
    for (std::size_t b = a + 1; b < n; ++b) {
      if (zero(b)) continue;
      for (std::int64_t x = 1; x < q; ++x) {
        for (std::int64_t y = 1; y < q; ++y) check({a, b}, {x, y});
      }
    }
  }
  return out;
}

/// Oracle: largest set of pairwise non-adjacent edges, by trying every subset.
inline std::size_t exhaustive_matching_number(const ServiceGraph& g) {
  const std::size_t m = g.edge_count();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<bool> used(g.vertex_count(), false);
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t e = 0; e < m && ok; ++e) {
      if (!((mask >> e) & 1U)) continue;
      const auto& ed = g.edge(e);
      ok = !used[ed.u] && !used[ed.v];
      used[ed.u] = used[ed.v] = true;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

/// Oracle: smallest vertex set touching every edge, by trying every subset.
inline std::size_t exhaustive_vertex_cover_number(const ServiceGraph& g) {
  const std::size_t nv = g.vertex_count();
  std::size_t best = nv;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nv); ++mask) {
    const bool covers = std::all_of(g.edges().begin(), g.edges().end(), [&](const ServiceEdge& e) {
      return ((mask >> e.u) & 1U) || ((mask >> e.v) & 1U);
    });
    if (covers) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

/// Exact Gaussian elimination; the unique solution of a square system if any.
inline std::optional<RationalVector> oracle_solve(std::vector<RationalVector> a, RationalVector b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = 0; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// Oracle for bounded programs (every variable has an upper bound): enumerate all
/// choices of n tight constraints among rows and bounds, keep feasible points,
/// take the best objective. nullopt means infeasible.
inline std::optional<Rational> vertex_enumeration_optimum(const RationalProgram& p) {
  const std::size_t n = p.variables();
  std::vector<std::pair<RationalVector, Rational>> planes;
  for (const auto& c : p.constraints()) planes.emplace_back(c.coefficients, c.rhs);
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector e(n, Rational(0));
    e[j] = 1;
    planes.emplace_back(e, p.lower_bounds()[j]);
    if (p.upper_bounds()[j]) planes.emplace_back(e, *p.upper_bounds()[j]);
  }
  std::optional<Rational> best;
  std::vector<std::size_t> pick(n);
  auto recurse = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == n) {
      std::vector<RationalVector> a;
      RationalVector b;
      for (std::size_t i : pick) {
        a.push_back(planes[i].first);
        b.push_back(planes[i].second);
      }
      auto x = oracle_solve(std::move(a), std::move(b));
      if (x && satisfies(p, *x)) {
        const Rational v = objective_value(p, *x);
        if (!best || v > *best) best = v;
      }
      return;
    }
    for (std::size_t i = from; i < planes.size(); ++i) {
      pick[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  recurse(recurse, 0, 0);
  return best;
}

inline Rational random_rational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> nd(0, max_num), dd(1, max_den);
  return Rational(nd(rng), dd(rng));
}

}  // namespace srr::test
