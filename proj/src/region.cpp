#include "srr/region.hpp"

#include "srr/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace srr {

namespace {

void check_dimensions(const RecoverySetCatalog& catalog, const RationalVector& mu) {
  if (mu.size() != catalog.servers()) {
    throw std::invalid_argument("capacity vector has " + std::to_string(mu.size()) +
                                " entries, expected " + std::to_string(catalog.servers()));
  }
  for (const auto& m : mu) {
    if (m < 0) throw std::invalid_argument("capacities must be nonnegative");
  }
}

void check_demand(const RecoverySetCatalog& catalog, const DemandVector& lambda) {
  if (lambda.size() != catalog.files()) {
    throw std::invalid_argument("demand vector has " + std::to_string(lambda.size()) +
                                " entries, expected " + std::to_string(catalog.files()));
  }
  for (const auto& l : lambda) {
    if (l < 0) throw std::invalid_argument("demands must be nonnegative");
  }
}

/// Capacity rows (1b): for every server, the shares of the recovery sets using it.
void add_capacity_rows(RationalProgram& lp, const RecoverySetCatalog& catalog, const RationalVector& mu) {
  const auto sets = catalog.flatten();
  for (std::size_t l = 0; l < catalog.servers(); ++l) {
    RationalVector row(sets.size(), Rational(0));
    bool any = false;
    for (std::size_t e = 0; e < sets.size(); ++e) {
      if (std::find(sets[e].servers.begin(), sets[e].servers.end(), l) != sets[e].servers.end()) {
        row[e] = 1;
        any = true;
      }
    }
    if (any) lp.add_constraint(std::move(row), Relation::LessEqual, mu[l]);
  }
}

}  // namespace

RationalVector unit_capacities(std::size_t n) { return RationalVector(n, Rational(1)); }

DemandVector demand_from_allocation(const RecoverySetCatalog& catalog, const Allocation& a) {
  if (a.shares.size() != catalog.total()) {
    throw std::invalid_argument("allocation length does not match the catalog");
  }
  DemandVector out(catalog.files(), Rational(0));
  std::size_t e = 0;
  for (std::size_t i = 0; i < catalog.files(); ++i) {
    for (std::size_t j = 0; j < catalog.count(i); ++j) out[i] += a.shares[e++];
  }
  return out;
}

bool is_valid_allocation(const RecoverySetCatalog& catalog, const RationalVector& mu,
                         const DemandVector& lambda, const Allocation& a) {
  if (a.shares.size() != catalog.total() || mu.size() != catalog.servers() ||
      lambda.size() != catalog.files()) {
    return false;
  }
  if (std::any_of(a.shares.begin(), a.shares.end(), [](const Rational& s) { return s < 0; })) return false;
  if (demand_from_allocation(catalog, a) != lambda) return false;
  RationalVector load(catalog.servers(), Rational(0));
  const auto sets = catalog.flatten();
  for (std::size_t e = 0; e < sets.size(); ++e) {
    for (std::size_t l : sets[e].servers) load[l] += a.shares[e];
  }
  for (std::size_t l = 0; l < load.size(); ++l) {
    if (load[l] > mu[l]) return false;
  }
  return true;
}

std::optional<Allocation> membership(const RecoverySetCatalog& catalog, const RationalVector& mu,
                                     const DemandVector& lambda) {
  check_dimensions(catalog, mu);
  check_demand(catalog, lambda);
  const std::size_t m = catalog.total();
  RationalProgram lp(m);
  std::size_t e = 0;
  for (std::size_t i = 0; i < catalog.files(); ++i) {
    RationalVector row(m, Rational(0));
    for (std::size_t j = 0; j < catalog.count(i); ++j) row[e++] = 1;
    lp.add_constraint(std::move(row), Relation::Equal, lambda[i]);
  }
  add_capacity_rows(lp, catalog, mu);
  auto point = feasible(lp);
  if (!point) return std::nullopt;
  return Allocation{std::move(*point)};
}

CapacityResult capacity(const RecoverySetCatalog& catalog, const RationalVector& mu) {
  check_dimensions(catalog, mu);
  const std::size_t m = catalog.total();
  RationalProgram lp(m);
  lp.set_objective(RationalVector(m, Rational(1)));
  add_capacity_rows(lp, catalog, mu);
  auto outcome = solve_max(lp);
  if (outcome.status != LPStatus::Optimal) {
    throw std::logic_error("capacity LP must be feasible and bounded");
  }
  Allocation witness{std::move(outcome.assignment)};
  DemandVector demand = demand_from_allocation(catalog, witness);
  return {outcome.value, std::move(demand), std::move(witness)};
}

Rational capacity_via_matching(const RecoverySetCatalog& catalog) {
  return fractional_matching_number(build_graph(catalog)).first;
}

Rational capacity_via_matching(const RecoverySetCatalog& catalog, const RationalVector& mu) {
  check_dimensions(catalog, mu);
  if (std::any_of(mu.begin(), mu.end(), [](const Rational& m) { return m != 1; })) {
    throw std::invalid_argument("matching equivalence holds only for unit service rates");
  }
  return capacity_via_matching(catalog);
}

namespace {

class DisjointSetSearch {
 public:
  DisjointSetSearch(const RecoverySetCatalog& catalog, std::vector<std::size_t> demand)
      : catalog_(catalog), demand_(std::move(demand)), used_(catalog.servers(), false) {}

  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> run() {
    for (std::size_t i = 0; i < demand_.size(); ++i) {
      if (demand_[i] > catalog_.count(i)) return std::nullopt;
    }
    if (search(0, 0, demand_.empty() ? 0 : demand_[0])) return chosen_;
    return std::nullopt;
  }

 private:
  bool fits(const RecoverySet& s) const {
    return std::none_of(s.servers.begin(), s.servers.end(), [&](std::size_t l) { return used_[l]; });
  }

  void mark(const RecoverySet& s, bool value) {
    for (std::size_t l : s.servers) used_[l] = value;
  }

  bool search(std::size_t file, std::size_t start, std::size_t need) {
    if (need == 0) {
      const std::size_t next = file + 1;
      if (next == demand_.size()) return true;
      return search(next, 0, demand_[next]);
    }
    const auto& sets = catalog_.sets(file);
    for (std::size_t j = start; j + need <= sets.size(); ++j) {
      if (!fits(sets[j])) continue;
      mark(sets[j], true);
      chosen_.emplace_back(file, j);
      if (search(file, j + 1, need - 1)) return true;
      chosen_.pop_back();
      mark(sets[j], false);
    }
    return false;
  }

  const RecoverySetCatalog& catalog_;
  std::vector<std::size_t> demand_;
  std::vector<bool> used_;
  std::vector<std::pair<std::size_t, std::size_t>> chosen_;
};

}  // namespace

std::optional<Allocation> integral_membership(const RecoverySetCatalog& catalog,
                                              const DemandVector& lambda) {
  check_demand(catalog, lambda);
  std::vector<std::size_t> demand;
  for (const auto& l : lambda) {
    if (!is_integer(l)) throw std::invalid_argument("integral membership needs integer demands");
    if (l > catalog.servers()) return std::nullopt;
    demand.push_back(static_cast<std::size_t>(boost::multiprecision::numerator(l).convert_to<unsigned long>()));
  }
  const auto chosen = DisjointSetSearch(catalog, std::move(demand)).run();
  if (!chosen) return std::nullopt;
  Allocation a{RationalVector(catalog.total(), Rational(0))};
  for (const auto& [file, j] : *chosen) a.shares[catalog.flat_index(file, j)] = 1;
  return a;
}

// ---------------------------------------------------------------------------
// Projection

namespace {

/// Inequality coefficients . x <= rhs. All variables are implicitly nonnegative.
struct Row {
  RationalVector coefficients;
  Rational rhs;

  friend bool operator==(const Row& a, const Row& b) {
    return a.coefficients == b.coefficients && a.rhs == b.rhs;
  }
  friend bool operator<(const Row& a, const Row& b) {
    return std::tie(a.coefficients, a.rhs) < std::tie(b.coefficients, b.rhs);
  }
};

/// Scales a row to coprime integers, keeping the direction of the inequality.
Row normalized(Row r) {
  BigInt lcm_den = 1;
  auto fold_den = [&](const Rational& v) {
    lcm_den = boost::multiprecision::lcm(lcm_den, BigInt(boost::multiprecision::denominator(v)));
  };
  for (const auto& c : r.coefficients) fold_den(c);
  fold_den(r.rhs);
  BigInt g = 0;
  auto fold_num = [&](const Rational& v) {
    const BigInt scaled = BigInt(boost::multiprecision::numerator(v)) * (lcm_den / BigInt(boost::multiprecision::denominator(v)));
    g = boost::multiprecision::gcd(g, BigInt(abs(scaled)));
  };
  for (const auto& c : r.coefficients) fold_num(c);
  fold_num(r.rhs);
  if (g == 0) return r;
  const Rational factor = Rational(lcm_den) / Rational(g);
  for (auto& c : r.coefficients) c *= factor;
  r.rhs *= factor;
  return r;
}

/// Redundant when coefficients are all <= 0 and rhs >= 0 (given x >= 0), or when the
/// other rows already cap its left side at rhs.
std::vector<Row> remove_redundant(std::vector<Row> rows, std::size_t vars) {
  std::set<Row> unique;
  std::vector<Row> kept;
  for (auto& r : rows) {
    Row n = normalized(std::move(r));
    const bool trivially_true =
        n.rhs >= 0 && std::all_of(n.coefficients.begin(), n.coefficients.end(),
                                  [](const Rational& c) { return c <= 0; });
    if (trivially_true) continue;
    if (unique.insert(n).second) kept.push_back(std::move(n));
  }
  std::sort(kept.begin(), kept.end());

  std::vector<bool> alive(kept.size(), true);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    RationalProgram lp(vars);
    lp.set_objective(kept[r].coefficients);
    for (std::size_t o = 0; o < kept.size(); ++o) {
      if (o != r && alive[o]) lp.add_constraint(kept[o].coefficients, Relation::LessEqual, kept[o].rhs);
    }
    const auto outcome = solve_max(lp);
    if (outcome.status == LPStatus::Optimal && outcome.value <= kept[r].rhs) alive[r] = false;
  }
  std::vector<Row> out;
  for (std::size_t r = 0; r < kept.size(); ++r) {
    if (alive[r]) out.push_back(std::move(kept[r]));
  }
  return out;
}

/// Eliminates variable `x` from rows, using x >= 0 as its implicit lower bound.
std::vector<Row> eliminate(const std::vector<Row>& rows, std::size_t x) {
  std::vector<const Row*> pos, neg;
  std::vector<Row> out;
  for (const auto& r : rows) {
    if (r.coefficients[x] > 0) {
      pos.push_back(&r);
      // Pairing with the lower bound 0 simply drops the x term.
      Row dropped = r;
      dropped.coefficients[x] = 0;
      out.push_back(std::move(dropped));
    } else if (r.coefficients[x] < 0) {
      neg.push_back(&r);
    } else {
      out.push_back(r);
    }
  }
  for (const Row* p : pos) {
    for (const Row* q : neg) {
      const Rational wp = -q->coefficients[x];
      const Rational wq = p->coefficients[x];
      Row combo{RationalVector(p->coefficients.size()), wp * p->rhs + wq * q->rhs};
      for (std::size_t j = 0; j < combo.coefficients.size(); ++j) {
        combo.coefficients[j] = wp * p->coefficients[j] + wq * q->coefficients[j];
      }
      combo.coefficients[x] = 0;
      out.push_back(std::move(combo));
    }
  }
  return out;
}

/// Unique solution of a square system by exact Gaussian elimination, if any.
std::optional<RationalVector> solve_square(MatrixX<Rational> a, VectorX<Rational> b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      std::swap(b(piv), b(col));
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col) / a(col, col);
      a.row(r) -= f * a.row(col);
      b(r) -= f * b(col);
    }
  }
  RationalVector x(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = b(i) / a(i, i);
  return x;
}

std::vector<RationalVector> extreme_points(const std::vector<HalfSpace>& hs, std::size_t k) {
  // Candidate facets: the half-spaces plus lambda_i >= 0 written as -lambda_i <= 0.
  std::vector<HalfSpace> planes = hs;
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector c(k, Rational(0));
    c[i] = -1;
    planes.push_back({std::move(c), Rational(0)});
  }
  RegionHRep probe{k, hs, {}};
  std::set<RationalVector> points;
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t from) {
    if (depth == k) {
      MatrixX<Rational> a(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
      VectorX<Rational> b(static_cast<Eigen::Index>(k));
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = planes[pick[r]].coefficients[c];
        b(static_cast<Eigen::Index>(r)) = planes[pick[r]].rhs;
      }
      if (auto x = solve_square(std::move(a), std::move(b)); x && probe.contains(*x)) points.insert(*x);
      return;
    }
    for (std::size_t p = from; p < planes.size(); ++p) {
      pick[depth] = p;
      choose(depth + 1, p + 1);
    }
  };
  choose(0, 0);
  return {points.begin(), points.end()};
}

}  // namespace

bool RegionHRep::contains(const DemandVector& lambda) const {
  if (lambda.size() != dimension) return false;
  if (std::any_of(lambda.begin(), lambda.end(), [](const Rational& l) { return l < 0; })) return false;
  return std::all_of(half_spaces.begin(), half_spaces.end(), [&](const HalfSpace& h) {
    Rational lhs(0);
    for (std::size_t i = 0; i < dimension; ++i) lhs += h.coefficients[i] * lambda[i];
    return lhs <= h.rhs;
  });
}

RegionHRep project_region(const RecoverySetCatalog& catalog, const RationalVector& mu,
                          std::size_t k_limit) {
  check_dimensions(catalog, mu);
  const std::size_t k = catalog.files();
  if (k_limit > 3) throw std::invalid_argument("k_limit may not exceed 3");
  if (k > k_limit) {
    throw GuardError("region projection supports at most " + std::to_string(k_limit) + " files, code has " +
                     std::to_string(k));
  }
  const std::size_t m = catalog.total();
  // Variables: shares 0..m-1, then demands m..m+k-1. The first share of each file is
  // substituted away using lambda_i - sum of the other shares.
  const std::size_t vars = m + k;
  std::vector<std::optional<RationalVector>> expr(m);
  for (std::size_t i = 0; i < k; ++i) {
    if (catalog.count(i) == 0) continue;
    RationalVector e(vars, Rational(0));
    e[m + i] = 1;
    for (std::size_t j = 1; j < catalog.count(i); ++j) e[catalog.flat_index(i, j)] = -1;
    expr[catalog.flat_index(i, 0)] = std::move(e);
  }
  auto share_expr = [&](std::size_t e) {
    if (expr[e]) return *expr[e];
    RationalVector unit(vars, Rational(0));
    unit[e] = 1;
    return unit;
  };

  std::vector<Row> rows;
  const auto sets = catalog.flatten();
  for (std::size_t l = 0; l < catalog.servers(); ++l) {
    Row r{RationalVector(vars, Rational(0)), mu[l]};
    bool any = false;
    for (std::size_t e = 0; e < sets.size(); ++e) {
      if (std::find(sets[e].servers.begin(), sets[e].servers.end(), l) == sets[e].servers.end()) continue;
      const auto ex = share_expr(e);
      for (std::size_t v = 0; v < vars; ++v) r.coefficients[v] += ex[v];
      any = true;
    }
    if (any) rows.push_back(std::move(r));
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (!expr[e]) continue;
    Row r{*expr[e], Rational(0)};  // substituted share >= 0
    for (auto& c : r.coefficients) c = -c;
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (catalog.count(i) != 0) continue;
    Row r{RationalVector(vars, Rational(0)), Rational(0)};  // no recovery set: lambda_i <= 0
    r.coefficients[m + i] = 1;
    rows.push_back(std::move(r));
  }
  rows = remove_redundant(std::move(rows), vars);

  std::set<std::size_t> pending;
  for (std::size_t e = 0; e < m; ++e) {
    if (!expr[e]) pending.insert(e);
  }
  while (!pending.empty()) {
    std::size_t best = *pending.begin();
    std::size_t best_cost = SIZE_MAX;
    for (std::size_t x : pending) {
      std::size_t p = 0, n = 0;
      for (const auto& r : rows) {
        if (r.coefficients[x] > 0) ++p;
        if (r.coefficients[x] < 0) ++n;
      }
      if (p * n < best_cost) {
        best_cost = p * n;
        best = x;
      }
    }
    pending.erase(best);
    rows = remove_redundant(eliminate(rows, best), vars);
  }

  RegionHRep out;
  out.dimension = k;
  for (const auto& r : rows) {
    out.half_spaces.push_back({RationalVector(r.coefficients.begin() + static_cast<std::ptrdiff_t>(m), r.coefficients.end()), r.rhs});
  }
  std::sort(out.half_spaces.begin(), out.half_spaces.end(), [](const HalfSpace& a, const HalfSpace& b) {
    return std::tie(b.coefficients, b.rhs) < std::tie(a.coefficients, a.rhs);
  });
  out.extreme_points = extreme_points(out.half_spaces, k);
  return out;
}

}  // namespace srr
