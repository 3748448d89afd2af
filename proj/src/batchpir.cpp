#include "srr/batchpir.hpp"

#include "srr/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace srr {

namespace {

/// C(t + k - 1, k - 1), saturating at limit + 1.
std::size_t composition_count(std::size_t t, std::size_t k, std::size_t limit) {
  BigInt c = 1;
  for (std::size_t i = 1; i < k; ++i) {
    c = c * BigInt(t + i) / BigInt(i);
    if (c > limit) return limit + 1;
  }
  return c.convert_to<std::size_t>();
}

}  // namespace

BatchVerdict is_batch_t(const RecoverySetCatalog& catalog, std::size_t t) {
  if (t == 0) throw std::invalid_argument("batch size t must be at least 1");
  const std::size_t k = catalog.files();
  const std::size_t count = composition_count(t, k, kBatchEnumerationLimit);
  if (count > kBatchEnumerationLimit) {
    throw GuardError("batch check for t=" + std::to_string(t) + " needs more than " +
                     std::to_string(kBatchEnumerationLimit) + " demand vectors");
  }

  BatchVerdict verdict;
  verdict.t = t;
  verdict.all_served = true;
  DemandVector lambda(k, Rational(0));
  std::function<bool(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t left) {
    if (i + 1 == k) {
      lambda[i] = left;
      ++verdict.vectors_checked;
      if (!integral_membership(catalog, lambda)) {
        verdict.all_served = false;
        verdict.first_failure = lambda;
        return false;
      }
      return true;
    }
    for (std::size_t v = left + 1; v-- > 0;) {
      lambda[i] = v;
      if (!walk(i + 1, left - v)) return false;
    }
    lambda[i] = 0;
    return true;
  };
  walk(0, t);
  return verdict;
}

BatchReport batch_t_max(const RecoverySetCatalog& catalog) {
  const Rational mf = fractional_matching_number(build_graph(catalog)).first;
  const BigInt cutoff = boost::multiprecision::numerator(mf) / boost::multiprecision::denominator(mf);
  const auto limit = cutoff.convert_to<std::size_t>();

  BatchReport report;
  for (std::size_t t = 1; t <= limit + 1; ++t) {
    report.verdicts.push_back(is_batch_t(catalog, t));
    if (!report.verdicts.back().all_served) break;
    report.t_max = t;
  }
  return report;
}

PirReport pir_t(const RecoverySetCatalog& catalog) {
  const ServiceGraph g = build_graph(catalog);
  PirReport report;
  for (std::size_t i = 0; i < catalog.files(); ++i) {
    const ServiceGraph sub = g.color_subgraph(i);
    const Matching m = max_matching(sub);
    std::vector<std::size_t> family;
    for (std::size_t e : m.edges) family.push_back(sub.edge(e).set);
    std::sort(family.begin(), family.end());
    report.per_file.push_back(m.size());
    report.families.push_back(std::move(family));
  }
  report.t_pir = report.per_file.empty() ? 0 : *std::min_element(report.per_file.begin(), report.per_file.end());
  return report;
}

std::vector<std::size_t> color_counts(const ServiceGraph& g, const Matching& m) {
  std::vector<std::size_t> counts(g.files(), 0);
  for (std::size_t e : m.edges) ++counts[g.edge(e).file];
  return counts;
}

namespace {

class SwapSearch {
 public:
  SwapSearch(const ServiceGraph& g, std::size_t base_color) : g_(g), base_(base_color) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).file == base_) chosen_.insert(e);
    }
  }

  /// Swap in file's systematic set, dropping the base-color edge at its server.
  void systematic(std::size_t file) {
    const auto sys = std::find_if(g_.edges().begin(), g_.edges().end(), [&](const ServiceEdge& e) {
      return e.file == file && (g_.vertex(e.u).dummy || g_.vertex(e.v).dummy);
    });
    if (sys == g_.edges().end()) throw std::logic_error("file has no systematic recovery set");
    const std::size_t server = g_.vertex(sys->u).dummy ? sys->v : sys->u;
    const auto drop = std::find_if(chosen_.begin(), chosen_.end(), [&](std::size_t e) {
      return g_.edge(e).file == base_ && (g_.edge(e).u == server || g_.edge(e).v == server);
    });
    if (drop == chosen_.end()) throw std::logic_error("no base-color edge at the systematic server");
    chosen_.erase(drop);
    chosen_.insert(static_cast<std::size_t>(sys - g_.edges().begin()));
  }

  /// Replace two base-color edges by two file-color edges closing a 4-cycle with them.
  void loop(std::size_t file) {
    std::vector<std::size_t> base_edges;
    for (std::size_t e : chosen_) {
      if (g_.edge(e).file == base_) base_edges.push_back(e);
    }
    for (std::size_t a = 0; a < base_edges.size(); ++a) {
      for (std::size_t b = a + 1; b < base_edges.size(); ++b) {
        if (auto pair = closing_pair(base_edges[a], base_edges[b], file)) {
          chosen_.erase(base_edges[a]);
          chosen_.erase(base_edges[b]);
          chosen_.insert(pair->first);
          chosen_.insert(pair->second);
          return;
        }
      }
    }
    throw std::logic_error("no alternating 4-cycle found for file " + std::to_string(file + 1));
  }

  Matching result() const { return Matching{{chosen_.begin(), chosen_.end()}}; }

 private:
  bool joins(std::size_t e, std::size_t x, std::size_t y) const {
    const auto& ed = g_.edge(e);
    return (ed.u == x && ed.v == y) || (ed.u == y && ed.v == x);
  }

  /// Two file-color edges f1 < f2 such that f1, f2 each link an endpoint of e1 to an
  /// endpoint of e2 and together cover all four endpoints.
  std::optional<std::pair<std::size_t, std::size_t>> closing_pair(std::size_t e1, std::size_t e2,
                                                                  std::size_t file) const {
    const auto& x = g_.edge(e1);
    const auto& y = g_.edge(e2);
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (const auto& [p, q, r, s] : {std::array{x.u, y.u, x.v, y.v}, std::array{x.u, y.v, x.v, y.u}}) {
      std::optional<std::size_t> f1, f2;
      for (std::size_t e = 0; e < g_.edge_count(); ++e) {
        if (g_.edge(e).file != file) continue;
        if (!f1 && joins(e, p, q)) f1 = e;
        if (!f2 && joins(e, r, s)) f2 = e;
      }
      if (f1 && f2) {
        std::pair cand{std::min(*f1, *f2), std::max(*f1, *f2)};
        if (!best || cand < *best) best = cand;
      }
    }
    return best;
  }

  const ServiceGraph& g_;
  std::size_t base_;
  std::set<std::size_t> chosen_;
};

}  // namespace

Algorithm1Result algorithm1(const DemandVector& lambda) {
  if (lambda.size() != 3) throw std::invalid_argument("algorithm1 needs a demand vector of length 3");
  Rational total(0);
  for (const auto& l : lambda) {
    if (l < 0 || !is_integer(l)) throw std::invalid_argument("algorithm1 needs nonnegative integer demands");
    total += l;
  }
  if (total != 4) throw std::invalid_argument("algorithm1 needs demands summing to 4");

  RecoverySetCatalog catalog = enumerate_recovery_sets(simplex_code(3));
  ServiceGraph graph = build_graph(catalog);

  // Roles: the most-demanded file provides the starting matching. The code is
  // symmetric in its files, so roles map onto colors directly.
  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lambda[a] > lambda[b]; });

  SwapSearch search(graph, order[0]);
  for (std::size_t role = 1; role < 3; ++role) {
    const std::size_t file = order[role];
    const auto demand = boost::multiprecision::numerator(lambda[file]).convert_to<std::size_t>();
    if (demand % 2 == 1) {
      search.systematic(file);
      for (std::size_t l = 0; l < (demand - 1) / 2; ++l) search.loop(file);
    } else {
      for (std::size_t l = 0; l < demand / 2; ++l) search.loop(file);
    }
  }
  Matching m = search.result();

  const auto counts = color_counts(graph, m);
  for (std::size_t i = 0; i < 3; ++i) {
    if (counts[i] != numerator(lambda[i]).convert_to<std::size_t>() || !is_matching(graph, m)) {
      throw std::logic_error("algorithm1 produced an inconsistent matching");
    }
  }
  return {std::move(catalog), std::move(graph), std::move(m)};
}

}  // namespace srr
