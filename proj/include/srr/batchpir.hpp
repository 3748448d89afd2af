#pragma once

#include "srr/code.hpp"
#include "srr/graph.hpp"
#include "srr/matching.hpp"
#include "srr/region.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace srr {

struct BatchVerdict {
  std::size_t t = 0;
  bool all_served = false;
  std::optional<DemandVector> first_failure;  // in enumeration order
  std::size_t vectors_checked = 0;
};

/// Batch parameter of a code with unit service rates, and the verdict for every
/// t that was examined (1, 2, ... up to the first failure).
struct BatchReport {
  std::size_t t_max = 0;
  std::vector<BatchVerdict> verdicts;
};

struct PirReport {
  std::size_t t_pir = 0;
  /// Per file: the maximum number of pairwise disjoint recovery sets and one
  /// family attaining it (indices into the file's catalog entries).
  std::vector<std::size_t> per_file;
  std::vector<std::vector<std::size_t>> families;
};

/// Upper limit on the number of demand vectors is_batch_t will enumerate.
inline constexpr std::size_t kBatchEnumerationLimit = 1'000'000;

/// Checks every integer demand vector with entries summing to t, in descending
/// lexicographic order ((t,0,...,0) first). Throws GuardError when there are more
/// than kBatchEnumerationLimit of them, std::invalid_argument when t == 0.
BatchVerdict is_batch_t(const RecoverySetCatalog& catalog, std::size_t t);

/// Largest t passing is_batch_t, searching t = 1, 2, ... up to floor(m_f) and then
/// recording the failing verdict at t_max + 1.
BatchReport batch_t_max(const RecoverySetCatalog& catalog);

PirReport pir_t(const RecoverySetCatalog& catalog);

struct Algorithm1Result {
  RecoverySetCatalog catalog;
  ServiceGraph graph;
  Matching matching;
};

/// Matching for demand (a, b, c), a + b + c = 4, on the [7,3] binary simplex code,
/// obtained from the four recovery sets of the most-demanded file by swapping in
/// systematic sets and 4-cycles. Throws std::invalid_argument on bad input and
/// std::logic_error if a required 4-cycle cannot be found.
Algorithm1Result algorithm1(const DemandVector& lambda);

/// Number of matching edges of each color.
std::vector<std::size_t> color_counts(const ServiceGraph& g, const Matching& m);

}  // namespace srr
