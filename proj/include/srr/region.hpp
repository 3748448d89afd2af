#pragma once

#include "srr/code.hpp"
#include "srr/graph.hpp"
#include "srr/lp.hpp"
#include "srr/matching.hpp"
#include "srr/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace srr {

/// Request rates lambda_1..lambda_k.
using DemandVector = RationalVector;

/// lambda_{i,j}: share of file i's demand sent to its j-th recovery set.
/// Stored flat in catalog order, so it is also a per-edge vector of the graph.
struct Allocation {
  RationalVector shares;

  const Rational& at(const RecoverySetCatalog& c, std::size_t file, std::size_t j) const {
    return shares.at(c.flat_index(file, j));
  }
};

/// Half-space coefficients . lambda <= rhs over lambda_1..lambda_k.
struct HalfSpace {
  RationalVector coefficients;
  Rational rhs;
};

/// Region as half-spaces (nonnegativity implied, not listed) plus its extreme points
/// in lexicographic order.
struct RegionHRep {
  std::size_t dimension = 0;
  std::vector<HalfSpace> half_spaces;
  std::vector<RationalVector> extreme_points;

  bool contains(const DemandVector& lambda) const;
};

struct CapacityResult {
  Rational capacity;
  DemandVector max_demand;
  Allocation witness;
};

/// Row sums of an allocation.
DemandVector demand_from_allocation(const RecoverySetCatalog& catalog, const Allocation& a);

/// True when `a` satisfies the row-sum, capacity and nonnegativity constraints for
/// demand `lambda` under capacities `mu`.
bool is_valid_allocation(const RecoverySetCatalog& catalog, const RationalVector& mu,
                         const DemandVector& lambda, const Allocation& a);

/// Witness allocation when lambda lies in the service rate region S(G, mu).
std::optional<Allocation> membership(const RecoverySetCatalog& catalog, const RationalVector& mu,
                                     const DemandVector& lambda);

/// Maximum total rate, one demand vector attaining it, and its allocation.
CapacityResult capacity(const RecoverySetCatalog& catalog, const RationalVector& mu);

/// m_f of the service graph; valid only for mu = 1_n, so there is no mu argument.
Rational capacity_via_matching(const RecoverySetCatalog& catalog);
/// Rejects anything other than mu = 1_n with std::invalid_argument.
Rational capacity_via_matching(const RecoverySetCatalog& catalog, const RationalVector& mu);

/// Chooses lambda_i pairwise server-disjoint recovery sets for every file at once
/// (unit capacities). Returns a 0/1 allocation or nullopt. Throws
/// std::invalid_argument for non-integer or negative entries.
std::optional<Allocation> integral_membership(const RecoverySetCatalog& catalog,
                                              const DemandVector& lambda);

/// Projects the allocation polytope onto the demand coordinates by Fourier-Motzkin
/// elimination. Throws GuardError when the code has more than `k_limit` files
/// (the limit itself may not exceed 3).
RegionHRep project_region(const RecoverySetCatalog& catalog, const RationalVector& mu,
                          std::size_t k_limit = 3);

/// Unit capacity vector of length n.
RationalVector unit_capacities(std::size_t n);

}  // namespace srr
