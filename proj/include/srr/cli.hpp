#pragma once

#include "srr/batchpir.hpp"
#include "srr/code.hpp"
#include "srr/graph.hpp"
#include "srr/region.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace srr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;

/// Runs one subcommand. `args` excludes the program name. JSON goes to `out`,
/// diagnostics and the --verbose summary to `err`; `in` backs "--code -".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// JSON views shared by the subcommands. Rationals are always "p/q" strings.
nlohmann::ordered_json rationals_to_json(const RationalVector& v);
nlohmann::ordered_json allocation_to_json(const RecoverySetCatalog& c, const Allocation& a);
nlohmann::ordered_json region_to_json(const RegionHRep& r);
nlohmann::ordered_json batch_to_json(const BatchReport& r);
nlohmann::ordered_json verdict_to_json(const BatchVerdict& v);
nlohmann::ordered_json pir_to_json(const RecoverySetCatalog& c, const PirReport& r);
/// Code, graph, bounds and capacity summary; batch and PIR sections optional.
nlohmann::ordered_json analyze(const GeneratorMatrix& g, const RationalVector& mu, bool with_batch_pir);

}  // namespace srr::cli
