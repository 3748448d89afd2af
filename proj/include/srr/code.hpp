#pragma once

#include "srr/gf.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

namespace srr {

/// Generator matrix of a linear [n,k]_q code. Rows are files, columns are servers.
/// Column indices are 0-based internally and printed 1-based.
class GeneratorMatrix {
 public:
  using Entries = MatrixX<std::int64_t>;

  /// Entries are reduced mod q. Throws std::invalid_argument on an empty matrix.
  GeneratorMatrix(FieldModulus q, Entries entries);

  const FieldModulus& modulus() const { return q_; }
  std::size_t files() const { return static_cast<std::size_t>(entries_.rows()); }
  std::size_t servers() const { return static_cast<std::size_t>(entries_.cols()); }
  const Entries& entries() const { return entries_; }
  GfColumn column(std::size_t j) const { return entries_.col(static_cast<Eigen::Index>(j)); }
  FieldElement at(std::size_t file, std::size_t server) const;

  friend bool operator==(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    return a.q_ == b.q_ && a.entries_ == b.entries_;
  }

 private:
  FieldModulus q_;
  Entries entries_;
};

/// A set of one or two servers whose stored symbols combine to e_file.
struct RecoverySet {
  std::size_t file = 0;
  std::vector<std::size_t> servers;  // sorted ascending, size 1 or 2
  std::map<std::size_t, FieldElement> coefficients;

  bool is_systematic() const { return servers.size() == 1; }
};

/// Recovery sets grouped by file, in a fixed order: singletons first, then pairs
/// in lexicographic order of their server indices.
class RecoverySetCatalog {
 public:
  RecoverySetCatalog(std::size_t servers, std::vector<std::vector<RecoverySet>> per_file);

  std::size_t files() const { return per_file_.size(); }
  std::size_t servers() const { return servers_; }
  const std::vector<RecoverySet>& sets(std::size_t file) const { return per_file_.at(file); }
  std::size_t count(std::size_t file) const { return per_file_.at(file).size(); }
  /// Sum of all t_i; also the number of graph edges and allocation entries.
  std::size_t total() const;
  /// Flat index of set j of file i in catalog order.
  std::size_t flat_index(std::size_t file, std::size_t j) const;
  /// All sets in catalog order.
  std::vector<RecoverySet> flatten() const;

 private:
  std::size_t servers_;
  std::vector<std::vector<RecoverySet>> per_file_;
};

/// Parses {"q": int, "matrix": [[int, ...], ...]}.
GeneratorMatrix parse_generator_matrix(std::string_view text);
GeneratorMatrix generator_matrix_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const GeneratorMatrix& g);

RecoverySetCatalog enumerate_recovery_sets(const GeneratorMatrix& g);

/// True when sum over coefficients of alpha_j * g_j equals e_file.
bool verify_recovery_set(const GeneratorMatrix& g, const RecoverySet& set);

/// Binary simplex code [2^k - 1, k]; column j (1-based) holds the bits of j,
/// row 1 least significant. Requires 2 <= k <= 10.
GeneratorMatrix simplex_code(int k);

}  // namespace srr
