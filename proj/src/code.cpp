#include "srr/code.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace srr {

namespace {

GeneratorMatrix::Entries reduced(GeneratorMatrix::Entries e, std::int64_t q) {
  return e.unaryExpr([q](std::int64_t v) {
    v %= q;
    return v < 0 ? v + q : v;
  });
}

GfColumn unit_vector(std::size_t k, std::size_t i) {
  GfColumn e = GfColumn::Zero(static_cast<Eigen::Index>(k));
  e(static_cast<Eigen::Index>(i)) = 1;
  return e;
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(FieldModulus q, Entries entries)
    : q_(q), entries_(reduced(std::move(entries), q.value())) {
  if (entries_.rows() == 0 || entries_.cols() == 0) {
    throw std::invalid_argument("generator matrix must be non-empty");
  }
  for (Eigen::Index r = 0; r < entries_.rows(); ++r) {
    if ((entries_.row(r).array() == 0).all()) {
      throw std::invalid_argument("row " + std::to_string(r + 1) + " is all-zero");
    }
  }
}

FieldElement GeneratorMatrix::at(std::size_t file, std::size_t server) const {
  return {entries_(static_cast<Eigen::Index>(file), static_cast<Eigen::Index>(server)), q_};
}

RecoverySetCatalog::RecoverySetCatalog(std::size_t servers,
                                       std::vector<std::vector<RecoverySet>> per_file)
    : servers_(servers), per_file_(std::move(per_file)) {}

std::size_t RecoverySetCatalog::total() const {
  return std::accumulate(per_file_.begin(), per_file_.end(), std::size_t{0},
                         [](std::size_t acc, const auto& v) { return acc + v.size(); });
}

std::size_t RecoverySetCatalog::flat_index(std::size_t file, std::size_t j) const {
  std::size_t offset = 0;
  for (std::size_t i = 0; i < file; ++i) offset += per_file_.at(i).size();
  return offset + j;
}

std::vector<RecoverySet> RecoverySetCatalog::flatten() const {
  std::vector<RecoverySet> out;
  out.reserve(total());
  for (const auto& sets : per_file_) out.insert(out.end(), sets.begin(), sets.end());
  return out;
}

GeneratorMatrix generator_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("matrix")) {
    throw std::invalid_argument("code JSON must be an object with \"q\" and \"matrix\"");
  }
  if (!j["q"].is_number_integer()) throw std::invalid_argument("\"q\" must be an integer");
  const FieldModulus q(j["q"].get<std::int64_t>());
  const auto& rows = j["matrix"];
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix must be non-empty");
  const std::size_t k = rows.size();
  if (!rows[0].is_array() || rows[0].empty()) {
    throw std::invalid_argument("matrix must be non-empty");
  }
  const std::size_t n = rows[0].size();
  GeneratorMatrix::Entries entries(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < k; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) {
      throw std::invalid_argument("ragged matrix: row " + std::to_string(r + 1) + " has " +
                                  std::to_string(rows[r].size()) + " entries, expected " +
                                  std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      const auto& v = rows[r][c];
      if (!v.is_number_integer()) {
        throw std::invalid_argument("matrix entry (" + std::to_string(r + 1) + "," +
                                    std::to_string(c + 1) + ") is not an integer");
      }
      entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v.get<std::int64_t>();
    }
  }
  return GeneratorMatrix(q, std::move(entries));
}

GeneratorMatrix parse_generator_matrix(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed code JSON: ") + e.what());
  }
  return generator_matrix_from_json(j);
}

nlohmann::ordered_json to_json(const GeneratorMatrix& g) {
  nlohmann::ordered_json out;
  out["q"] = g.modulus().value();
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < g.entries().rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < g.entries().cols(); ++c) row.push_back(g.entries()(r, c));
    rows.push_back(std::move(row));
  }
  out["matrix"] = std::move(rows);
  return out;
}

RecoverySetCatalog enumerate_recovery_sets(const GeneratorMatrix& g) {
  const FieldModulus q = g.modulus();
  const std::size_t k = g.files();
  const std::size_t n = g.servers();

  std::vector<GfColumn> cols;
  std::vector<bool> nonzero;
  for (std::size_t j = 0; j < n; ++j) {
    cols.push_back(g.column(j));
    nonzero.push_back(!is_zero_column(cols.back()));
  }

  std::vector<std::vector<RecoverySet>> per_file(k);
  for (std::size_t i = 0; i < k; ++i) {
    const GfColumn e = unit_vector(k, i);
    auto& out = per_file[i];

    for (std::size_t j = 0; j < n; ++j) {
      if (!nonzero[j]) continue;
      if (auto c = is_scalar_multiple(e, cols[j], q)) {
        out.push_back(RecoverySet{i, {j}, {{j, *c}}});
      }
    }

    for (std::size_t a = 0; a < n; ++a) {
      if (!nonzero[a]) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!nonzero[b]) continue;
        // alpha * g_a + beta * g_b = e  <=>  e - alpha * g_a = beta * g_b
        for (std::int64_t alpha = 1; alpha < q.value(); ++alpha) {
          const GfColumn rest = axpy(1, e, -alpha, cols[a], q);
          if (is_zero_column(rest)) continue;
          if (auto beta = is_scalar_multiple(rest, cols[b], q)) {
            out.push_back(RecoverySet{i, {a, b}, {{a, FieldElement(alpha, q)}, {b, *beta}}});
            break;
          }
        }
      }
    }
  }
  return RecoverySetCatalog(n, std::move(per_file));
}

bool verify_recovery_set(const GeneratorMatrix& g, const RecoverySet& set) {
  const FieldModulus q = g.modulus();
  GfColumn acc = GfColumn::Zero(static_cast<Eigen::Index>(g.files()));
  for (std::size_t j : set.servers) {
    const auto it = set.coefficients.find(j);
    if (it == set.coefficients.end() || it->second.is_zero()) return false;
    acc = axpy(1, acc, it->second.value(), g.column(j), q);
  }
  return acc == unit_vector(g.files(), set.file);
}

GeneratorMatrix simplex_code(int k) {
  if (k < 2 || k > 10) {
    throw std::invalid_argument("simplex code dimension must be in [2, 10], got " +
                                std::to_string(k));
  }
  const Eigen::Index n = (Eigen::Index{1} << k) - 1;
  GeneratorMatrix::Entries entries(k, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (int r = 0; r < k; ++r) entries(r, j) = ((j + 1) >> r) & 1;
  }
  return GeneratorMatrix(FieldModulus(2), std::move(entries));
}

}  // namespace srr
