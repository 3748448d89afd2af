#pragma once

#include "srr/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace srr {

enum class Relation { LessEqual, Equal, GreaterEqual };

template <typename Scalar>
struct Constraint {
  std::vector<Scalar> coefficients;
  Relation relation = Relation::LessEqual;
  Scalar rhs{};
};

/// max c.x subject to row constraints and lower <= x <= upper. Every variable has a
/// finite lower bound (default 0); upper bounds are optional.
template <typename Scalar>
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t variables)
      : variables_(variables), objective_(variables, Scalar(0)), lower_(variables, Scalar(0)),
        upper_(variables) {}

  std::size_t variables() const { return variables_; }
  const std::vector<Scalar>& objective() const { return objective_; }
  const std::vector<Constraint<Scalar>>& constraints() const { return constraints_; }
  const std::vector<Scalar>& lower_bounds() const { return lower_; }
  const std::vector<std::optional<Scalar>>& upper_bounds() const { return upper_; }

  void set_objective(std::vector<Scalar> c) {
    check_length(c.size());
    objective_ = std::move(c);
  }
  void set_objective(std::size_t j, Scalar c) { objective_.at(j) = std::move(c); }

  void add_constraint(std::vector<Scalar> row, Relation rel, Scalar rhs) {
    check_length(row.size());
    constraints_.push_back({std::move(row), rel, std::move(rhs)});
  }
  void set_lower_bound(std::size_t j, Scalar lb) { lower_.at(j) = std::move(lb); }
  void set_upper_bound(std::size_t j, Scalar ub) { upper_.at(j) = std::move(ub); }

  /// Throws std::invalid_argument when any row or the objective has the wrong length.
  void validate() const {
    check_length(objective_.size());
    for (const auto& c : constraints_) check_length(c.coefficients.size());
  }

 private:
  void check_length(std::size_t len) const {
    if (len != variables_) {
      throw std::invalid_argument("linear program row has " + std::to_string(len) +
                                  " coefficients, expected " + std::to_string(variables_));
    }
  }

  std::size_t variables_;
  std::vector<Scalar> objective_;
  std::vector<Constraint<Scalar>> constraints_;
  std::vector<Scalar> lower_;
  std::vector<std::optional<Scalar>> upper_;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

template <typename Scalar>
struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  Scalar value{};                // meaningful when optimal
  std::vector<Scalar> assignment;  // empty unless optimal
};

/// Exact check of every constraint and bound, no tolerance.
template <typename Scalar>
bool satisfies(const LinearProgram<Scalar>& p, const std::vector<Scalar>& x) {
  if (x.size() != p.variables()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < p.lower_bounds()[j]) return false;
    if (p.upper_bounds()[j] && x[j] > *p.upper_bounds()[j]) return false;
  }
  for (const auto& c : p.constraints()) {
    Scalar lhs(0);
    for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coefficients[j] * x[j];
    switch (c.relation) {
      case Relation::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

template <typename Scalar>
Scalar objective_value(const LinearProgram<Scalar>& p, const std::vector<Scalar>& x) {
  Scalar v(0);
  for (std::size_t j = 0; j < x.size(); ++j) v += p.objective()[j] * x[j];
  return v;
}

namespace detail {

/// Dense two-phase simplex tableau. Rows 0..m-1 are constraints, row m is the
/// objective row holding z - c.x = 0; column `rhs_` is the right-hand side.
/// Entering and leaving variables follow Bland's rule.
template <typename Scalar>
class SimplexTableau {
 public:
  explicit SimplexTableau(const LinearProgram<Scalar>& p) : program_(p) {
    p.validate();
    n_ = p.variables();

    // Shift x = y + lower so that y >= 0; upper bounds become rows.
    std::vector<Constraint<Scalar>> rows;
    for (const auto& c : p.constraints()) {
      Scalar rhs = c.rhs;
      for (std::size_t j = 0; j < n_; ++j) rhs -= c.coefficients[j] * p.lower_bounds()[j];
      rows.push_back({c.coefficients, c.relation, rhs});
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (!p.upper_bounds()[j]) continue;
      std::vector<Scalar> row(n_, Scalar(0));
      row[j] = Scalar(1);
      rows.push_back({std::move(row), Relation::LessEqual, *p.upper_bounds()[j] - p.lower_bounds()[j]});
    }
    for (auto& r : rows) {
      if (r.rhs < 0) {
        for (auto& a : r.coefficients) a = -a;
        r.rhs = -r.rhs;
        if (r.relation == Relation::LessEqual) {
          r.relation = Relation::GreaterEqual;
        } else if (r.relation == Relation::GreaterEqual) {
          r.relation = Relation::LessEqual;
        }
      }
    }

    m_ = rows.size();
    std::size_t slacks = 0, artificials = 0;
    for (const auto& r : rows) {
      if (r.relation != Relation::Equal) ++slacks;
      if (r.relation != Relation::LessEqual) ++artificials;
    }
    first_artificial_ = n_ + slacks;
    cols_ = first_artificial_ + artificials;
    rhs_ = static_cast<Eigen::Index>(cols_);
    table_ = MatrixX<Scalar>::Zero(static_cast<Eigen::Index>(m_ + 1), rhs_ + 1);
    basis_.assign(m_, 0);

    std::size_t next_slack = n_, next_art = first_artificial_;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto r = static_cast<Eigen::Index>(i);
      for (std::size_t j = 0; j < n_; ++j) table_(r, static_cast<Eigen::Index>(j)) = rows[i].coefficients[j];
      table_(r, rhs_) = rows[i].rhs;
      switch (rows[i].relation) {
        case Relation::LessEqual:
          table_(r, static_cast<Eigen::Index>(next_slack)) = Scalar(1);
          basis_[i] = next_slack++;
          break;
        case Relation::GreaterEqual:
          table_(r, static_cast<Eigen::Index>(next_slack++)) = Scalar(-1);
          table_(r, static_cast<Eigen::Index>(next_art)) = Scalar(1);
          basis_[i] = next_art++;
          break;
        case Relation::Equal:
          table_(r, static_cast<Eigen::Index>(next_art)) = Scalar(1);
          basis_[i] = next_art++;
          break;
      }
    }
  }

  LPOutcome<Scalar> solve() {
    if (!phase_one()) return {LPStatus::Infeasible, Scalar(0), {}};
    if (!phase_two()) return {LPStatus::Unbounded, Scalar(0), {}};
    LPOutcome<Scalar> out;
    out.status = LPStatus::Optimal;
    out.assignment = extract();
    out.value = objective_value(program_, out.assignment);
    return out;
  }

  std::optional<std::vector<Scalar>> feasible_point() {
    if (!phase_one()) return std::nullopt;
    return extract();
  }

 private:
  Eigen::Index zrow() const { return static_cast<Eigen::Index>(m_); }

  void pivot(std::size_t row, std::size_t col) {
    const auto r = static_cast<Eigen::Index>(row);
    const auto c = static_cast<Eigen::Index>(col);
    const Scalar piv = table_(r, c);
    table_.row(r) /= piv;
    for (Eigen::Index i = 0; i <= zrow(); ++i) {
      if (i == r || table_(i, c) == 0) continue;
      const Scalar factor = table_(i, c);
      table_.row(i) -= factor * table_.row(r);
    }
    basis_[row] = col;
  }

  /// Runs simplex iterations over columns [0, limit). Returns false if unbounded.
  bool iterate(std::size_t limit) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < limit; ++j) {
        if (table_(zrow(), static_cast<Eigen::Index>(j)) < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      const auto c = static_cast<Eigen::Index>(*entering);

      std::optional<std::size_t> leaving;
      Scalar best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        const auto r = static_cast<Eigen::Index>(i);
        if (table_(r, c) <= 0) continue;
        Scalar ratio = table_(r, rhs_) / table_(r, c);
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  bool phase_one() {
    if (phase_one_done_) return phase_one_feasible_;
    phase_one_done_ = true;
    if (first_artificial_ == cols_) return phase_one_feasible_ = true;

    // maximize -(sum of artificials)
    table_.row(zrow()).setZero();
    for (std::size_t j = first_artificial_; j < cols_; ++j) table_(zrow(), static_cast<Eigen::Index>(j)) = Scalar(1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= first_artificial_) table_.row(zrow()) -= table_.row(static_cast<Eigen::Index>(i));
    }
    iterate(cols_);
    if (table_(zrow(), rhs_) != 0) return phase_one_feasible_ = false;

    // Drive zero-valued artificials out of the basis. A row with no usable
    // pivot is redundant; it keeps its artificial, which can never re-enter.
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (table_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
    return phase_one_feasible_ = true;
  }

  bool phase_two() {
    table_.row(zrow()).setZero();
    for (std::size_t j = 0; j < n_; ++j) table_(zrow(), static_cast<Eigen::Index>(j)) = -program_.objective()[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Scalar coef = table_(zrow(), static_cast<Eigen::Index>(basis_[i]));
      if (coef != 0) table_.row(zrow()) -= coef * table_.row(static_cast<Eigen::Index>(i));
    }
    return iterate(first_artificial_);
  }

  std::vector<Scalar> extract() const {
    std::vector<Scalar> x = program_.lower_bounds();
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] += table_(static_cast<Eigen::Index>(i), rhs_);
    }
    return x;
  }

  const LinearProgram<Scalar>& program_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t cols_ = 0;
  std::size_t first_artificial_ = 0;
  Eigen::Index rhs_ = 0;
  MatrixX<Scalar> table_;
  std::vector<std::size_t> basis_;
  bool phase_one_done_ = false;
  bool phase_one_feasible_ = false;
};

}  // namespace detail

/// Two-phase simplex with exact pivots and Bland's rule. The returned assignment
/// is a vertex of the feasible region.
template <typename Scalar>
LPOutcome<Scalar> solve_max(const LinearProgram<Scalar>& p) {
  return detail::SimplexTableau<Scalar>(p).solve();
}

/// Some feasible point (phase one only), or nullopt.
template <typename Scalar>
std::optional<std::vector<Scalar>> feasible(const LinearProgram<Scalar>& p) {
  return detail::SimplexTableau<Scalar>(p).feasible_point();
}

using RationalProgram = LinearProgram<Rational>;

}  // namespace srr
