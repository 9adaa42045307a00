#pragma once

// Exact two-phase revised simplex over rationals with Bland's rule. The
// constraint matrix has small integer entries and is stored by column; right
// hand sides and objective are rational.

#include <cstdint>
#include <vector>

#include "maxdiam/geometry.hpp"

namespace maxdiam {

enum class RowSense { less_equal, greater_equal, equal };

struct LinearProgram {
  /// Maximize objective . x subject to the rows and x >= 0.
  std::size_t variable_count = 0;
  std::vector<Rational> objective;
  /// Per variable, its nonzero entries as (row, coefficient).
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;
  std::vector<RowSense> senses;
  std::vector<Rational> rhs;

  explicit LinearProgram(std::size_t variables = 0);
  std::size_t add_variable(Rational cost = 0);
  /// Appends a row and returns its index.
  std::size_t add_row(const std::vector<std::pair<std::size_t, std::int64_t>>& coefficients, RowSense sense,
                      Rational rhs);
  std::size_t row_count() const { return senses.size(); }
};

enum class LpStatus { optimal, unbounded, infeasible };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  /// Values of the structural variables; set when optimal.
  std::vector<Rational> x;
  std::uint64_t pivots = 0;
};

LpResult solve_lp(const LinearProgram& lp);

}  // namespace maxdiam
