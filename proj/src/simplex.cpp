#include "maxdiam/simplex.hpp"

#include <optional>
#include <stdexcept>

namespace maxdiam {

LinearProgram::LinearProgram(std::size_t variables)
    : variable_count(variables), objective(variables), columns(variables) {}

std::size_t LinearProgram::add_variable(Rational cost) {
  objective.push_back(std::move(cost));
  columns.emplace_back();
  return variable_count++;
}

std::size_t LinearProgram::add_row(const std::vector<std::pair<std::size_t, std::int64_t>>& coefficients,
                                   RowSense sense, Rational value) {
  const auto row = static_cast<std::uint32_t>(senses.size());
  for (auto& [var, coeff] : coefficients) {
    if (var >= variable_count) throw std::out_of_range("LinearProgram::add_row: unknown variable");
    if (coeff != 0) columns[var].emplace_back(row, coeff);
  }
  senses.push_back(sense);
  rhs.push_back(std::move(value));
  return row;
}

namespace {

class RevisedSimplex {
 public:
  explicit RevisedSimplex(const LinearProgram& lp) : lp_(lp), m_(lp.row_count()), n_(lp.variable_count) {
    sign_.assign(m_, 1);
    slack_of_.assign(m_, -1);
    artificial_of_.assign(m_, -1);
    std::size_t next = n_;
    std::vector<RowSense> sense(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      sense[i] = lp.senses[i];
      if (lp.rhs[i] < 0) {
        sign_[i] = -1;
        if (sense[i] == RowSense::less_equal)
          sense[i] = RowSense::greater_equal;
        else if (sense[i] == RowSense::greater_equal)
          sense[i] = RowSense::less_equal;
      }
      if (sense[i] != RowSense::equal) {
        slack_of_[i] = static_cast<long>(next++);
        extra_.push_back({static_cast<std::uint32_t>(i), sense[i] == RowSense::less_equal ? 1 : -1});
      }
    }
    first_artificial_ = next;
    for (std::size_t i = 0; i < m_; ++i)
      if (sense[i] != RowSense::less_equal) {
        artificial_of_[i] = static_cast<long>(next++);
        extra_.push_back({static_cast<std::uint32_t>(i), 1});
      }
    total_ = next;

    basis_.resize(m_);
    basic_.assign(total_, false);
    binv_.assign(m_, std::vector<Rational>(m_, Rational(0)));
    x_basic_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      basis_[i] = artificial_of_[i] >= 0 ? static_cast<std::size_t>(artificial_of_[i])
                                          : static_cast<std::size_t>(slack_of_[i]);
      basic_[basis_[i]] = true;
      binv_[i][i] = 1;
      x_basic_[i] = sign_[i] * lp.rhs[i];
    }
  }

  LpResult run() {
    LpResult result;
    if (first_artificial_ < total_) {
      std::vector<Rational> cost(total_, Rational(0));
      for (std::size_t j = first_artificial_; j < total_; ++j) cost[j] = -1;
      iterate(cost, total_);
      Rational infeasibility = 0;
      for (std::size_t i = 0; i < m_; ++i)
        if (basis_[i] >= first_artificial_) infeasibility += x_basic_[i];
      if (infeasibility > 0) {
        result.status = LpStatus::infeasible;
        result.pivots = pivots_;
        return result;
      }
      drive_out_artificials();
    }
    std::vector<Rational> cost(total_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) cost[j] = lp_.objective[j];
    const bool bounded = iterate(cost, first_artificial_);
    result.pivots = pivots_;
    if (!bounded) {
      result.status = LpStatus::unbounded;
      return result;
    }
    result.status = LpStatus::optimal;
    result.x.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) result.x[basis_[i]] = x_basic_[i];
    result.value = 0;
    for (std::size_t j = 0; j < n_; ++j) result.value += lp_.objective[j] * result.x[j];
    return result;
  }

 private:
  struct Unit {
    std::uint32_t row;
    std::int64_t coeff;
  };

  // Column j of the normalised constraint matrix, as (row, coefficient).
  template <class F>
  void for_column(std::size_t j, F&& f) const {
    if (j < n_) {
      for (auto& [row, coeff] : lp_.columns[j]) f(row, sign_[row] * coeff);
    } else {
      const Unit& u = extra_[j - n_];
      f(u.row, u.coeff);
    }
  }

  std::vector<Rational> column_in_basis(std::size_t j) const {
    std::vector<Rational> d(m_, Rational(0));
    for_column(j, [&](std::uint32_t row, std::int64_t a) {
      for (std::size_t i = 0; i < m_; ++i)
        if (binv_[i][row] != 0) d[i] += binv_[i][row] * a;
    });
    return d;
  }

  void pivot(std::size_t p, std::size_t entering, const std::vector<Rational>& d) {
    const Rational dp = d[p];
    for (auto& v : binv_[p]) v /= dp;
    x_basic_[p] /= dp;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == p || d[i] == 0) continue;
      for (std::size_t c = 0; c < m_; ++c)
        if (binv_[p][c] != 0) binv_[i][c] -= d[i] * binv_[p][c];
      x_basic_[i] -= d[i] * x_basic_[p];
    }
    basic_[basis_[p]] = false;
    basic_[entering] = true;
    basis_[p] = entering;
    ++pivots_;
  }

  // Maximises cost over columns below `limit`; false when unbounded.
  bool iterate(const std::vector<Rational>& cost, std::size_t limit) {
    for (;;) {
      std::vector<Rational> y(m_, Rational(0));
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& cb = cost[basis_[i]];
        if (cb == 0) continue;
        for (std::size_t c = 0; c < m_; ++c)
          if (binv_[i][c] != 0) y[c] += cb * binv_[i][c];
      }
      // Bland: lowest-index column with positive reduced cost enters.
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < limit && !entering; ++j) {
        if (basic_[j]) continue;
        Rational reduced = cost[j];
        for_column(j, [&](std::uint32_t row, std::int64_t a) {
          if (y[row] != 0) reduced -= y[row] * a;
        });
        if (reduced > 0) entering = j;
      }
      if (!entering) return true;
      const std::vector<Rational> d = column_in_basis(*entering);
      // Bland: among minimum ratios the lowest-index basic variable leaves.
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (d[i] <= 0) continue;
        Rational ratio = x_basic_[i] / d[i];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, *entering, d);
    }
  }

  void drive_out_artificials() {
    for (std::size_t p = 0; p < m_; ++p) {
      if (basis_[p] < first_artificial_) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (basic_[j]) continue;
        std::vector<Rational> d = column_in_basis(j);
        if (d[p] != 0) {
          pivot(p, j, d);
          break;
        }
      }
      // A row with no such column is redundant; its artificial stays at zero.
    }
  }

  const LinearProgram& lp_;
  std::size_t m_, n_;
  std::vector<int> sign_;
  std::vector<long> slack_of_, artificial_of_;
  std::vector<Unit> extra_;
  std::size_t first_artificial_ = 0, total_ = 0;
  std::vector<std::size_t> basis_;
  std::vector<bool> basic_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<Rational> x_basic_;
  std::uint64_t pivots_ = 0;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  if (lp.objective.size() != lp.variable_count || lp.columns.size() != lp.variable_count)
    throw std::invalid_argument("solve_lp: inconsistent program");
  return RevisedSimplex(lp).run();
}

}  // namespace maxdiam
