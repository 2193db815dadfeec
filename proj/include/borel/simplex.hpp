#ifndef BOREL_SIMPLEX_HPP
#define BOREL_SIMPLEX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "borel/errors.hpp"

namespace borel {

/// Exact two-phase simplex for
///     minimize c.x  subject to  A x >= b,  x >= 0,
/// over the rationals, with Bland's pivoting rule (guaranteed termination).
/// Returns nullopt when the constraints are infeasible. Unbounded objectives
/// are reported as an error; the feasibility problems solved here are always
/// bounded below.
class simplex_solver {
public:
  std::optional<std::vector<mpq_class>> minimize(const std::vector<std::vector<mpq_class>>& a,
                                                 const std::vector<mpq_class>& b,
                                                 const std::vector<mpq_class>& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    // columns: x (n) | surplus (m) | artificial (m) | rhs
    cols_ = n + 2 * m + 1;
    rows_.assign(m, std::vector<mpq_class>(cols_, 0));
    basis_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i].size() != n) throw error("simplex: ragged constraint matrix");
      int sign = b[i] >= 0 ? 1 : -1;  // keep rhs non-negative
      for (std::size_t j = 0; j < n; ++j) rows_[i][j] = sign * a[i][j];
      rows_[i][n + i] = -sign;           // surplus of the >= constraint
      rows_[i][n + m + i] = 1;           // artificial, initial basis
      rows_[i][cols_ - 1] = sign * b[i];
      basis_[i] = n + m + i;
    }
    // phase 1: minimize the artificial sum
    std::vector<mpq_class> phase1(cols_ - 1, 0);
    for (std::size_t i = 0; i < m; ++i) phase1[n + m + i] = 1;
    run(phase1, n + 2 * m);
    if (objective_value(phase1) != 0) return std::nullopt;
    // drive leftover basic artificials out (or drop redundant rows)
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] < n + m) continue;
      std::size_t enter = cols_ - 1;
      for (std::size_t j = 0; j < n + m; ++j)
        if (rows_[i][j] != 0) {
          enter = j;
          break;
        }
      if (enter == cols_ - 1) continue;  // zero row, harmless
      pivot(i, enter);
    }
    // phase 2: original objective, artificial columns frozen
    std::vector<mpq_class> phase2(cols_ - 1, 0);
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    run(phase2, n + m);
    std::vector<mpq_class> x(n, 0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis_[i] < n) x[basis_[i]] = rows_[i][cols_ - 1];
    return x;
  }

private:
  void run(const std::vector<mpq_class>& cost, std::size_t usable_cols) {
    for (;;) {
      std::vector<mpq_class> reduced(usable_cols, 0);
      for (std::size_t j = 0; j < usable_cols; ++j) reduced[j] = cost[j];
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const mpq_class& cb = cost[basis_[i]];
        if (cb == 0) continue;
        for (std::size_t j = 0; j < usable_cols; ++j) reduced[j] -= cb * rows_[i][j];
      }
      std::size_t enter = usable_cols;
      for (std::size_t j = 0; j < usable_cols; ++j)  // Bland: first negative
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      if (enter == usable_cols) return;  // optimal
      std::size_t leave = rows_.size();
      mpq_class best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        mpq_class ratio = rows_[i][cols_ - 1] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_.size()) throw error("simplex: unbounded objective");
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    mpq_class inv = rows_[row][col];
    for (auto& v : rows_[row]) v /= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      mpq_class f = rows_[i][col];
      for (std::size_t j = 0; j < cols_; ++j) rows_[i][j] -= f * rows_[row][j];
    }
    basis_[row] = col;
  }

  mpq_class objective_value(const std::vector<mpq_class>& cost) const {
    mpq_class v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += cost[basis_[i]] * rows_[i][cols_ - 1];
    return v;
  }

  std::vector<std::vector<mpq_class>> rows_;
  std::vector<std::size_t> basis_;
  std::size_t cols_ = 0;
};

}  // namespace borel

#endif
