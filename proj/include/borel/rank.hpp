#ifndef BOREL_RANK_HPP
#define BOREL_RANK_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace borel {

/// A sparse row: (column, coefficient) pairs, columns distinct.
using sparse_row = std::vector<std::pair<long, mpq_class>>;

/// Rank over Q of the span of the given rows, by sparse Gaussian elimination.
/// Each stored pivot row is normalized with leading coefficient 1 at its
/// smallest column, so elimination strictly advances the leading column.
inline long rank_of_rows(const std::vector<sparse_row>& rows) {
  std::map<long, std::map<long, mpq_class>> pivots;  // leading column -> reduced row
  long rank = 0;
  for (const sparse_row& raw : rows) {
    std::map<long, mpq_class> row;
    for (const auto& [c, v] : raw)
      if (v != 0) row[c] += v;
    while (!row.empty()) {
      if (row.begin()->second == 0) {
        row.erase(row.begin());
        continue;
      }
      long pc = row.begin()->first;
      auto piv = pivots.find(pc);
      if (piv == pivots.end()) {
        mpq_class lead = row.begin()->second;
        for (auto& [c, v] : row) v /= lead;
        pivots.emplace(pc, std::move(row));
        ++rank;
        break;
      }
      mpq_class factor = row.begin()->second;
      for (const auto& [c, v] : piv->second) {
        auto [slot, inserted] = row.try_emplace(c, 0);
        slot->second -= factor * v;
        if (slot->second == 0) row.erase(slot);
      }
    }
  }
  return rank;
}

}  // namespace borel

#endif
