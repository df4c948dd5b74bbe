#pragma once

#include <vector>

#include "lrhorn/numeric.hpp"
#include "lrhorn/partition.hpp"

namespace lrhorn {

namespace detail {

struct SkewCell {
  int row = 0;        // 1-based row of the skew shape
  long above = -1;    // index of the in-shape cell directly above, or -1
  long right = -1;    // index of the in-shape cell directly to the right, or -1
};

// Cells of lambda/mu listed in reverse reading order: rows top to bottom,
// each row right to left. Filling in this order keeps the semistandard
// checks local (the neighbours above and to the right are already placed)
// and lets the lattice-word prefix counts update one letter at a time.
inline std::vector<SkewCell> skew_cells(const PartitionTriple& t) {
  const int r = t.rank();
  std::vector<SkewCell> cells;
  std::vector<long> prev_row_index;  // index by column-1 for the previous row
  std::vector<long> cur_row_index;
  long prev_cols = 0;
  for (int row = 1; row <= r; ++row) {
    const long lo = static_cast<long>(to_size(t.mu.part(row)));   // first filled col - 1
    const long hi = static_cast<long>(to_size(t.lambda.part(row)));
    cur_row_index.assign(static_cast<std::size_t>(hi), -1);
    for (long col = hi; col > lo; --col) {
      SkewCell cell;
      cell.row = row;
      if (col <= prev_cols) cell.above = prev_row_index[static_cast<std::size_t>(col - 1)];
      if (col < hi) cell.right = cur_row_index[static_cast<std::size_t>(col)];
      cur_row_index[static_cast<std::size_t>(col - 1)] = static_cast<long>(cells.size());
      cells.push_back(cell);
    }
    prev_row_index = cur_row_index;
    prev_cols = hi;
  }
  return cells;
}

// Backtracking count of semistandard fillings with lattice reverse reading
// word and content nu. Stops at the first complete filling when count_all is
// false.
inline Int lr_search(const PartitionTriple& t, bool count_all) {
  if (!is_homogeneous(t)) return 0;
  const int r = t.rank();
  for (int i = 1; i <= r; ++i)
    if (t.mu.part(i) > t.lambda.part(i)) return 0;  // mu not contained in lambda

  const auto cells = skew_cells(t);
  int max_value = 0;
  for (int v = r; v >= 1; --v)
    if (t.nu.part(v) > 0) {
      max_value = v;
      break;
    }
  if (cells.empty()) return max_value == 0 ? 1 : 0;

  std::vector<long> budget(static_cast<std::size_t>(max_value) + 1, 0);
  for (int v = 1; v <= max_value; ++v)
    budget[static_cast<std::size_t>(v)] = static_cast<long>(to_size(t.nu.part(v)));

  std::vector<int> fill(cells.size(), 0);
  std::vector<long> used(static_cast<std::size_t>(max_value) + 1, 0);
  Int count = 0;

  auto rec = [&](auto&& self, std::size_t c) -> bool {
    if (c == cells.size()) {
      ++count;
      return !count_all;  // signal the caller to stop after one witness
    }
    const SkewCell& cell = cells[c];
    const int lo = cell.above >= 0 ? fill[static_cast<std::size_t>(cell.above)] + 1 : 1;
    const int hi = cell.right >= 0 ? fill[static_cast<std::size_t>(cell.right)] : max_value;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (used[vi] == budget[vi]) continue;
      if (v > 1 && used[vi - 1] <= used[vi]) continue;  // lattice prefix would fail
      ++used[vi];
      fill[c] = v;
      const bool stop = self(self, c + 1);
      --used[vi];
      if (stop) return true;
    }
    return false;
  };
  rec(rec, 0);
  return count;
}

}  // namespace detail

/// Littlewood-Richardson coefficient c^lambda_{mu nu}: the number of
/// semistandard skew tableaux of shape lambda/mu and content nu whose reverse
/// reading word (right to left, top to bottom) is a lattice word. Zero when
/// mu is not contained in lambda or |lambda| != |mu| + |nu|.
inline Int lr_coefficient(const PartitionTriple& t) {
  return detail::lr_search(t, /*count_all=*/true);
}

/// True iff c^lambda_{mu nu} > 0; stops at the first witness tableau.
inline bool lr_positive(const PartitionTriple& t) {
  return detail::lr_search(t, /*count_all=*/false) > 0;
}

}  // namespace lrhorn
