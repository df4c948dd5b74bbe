#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lrhorn/numeric.hpp"
#include "lrhorn/weight.hpp"

namespace lrhorn {

/// A point of the punctured triangular grid Y_r: i + j + k = r with
/// 0 <= i, j, k < r. The three corners of the full triangle are excluded.
struct TrianglePosition {
  int i = 0, j = 0, k = 0;
  auto operator<=>(const TrianglePosition&) const = default;
};

inline std::size_t position_count(int r) {
  return static_cast<std::size_t>((r + 1) * (r + 2) / 2 - 3);
}

/// Canonical index of (i, j, k) in the (i, j)-lexicographic ordering of Y_r,
/// or -1 when the triple lies outside the grid. This ordering is fixed once
/// and shared by serialization, enumeration output, and form coefficients.
inline long canonical_position_index(int r, int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0 || i >= r || j >= r || k >= r || i + j + k != r) return -1;
  if (i == 0) return j - 1;  // row 0 holds j = 1 .. r-1
  // rows 1 .. i-1 hold r+1-i' entries each, after the r-1 entries of row 0
  const long before = (r - 1) + static_cast<long>(i - 1) * (r + 1) -
                      static_cast<long>(i - 1) * i / 2;
  return before + j;
}

/// All of Y_r in canonical order.
inline std::vector<TrianglePosition> positions(int r) {
  if (r < 1) throw std::invalid_argument("rank must be positive");
  std::vector<TrianglePosition> out;
  for (int i = 0; i < r; ++i)
    for (int j = (i == 0 ? 1 : 0); j <= r - i; ++j) {
      const int k = r - i - j;
      if (j >= r || k < 0 || k >= r) continue;
      out.push_back(TrianglePosition{i, j, k});
    }
  return out;
}

/// Integer family indexed by Y_r, stored in canonical position order.
struct TriangleArray {
  int r = 0;
  std::vector<Int> values;

  /// Value at a grid point; zero for index triples outside Y_r.
  const Int& at(int i, int j, int k) const {
    static const Int zero = 0;
    const long idx = canonical_position_index(r, i, j, k);
    return idx < 0 ? zero : values[static_cast<std::size_t>(idx)];
  }

  bool operator==(const TriangleArray&) const = default;
};

inline TriangleArray make_triangle_array(int r, std::vector<Int> values) {
  if (r < 1) throw std::invalid_argument("rank must be positive");
  if (values.size() != position_count(r))
    throw std::invalid_argument("triangle array needs one value per grid position");
  return TriangleArray{r, std::move(values)};
}

inline TriangleArray zero_triangle_array(int r) {
  return TriangleArray{r, std::vector<Int>(position_count(r), Int(0))};
}

enum class TailDirection { L, M, N };

/// Names one partial line sum: a direction and indices 0 <= t <= s <= r.
struct TailIdentifier {
  TailDirection dir = TailDirection::L;
  int t = 0, s = 0;
  auto operator<=>(const TailIdentifier&) const = default;
};

inline void validate_tail(int r, const TailIdentifier& id) {
  if (id.t < 0 || id.t > id.s || id.s > r)
    throw std::out_of_range("tail indices must satisfy 0 <= t <= s <= r");
}

/// The grid points a tail sums over. Summand indices that leave Y_r (the
/// corner triples) are simply absent; dropping them is the only reading that
/// keeps every 0 <= t <= s <= r well-defined.
inline std::vector<TrianglePosition> tail_positions(int r, const TailIdentifier& id) {
  validate_tail(r, id);
  std::vector<TrianglePosition> out;
  for (int q = id.t; q <= id.s; ++q) {
    TrianglePosition pos;
    switch (id.dir) {
      case TailDirection::L: pos = {r - id.s, q, id.s - q}; break;
      case TailDirection::M: pos = {id.s - q, r - id.s, q}; break;
      case TailDirection::N: pos = {q, id.s - q, r - id.s}; break;
    }
    if (canonical_position_index(r, pos.i, pos.j, pos.k) >= 0) out.push_back(pos);
  }
  return out;
}

/// Every tail identifier in canonical order: direction, then s, then t.
inline std::vector<TailIdentifier> all_tail_identifiers(int r) {
  std::vector<TailIdentifier> out;
  for (TailDirection dir : {TailDirection::L, TailDirection::M, TailDirection::N})
    for (int s = 0; s <= r; ++s)
      for (int t = 0; t <= s; ++t) out.push_back(TailIdentifier{dir, t, s});
  return out;
}

/// Partial line sum l_{ts}, m_{ts} or n_{ts} of the array.
inline Int tail_value(const TriangleArray& y, const TailIdentifier& id) {
  Int total = 0;
  for (const auto& pos : tail_positions(y.r, id)) total += y.at(pos.i, pos.j, pos.k);
  return total;
}

/// True iff every tail of the array is nonnegative.
inline bool is_tail_positive(const TriangleArray& y) {
  for (const auto& id : all_tail_identifiers(y.r))
    if (tail_value(y, id) < 0) return false;
  return true;
}

/// The full line sums (t = 0, 1 <= s <= r-1) in all three directions: the
/// projection of the array onto a fundamental-weight triple.
inline FundamentalWeightTriple line_sums(const TriangleArray& y) {
  const int r = y.r;
  std::vector<Int> l, m, n;
  for (int s = 1; s <= r - 1; ++s) {
    l.push_back(tail_value(y, TailIdentifier{TailDirection::L, 0, s}));
    m.push_back(tail_value(y, TailIdentifier{TailDirection::M, 0, s}));
    n.push_back(tail_value(y, TailIdentifier{TailDirection::N, 0, s}));
  }
  return FundamentalWeightTriple{FundamentalWeight{std::move(l)},
                                 FundamentalWeight{std::move(m)},
                                 FundamentalWeight{std::move(n)}};
}

/// Pointwise sum. Tails are linear, so tail-positivity is preserved and the
/// line sums add coordinatewise.
inline TriangleArray add(const TriangleArray& y1, const TriangleArray& y2) {
  if (y1.r != y2.r) throw std::invalid_argument("rank mismatch");
  TriangleArray out = y1;
  for (std::size_t p = 0; p < out.values.size(); ++p) out.values[p] += y2.values[p];
  return out;
}

namespace detail {

// Depth-first enumeration of the tail-positive integer arrays with prescribed
// full line sums. Rows (constant i) are assigned top to bottom, within a row
// right to left (j descending). In that order:
//   * L-tails are suffixes of the current row, so each assignment closes one
//     of them and the bound y >= -(suffix so far) applies immediately;
//   * M-tails are column prefixes, giving y >= -(prefix above);
//   * N-tails are diagonal suffixes; on a prescribed diagonal their
//     nonnegativity is the same as every prefix staying within the diagonal
//     budget, giving y <= budget - prefix one entry at a time;
//   * the last free entry of any prescribed row, column or diagonal is forced
//     by its budget (column bottoms are the first entry of their row, diagonal
//     bottoms coincide with row ends at j = 0);
//   * a prescribed row also bounds its free entries through the budget, since
//     the still-unassigned entries to the left sit in known column/diagonal
//     envelopes.
// Boundary entries are single-term tails and stay nonnegative automatically;
// interior entries may go negative. Every bound is implied by the constraint
// system, so the search is exhaustive, and every entry has finite bounds at
// the moment it is reached, so the search terminates.
class TailPositiveSearch {
 public:
  explicit TailPositiveSearch(const FundamentalWeightTriple& w)
      : r_(w.rank()),
        row_budget_(static_cast<std::size_t>(r_), 0),
        col_budget_(static_cast<std::size_t>(r_), 0),
        diag_budget_(static_cast<std::size_t>(r_), 0),
        col_prefix_(static_cast<std::size_t>(r_), 0),
        diag_prefix_(static_cast<std::size_t>(r_), 0) {
    for (int s = 1; s <= r_ - 1; ++s) {
      row_budget_[static_cast<std::size_t>(r_ - s)] = w.lbar.coord(s);
      col_budget_[static_cast<std::size_t>(r_ - s)] = w.mbar.coord(s);
      diag_budget_[static_cast<std::size_t>(r_ - s)] = w.nbar.coord(s);
    }
    for (int i = 0; i < r_; ++i) {
      const int j_hi = i == 0 ? r_ - 1 : r_ - i;
      const int j_lo = i == 0 ? 1 : 0;
      for (int j = j_hi; j >= j_lo; --j) {
        Entry e;
        e.i = i;
        e.j = j;
        e.k = r_ - i - j;
        e.canonical = canonical_position_index(r_, e.i, e.j, e.k);
        e.first_in_row = (j == j_hi);
        e.closes_row = (i >= 1 && j == 0);
        e.closes_col = (j >= 1 && i == r_ - j);
        e.closes_diag = (e.k >= 1 && i == r_ - e.k);
        order_.push_back(e);
      }
    }
    values_.assign(position_count(r_), Int(0));
  }

  void run(const std::function<void(const std::vector<Int>&)>& emit) {
    emit_ = &emit;
    step(0);
    emit_ = nullptr;
  }

 private:
  struct Entry {
    int i = 0, j = 0, k = 0;
    long canonical = -1;
    bool first_in_row = false;
    bool closes_row = false;
    bool closes_col = false;
    bool closes_diag = false;
  };

  void step(std::size_t e) {
    if (e == order_.size()) {
      (*emit_)(values_);
      return;
    }
    const Entry& entry = order_[e];
    if (entry.first_in_row) row_suffix_ = 0;
    const Int above = col_prefix_[static_cast<std::size_t>(entry.j)];

    Int lo = -std::min(row_suffix_, above);
    std::optional<Int> hi;
    if (entry.k >= 1)
      hi = diag_budget_[static_cast<std::size_t>(entry.k)] -
           diag_prefix_[static_cast<std::size_t>(entry.k)];
    if (entry.i >= 1) {
      Int left_lower = 0, left_upper = 0;
      for (int jl = 0; jl < entry.j; ++jl) {
        left_lower -= col_prefix_[static_cast<std::size_t>(jl)];
        const int kl = r_ - entry.i - jl;
        left_upper += diag_budget_[static_cast<std::size_t>(kl)] -
                      diag_prefix_[static_cast<std::size_t>(kl)];
      }
      const Int remaining = row_budget_[static_cast<std::size_t>(entry.i)] - row_suffix_;
      const Int row_hi = remaining - left_lower;
      hi = hi ? std::min(*hi, row_hi) : row_hi;
      lo = std::max(lo, Int(remaining - left_upper));
    }

    std::optional<Int> forced;
    bool contradiction = false;
    auto meet = [&](Int v) {
      if (forced && *forced != v) contradiction = true;
      forced = std::move(v);
    };
    if (entry.closes_row) meet(row_budget_[static_cast<std::size_t>(entry.i)] - row_suffix_);
    if (entry.closes_col) meet(col_budget_[static_cast<std::size_t>(entry.j)] - above);
    if (entry.closes_diag)
      meet(diag_budget_[static_cast<std::size_t>(entry.k)] -
           diag_prefix_[static_cast<std::size_t>(entry.k)]);
    if (contradiction) return;

    Int from, to;
    if (forced) {
      if (*forced < lo || (hi && *forced > *hi)) return;
      from = *forced;
      to = *forced;
    } else {
      if (!hi) throw std::logic_error("unbounded entry in tail-positive search");
      if (*hi < lo) return;
      from = lo;
      to = *hi;
    }

    for (Int v = from; v <= to; ++v) {
      values_[static_cast<std::size_t>(entry.canonical)] = v;
      const Int saved_suffix = row_suffix_;
      row_suffix_ += v;
      col_prefix_[static_cast<std::size_t>(entry.j)] += v;
      diag_prefix_[static_cast<std::size_t>(entry.k)] += v;
      step(e + 1);
      row_suffix_ = saved_suffix;
      col_prefix_[static_cast<std::size_t>(entry.j)] -= v;
      diag_prefix_[static_cast<std::size_t>(entry.k)] -= v;
    }
  }

  int r_;
  std::vector<Entry> order_;
  std::vector<Int> row_budget_, col_budget_, diag_budget_;
  std::vector<Int> col_prefix_, diag_prefix_;
  Int row_suffix_ = 0;
  std::vector<Int> values_;
  const std::function<void(const std::vector<Int>&)>* emit_ = nullptr;
};

}  // namespace detail

/// Number of tail-positive integer arrays whose full line sums equal the
/// given weight triple; the polyhedral expression for the coefficient
/// attached to the triple.
inline Int count_tail_positive(const FundamentalWeightTriple& w) {
  Int count = 0;
  detail::TailPositiveSearch search(w);
  search.run([&](const std::vector<Int>&) { ++count; });
  return count;
}

/// The arrays behind count_tail_positive, sorted by their canonical value
/// vectors so the output order is reproducible.
inline std::vector<TriangleArray> enumerate_tail_positive(const FundamentalWeightTriple& w) {
  std::vector<TriangleArray> out;
  detail::TailPositiveSearch search(w);
  search.run([&](const std::vector<Int>& values) {
    out.push_back(TriangleArray{w.rank(), values});
  });
  std::sort(out.begin(), out.end(),
            [](const TriangleArray& a, const TriangleArray& b) { return a.values < b.values; });
  return out;
}

}  // namespace lrhorn
