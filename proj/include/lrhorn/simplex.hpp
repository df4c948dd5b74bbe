#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "lrhorn/numeric.hpp"

namespace lrhorn {

/// Exact-rational feasibility of A x = b, x >= 0, by a dense phase-1 simplex
/// with Bland's anti-cycling rule. Returns a basic feasible point or nullopt.
/// No floating point anywhere: the interesting inputs sit exactly on cone
/// boundaries, where a rounded pivot would flip the answer.
inline std::optional<std::vector<Rat>> solve_nonnegative_exact(
    const std::vector<std::vector<Rat>>& matrix, const std::vector<Rat>& rhs,
    std::size_t cols) {
  const std::size_t rows = matrix.size();
  if (rhs.size() != rows) throw std::invalid_argument("rhs size mismatch");
  for (const auto& row : matrix)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  if (rows == 0) return std::vector<Rat>(cols, Rat(0));

  // Tableau [A | I | b] with nonnegative b; artificial variables form the
  // starting basis and the phase-1 objective is their sum.
  const std::size_t total = cols + rows;
  std::vector<std::vector<Rat>> tab(rows, std::vector<Rat>(total + 1, Rat(0)));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = rhs[r] < 0;
    for (std::size_t c = 0; c < cols; ++c) tab[r][c] = flip ? -matrix[r][c] : matrix[r][c];
    tab[r][cols + r] = 1;
    tab[r][total] = flip ? -rhs[r] : rhs[r];
    basis[r] = cols + r;
  }

  auto reduced_cost = [&](std::size_t col) {
    // cost 1 on artificials, 0 otherwise
    Rat d = col >= cols ? 1 : 0;
    for (std::size_t r = 0; r < rows; ++r)
      if (basis[r] >= cols) d -= tab[r][col];
    return d;
  };

  while (true) {
    std::size_t enter = total;
    for (std::size_t c = 0; c < total; ++c) {
      if (reduced_cost(c) < 0) {
        enter = c;
        break;  // Bland: first improving column
      }
    }
    if (enter == total) break;

    std::size_t leave = rows;
    Rat best_ratio = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (tab[r][enter] <= 0) continue;
      const Rat ratio = tab[r][total] / tab[r][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave]))
        leave = r, best_ratio = ratio;
    }
    if (leave == rows)
      throw std::logic_error("phase-1 objective unbounded; inconsistent tableau");

    const Rat pivot = tab[leave][enter];
    for (std::size_t c = 0; c <= total; ++c) tab[leave][c] /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || tab[r][enter] == 0) continue;
      const Rat factor = tab[r][enter];
      for (std::size_t c = 0; c <= total; ++c) tab[r][c] -= factor * tab[leave][c];
    }
    basis[leave] = enter;
  }

  Rat objective = 0;
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] >= cols) objective += tab[r][total];
  if (objective != 0) return std::nullopt;

  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] < cols) x[basis[r]] = tab[r][total];
  return x;
}

}  // namespace lrhorn
