#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lrhorn/numeric.hpp"
#include "lrhorn/partition.hpp"

namespace lrhorn {

/// Nonnegative coordinates (l_1, ..., l_{r-1}) in the fundamental-weight basis
/// of rank r. Rank 1 has an empty coordinate vector.
struct FundamentalWeight {
  std::vector<Int> coords;  // length rank - 1
  int rank() const { return static_cast<int>(coords.size()) + 1; }

  const Int& coord(int s) const {
    if (s < 1 || s > rank() - 1) throw std::out_of_range("weight coordinate out of range");
    return coords[static_cast<std::size_t>(s - 1)];
  }

  bool operator==(const FundamentalWeight&) const = default;
};

inline FundamentalWeight make_fundamental_weight(std::vector<Int> coords, int r) {
  if (r < 1) throw std::invalid_argument("rank must be positive");
  if (coords.size() != static_cast<std::size_t>(r - 1))
    throw std::invalid_argument("weight must have exactly r-1 coordinates");
  for (const Int& c : coords)
    if (c < 0) throw std::invalid_argument("weight coordinates must be nonnegative");
  return FundamentalWeight{std::move(coords)};
}

struct FundamentalWeightTriple {
  FundamentalWeight lbar, mbar, nbar;

  int rank() const { return lbar.rank(); }
  bool operator==(const FundamentalWeightTriple&) const = default;
};

inline FundamentalWeightTriple make_fundamental_weight_triple(FundamentalWeight lbar,
                                                              FundamentalWeight mbar,
                                                              FundamentalWeight nbar) {
  if (lbar.rank() != mbar.rank() || lbar.rank() != nbar.rank())
    throw std::invalid_argument("weight triple must share one rank");
  return FundamentalWeightTriple{std::move(lbar), std::move(mbar), std::move(nbar)};
}

/// Converts a homogeneous partition triple to fundamental-weight coordinates:
///   l_s = lambda_{r-s} - lambda_{r-s+1},  m_s = mu_s - mu_{s+1},  n_s = nu_s - nu_{s+1}.
/// The first member enters through consecutive differences of the reversed
/// parts; the other two through direct differences. All indices stay in [1, r].
inline FundamentalWeightTriple to_fundamental(const PartitionTriple& t) {
  if (!is_homogeneous(t))
    throw std::invalid_argument("homogeneity violation: |lambda| != |mu| + |nu|");
  const int r = t.rank();
  std::vector<Int> l, m, n;
  l.reserve(r - 1);
  m.reserve(r - 1);
  n.reserve(r - 1);
  for (int s = 1; s <= r - 1; ++s) {
    l.push_back(t.lambda.part(r - s) - t.lambda.part(r - s + 1));
    m.push_back(t.mu.part(s) - t.mu.part(s + 1));
    n.push_back(t.nu.part(s) - t.nu.part(s + 1));
  }
  return FundamentalWeightTriple{FundamentalWeight{std::move(l)},
                                 FundamentalWeight{std::move(m)},
                                 FundamentalWeight{std::move(n)}};
}

/// Inverse of to_fundamental given the constants the projection forgets
/// (the last part of each partition). Cumulative sums rebuild the parts.
inline PartitionTriple from_fundamental(const FundamentalWeightTriple& w, const Int& lambda_r,
                                        const Int& mu_r, const Int& nu_r) {
  const int r = w.rank();
  std::vector<Int> lambda(static_cast<std::size_t>(r)), mu(static_cast<std::size_t>(r)),
      nu(static_cast<std::size_t>(r));
  lambda[static_cast<std::size_t>(r - 1)] = lambda_r;
  mu[static_cast<std::size_t>(r - 1)] = mu_r;
  nu[static_cast<std::size_t>(r - 1)] = nu_r;
  for (int s = 1; s <= r - 1; ++s) {
    // lambda_{r-s} = lambda_r + l_1 + ... + l_s; mu_s = mu_r + m_s + ... + m_{r-1}.
    lambda[static_cast<std::size_t>(r - s - 1)] =
        lambda[static_cast<std::size_t>(r - s)] + w.lbar.coord(s);
    mu[static_cast<std::size_t>(r - s - 1)] =
        mu[static_cast<std::size_t>(r - s)] + w.mbar.coord(r - s);
    nu[static_cast<std::size_t>(r - s - 1)] =
        nu[static_cast<std::size_t>(r - s)] + w.nbar.coord(r - s);
  }
  return make_partition_triple(make_partition(std::move(lambda), r),
                               make_partition(std::move(mu), r),
                               make_partition(std::move(nu), r));
}

/// True iff sum_s s * (l_s + m_s + n_s) is divisible by the rank, i.e. the
/// combined weight lies in the root lattice.
inline bool is_radical(const FundamentalWeightTriple& w) {
  const int r = w.rank();
  Int total = 0;
  for (int s = 1; s <= r - 1; ++s)
    total += Int(s) * (w.lbar.coord(s) + w.mbar.coord(s) + w.nbar.coord(s));
  return total % r == 0;
}

/// Coordinate reversal: output coordinate s is input coordinate r - s.
inline FundamentalWeight dualize(const FundamentalWeight& w) {
  auto coords = w.coords;
  std::reverse(coords.begin(), coords.end());
  return FundamentalWeight{std::move(coords)};
}

inline FundamentalWeightTriple dualize(const FundamentalWeightTriple& w) {
  return FundamentalWeightTriple{dualize(w.lbar), dualize(w.mbar), dualize(w.nbar)};
}

}  // namespace lrhorn
