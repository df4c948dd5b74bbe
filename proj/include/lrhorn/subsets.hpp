#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lrhorn/numeric.hpp"
#include "lrhorn/partition.hpp"

namespace lrhorn {

/// Three equal-cardinality subsets of [1, r], each sorted increasingly.
struct SubsetTriple {
  int r = 0;
  std::vector<int> I, J, K;

  int cardinality() const { return static_cast<int>(I.size()); }
  bool operator==(const SubsetTriple&) const = default;
  auto operator<=>(const SubsetTriple&) const = default;
};

inline void validate_subset(const std::vector<int>& subset, int r) {
  for (std::size_t p = 0; p < subset.size(); ++p) {
    if (subset[p] < 1 || subset[p] > r) throw std::invalid_argument("subset element out of [1, r]");
    if (p > 0 && subset[p] <= subset[p - 1])
      throw std::invalid_argument("subset must be strictly increasing");
  }
}

inline SubsetTriple make_subset_triple(int r, std::vector<int> I, std::vector<int> J,
                                       std::vector<int> K) {
  if (r < 1) throw std::invalid_argument("rank must be positive");
  if (I.size() != J.size() || I.size() != K.size())
    throw std::invalid_argument("subsets must have equal cardinality");
  if (I.empty()) throw std::invalid_argument("subsets must be nonempty");
  validate_subset(I, r);
  validate_subset(J, r);
  validate_subset(K, r);
  return SubsetTriple{r, std::move(I), std::move(J), std::move(K)};
}

/// The partition (i_s - s, ..., i_2 - 2, i_1 - 1) attached to a nonempty
/// subset I = {i_1 < ... < i_s}; it lives at ambient length s.
inline Partition rho(const std::vector<int>& subset) {
  if (subset.empty()) throw std::invalid_argument("rho of the empty subset");
  const int s = static_cast<int>(subset.size());
  std::vector<Int> parts;
  parts.reserve(subset.size());
  for (int p = s; p >= 1; --p) parts.emplace_back(subset[static_cast<std::size_t>(p - 1)] - p);
  return make_partition(std::move(parts), s);
}

/// #(I_{> x}): how many elements of the sorted subset exceed x.
inline int count_greater(const std::vector<int>& subset, int x) {
  return static_cast<int>(subset.end() - std::upper_bound(subset.begin(), subset.end(), x));
}

/// All size-s subsets of [1, r] in lexicographic order.
inline std::vector<std::vector<int>> subsets_of_size(int r, int s) {
  std::vector<std::vector<int>> out;
  if (s < 0 || s > r) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= r - (s - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace lrhorn
