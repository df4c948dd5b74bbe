#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lrhorn/numeric.hpp"

namespace lrhorn {

/// Weakly decreasing nonnegative integer vector, zero-padded to a declared
/// ambient length r. The ambient length matters: membership in the semigroup,
/// the triangle grid, and the facet systems all depend on r, not just on the
/// nonzero parts.
struct Partition {
  std::vector<Int> parts;  // always exactly rank() entries

  int rank() const { return static_cast<int>(parts.size()); }

  /// 1-based access, i in [1, r].
  const Int& part(int i) const {
    if (i < 1 || i > rank()) throw std::out_of_range("partition index out of range");
    return parts[static_cast<std::size_t>(i - 1)];
  }

  bool operator==(const Partition&) const = default;
};

inline Partition make_partition(std::vector<Int> parts, int r) {
  if (r < 1) throw std::invalid_argument("ambient length must be positive");
  for (std::size_t p = 0; p + 1 < parts.size(); ++p)
    if (parts[p] < parts[p + 1])
      throw std::invalid_argument("not weakly decreasing");
  if (!parts.empty() && parts.back() < 0)
    throw std::invalid_argument("negative part");
  while (parts.size() > static_cast<std::size_t>(r)) {
    if (parts.back() != 0)
      throw std::invalid_argument("more than r nonzero parts");
    parts.pop_back();
  }
  parts.resize(static_cast<std::size_t>(r), Int(0));
  return Partition{std::move(parts)};
}

/// |p| = sum of all parts.
inline Int weight_size(const Partition& p) {
  return std::accumulate(p.parts.begin(), p.parts.end(), Int(0));
}

/// |p|_I = sum of the parts indexed by I, a subset of [1, r].
inline Int weight_size_on(const Partition& p, const std::vector<int>& indices) {
  Int total = 0;
  for (int i : indices) total += p.part(i);
  return total;
}

struct PartitionTriple {
  Partition lambda, mu, nu;

  int rank() const { return lambda.rank(); }
  bool operator==(const PartitionTriple&) const = default;
};

inline PartitionTriple make_partition_triple(Partition lambda, Partition mu, Partition nu) {
  if (lambda.rank() != mu.rank() || lambda.rank() != nu.rank())
    throw std::invalid_argument("partition triple must share one ambient length");
  return PartitionTriple{std::move(lambda), std::move(mu), std::move(nu)};
}

inline PartitionTriple make_partition_triple(std::vector<Int> lambda, std::vector<Int> mu,
                                             std::vector<Int> nu, int r) {
  return PartitionTriple{make_partition(std::move(lambda), r),
                         make_partition(std::move(mu), r),
                         make_partition(std::move(nu), r)};
}

/// |lambda| = |mu| + |nu|.
inline bool is_homogeneous(const PartitionTriple& t) {
  return weight_size(t.lambda) == weight_size(t.mu) + weight_size(t.nu);
}

/// Appends a zero part to each member, raising the ambient length by one.
inline PartitionTriple embed(const PartitionTriple& t) {
  auto grow = [](Partition p) {
    p.parts.emplace_back(0);
    return p;
  };
  return PartitionTriple{grow(t.lambda), grow(t.mu), grow(t.nu)};
}

/// Inverse of embed. Fails unless every last part is zero.
inline PartitionTriple restrict(const PartitionTriple& t) {
  if (t.rank() < 2) throw std::invalid_argument("cannot restrict below ambient length 1");
  auto shrink = [](Partition p) {
    if (p.parts.back() != 0)
      throw std::invalid_argument("restrict requires zero last parts");
    p.parts.pop_back();
    return p;
  };
  return PartitionTriple{shrink(t.lambda), shrink(t.mu), shrink(t.nu)};
}

/// All partitions of the given weight with at most r parts, in lexicographically
/// decreasing order of part vectors.
inline std::vector<Partition> enumerate_partitions(int r, const Int& weight) {
  if (r < 1) throw std::invalid_argument("ambient length must be positive");
  if (weight < 0) throw std::invalid_argument("negative weight");
  std::vector<Partition> out;
  std::vector<Int> parts;
  auto rec = [&](auto&& self, const Int& remaining, const Int& cap) -> void {
    if (remaining == 0) {
      auto padded = parts;
      padded.resize(static_cast<std::size_t>(r), Int(0));
      out.push_back(Partition{std::move(padded)});
      return;
    }
    if (static_cast<int>(parts.size()) == r) return;
    const Int hi = std::min(remaining, cap);
    for (Int v = hi; v >= 1; --v) {
      parts.push_back(v);
      self(self, remaining - v, v);
      parts.pop_back();
    }
  };
  rec(rec, weight, weight);
  return out;
}

}  // namespace lrhorn
