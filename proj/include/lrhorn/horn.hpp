#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lrhorn/numeric.hpp"
#include "lrhorn/partition.hpp"
#include "lrhorn/subsets.hpp"
#include "lrhorn/tableau.hpp"

namespace lrhorn {

/// The inequality |lambda|_I <= |mu|_J + |nu|_K attached to a consistent
/// subset triple.
struct HornInequality {
  SubsetTriple subsets;

  bool operator==(const HornInequality&) const = default;
};

/// A query point for the eigenvalue cone: three weakly decreasing rational
/// vectors of a common length. Entries may be negative; arbitrary Hermitian
/// spectra are in scope, unlike partitions.
struct ConeQuery {
  int r = 0;
  std::vector<Rat> lambda, mu, nu;
};

inline void validate_decreasing(const std::vector<Rat>& v) {
  for (std::size_t p = 0; p + 1 < v.size(); ++p)
    if (v[p] < v[p + 1]) throw std::invalid_argument("not weakly decreasing");
}

inline ConeQuery make_cone_query(std::vector<Rat> lambda, std::vector<Rat> mu,
                                 std::vector<Rat> nu) {
  if (lambda.empty() || lambda.size() != mu.size() || lambda.size() != nu.size())
    throw std::invalid_argument("cone query vectors must share one positive length");
  validate_decreasing(lambda);
  validate_decreasing(mu);
  validate_decreasing(nu);
  return ConeQuery{static_cast<int>(lambda.size()), std::move(lambda), std::move(mu),
                   std::move(nu)};
}

inline ConeQuery to_cone_query(const PartitionTriple& t) {
  auto lift = [](const Partition& p) {
    std::vector<Rat> v;
    v.reserve(p.parts.size());
    for (const Int& x : p.parts) v.emplace_back(x);
    return v;
  };
  return ConeQuery{t.rank(), lift(t.lambda), lift(t.mu), lift(t.nu)};
}

/// Consistency by the definition: the attached partition triple generates a
/// positive coefficient at its own ambient length.
inline bool is_lr_consistent(const SubsetTriple& st) {
  return lr_positive(PartitionTriple{rho(st.I), rho(st.J), rho(st.K)});
}

/// All inequalities with consistent subset triples of cardinality
/// 1 <= s <= r-1, in canonical order (cardinality, then I, J, K
/// lexicographically). Cardinality r would reproduce the total-size equality,
/// which is emitted separately as the homogeneity constraint.
inline std::vector<HornInequality> generate_facets(int r) {
  if (r < 1) throw std::invalid_argument("rank must be positive");
  std::vector<HornInequality> out;
  for (int s = 1; s <= r - 1; ++s) {
    const auto subsets = subsets_of_size(r, s);
    for (const auto& I : subsets)
      for (const auto& J : subsets)
        for (const auto& K : subsets) {
          SubsetTriple st{r, I, J, K};
          if (is_lr_consistent(st)) out.push_back(HornInequality{std::move(st)});
        }
  }
  std::sort(out.begin(), out.end(), [](const HornInequality& a, const HornInequality& b) {
    if (a.subsets.cardinality() != b.subsets.cardinality())
      return a.subsets.cardinality() < b.subsets.cardinality();
    return a.subsets < b.subsets;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

template <typename Value, typename Vector>
Value sum_on(const Vector& v, const std::vector<int>& subset) {
  Value total = 0;
  for (int i : subset) total += v[static_cast<std::size_t>(i - 1)];
  return total;
}

}  // namespace detail

/// Exact membership in the cone cut out by the homogeneity equality and the
/// facet inequalities.
inline bool cone_contains(const ConeQuery& q, const std::vector<HornInequality>& facets) {
  Rat total_lambda = 0, total_mu = 0, total_nu = 0;
  for (const auto& x : q.lambda) total_lambda += x;
  for (const auto& x : q.mu) total_mu += x;
  for (const auto& x : q.nu) total_nu += x;
  if (total_lambda != total_mu + total_nu) return false;
  for (const auto& facet : facets) {
    if (facet.subsets.r != q.r) throw std::invalid_argument("facet rank mismatch");
    const Rat lhs = detail::sum_on<Rat>(q.lambda, facet.subsets.I);
    const Rat rhs = detail::sum_on<Rat>(q.mu, facet.subsets.J) +
                    detail::sum_on<Rat>(q.nu, facet.subsets.K);
    if (lhs > rhs) return false;
  }
  return true;
}

/// Integer fast path for partition triples; same predicate as the rational
/// overload.
inline bool cone_contains(const PartitionTriple& t, const std::vector<HornInequality>& facets) {
  if (!is_homogeneous(t)) return false;
  for (const auto& facet : facets) {
    if (facet.subsets.r != t.rank()) throw std::invalid_argument("facet rank mismatch");
    const Int lhs = detail::sum_on<Int>(t.lambda.parts, facet.subsets.I);
    const Int rhs = detail::sum_on<Int>(t.mu.parts, facet.subsets.J) +
                    detail::sum_on<Int>(t.nu.parts, facet.subsets.K);
    if (lhs > rhs) return false;
  }
  return true;
}

/// Consistency through the recursively generated cone at the subsets' own
/// cardinality: homogeneity of the attached partitions plus every facet
/// inequality of that rank.
inline bool is_he_consistent(const SubsetTriple& st) {
  const int s = st.cardinality();
  const PartitionTriple attached{rho(st.I), rho(st.J), rho(st.K)};
  return cone_contains(to_cone_query(attached), generate_facets(s));
}

/// Companion of cone_contains for reports: positivity of the coefficient.
inline bool semigroup_contains(const PartitionTriple& t) { return lr_positive(t); }

struct SaturationCandidate {
  PartitionTriple triple;
  // (stretch factor N, coefficient of the N-fold triple) for N = 2..max.
  std::vector<std::pair<int, Int>> stretched;
};

struct SaturationReport {
  int r = 0;
  Int max_weight;
  int max_stretch = 1;
  Int triples_scanned;
  Int in_cone;
  std::vector<SaturationCandidate> candidates;  // in cone, coefficient zero
  bool any_positive_stretch = false;
};

inline PartitionTriple scale_triple(const PartitionTriple& t, int factor) {
  auto scale = [&](Partition p) {
    for (Int& x : p.parts) x *= factor;
    return p;
  };
  return PartitionTriple{scale(t.lambda), scale(t.mu), scale(t.nu)};
}

/// Scans every homogeneous partition triple with |lambda| <= max_weight at
/// the given length. Triples inside the cone whose coefficient vanishes are
/// the candidates; each is stretched by N = 2..max_stretch and the stretched
/// coefficients recorded. A positive stretched coefficient would witness a
/// cone point missing from the semigroup.
inline SaturationReport saturation_scan(int r, const Int& max_weight, int max_stretch) {
  if (r < 1 || max_weight < 0 || max_stretch < 1)
    throw std::invalid_argument("bad saturation scan bounds");
  const auto facets = generate_facets(r);
  SaturationReport report;
  report.r = r;
  report.max_weight = max_weight;
  report.max_stretch = max_stretch;
  report.triples_scanned = 0;
  report.in_cone = 0;

  for (Int n = 0; n <= max_weight; ++n) {
    const auto lambdas = enumerate_partitions(r, n);
    for (Int m = 0; m <= n; ++m) {
      const auto mus = enumerate_partitions(r, m);
      const auto nus = enumerate_partitions(r, n - m);
      for (const auto& lambda : lambdas)
        for (const auto& mu : mus)
          for (const auto& nu : nus) {
            const PartitionTriple t{lambda, mu, nu};
            ++report.triples_scanned;
            if (!cone_contains(t, facets)) continue;
            ++report.in_cone;
            if (lr_positive(t)) continue;
            SaturationCandidate candidate{t, {}};
            for (int stretch = 2; stretch <= max_stretch; ++stretch) {
              const Int coeff = lr_coefficient(scale_triple(t, stretch));
              if (coeff > 0) report.any_positive_stretch = true;
              candidate.stretched.emplace_back(stretch, coeff);
            }
            report.candidates.push_back(std::move(candidate));
          }
    }
  }
  return report;
}

}  // namespace lrhorn
